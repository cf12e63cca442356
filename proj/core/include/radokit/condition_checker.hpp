#pragma once

// Decision procedures for the classic columns condition and its k-partite
// extension. Every positive answer carries an integer certificate that the
// matching verify_* function checks with exact identities.

#include "radokit/integer.hpp"
#include "radokit/matrix.hpp"
#include "radokit/system_model.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace radokit {

/// Ordered levels shared by all groups: levels[s][j] is I_{j,s} (zero-based,
/// ascending). A level may be empty in some groups but not in all of them.
struct LevelPartition {
  std::vector<std::vector<std::vector<std::size_t>>> levels;

  std::size_t level_count() const { return levels.size(); }
  friend bool operator==(const LevelPartition&, const LevelPartition&) = default;
};

bool is_valid_partition(const DkSystem& s, const LevelPartition& p);

/// A_{j,s}: sum of group j's coefficient vectors in level s.
IntVector level_sum(const DkSystem& s, const LevelPartition& p, std::size_t level, std::size_t group);

struct CombinationTerm {
  VarIndex var;
  Int coef;
  friend bool operator==(const CombinationTerm&, const CombinationTerm&) = default;
};

struct KCertificate {
  LevelPartition partition;
  IntVector delta;
  /// combos[s] expresses sum_j delta_j A_{j,s} over vectors of earlier levels;
  /// combos[0] is always empty.
  std::vector<std::vector<CombinationTerm>> combos;

  friend bool operator==(const KCertificate&, const KCertificate&) = default;
};

/// Classic certificate over columns a_1..a_n. For level s >= 2,
/// scales[s] * A_s == sum of combos[s]; scales[0] is 1 and A_1 == 0. A
/// positive scale is what makes rational span membership checkable with
/// integers only.
struct ColumnsCertificate {
  std::vector<std::vector<std::size_t>> levels;
  std::vector<Int> scales;
  std::vector<std::vector<std::pair<std::size_t, Int>>> combos;
};

std::optional<ColumnsCertificate> check_columns_condition(const IntMatrix& m);
bool verify_columns_certificate(const IntMatrix& m, const ColumnsCertificate& cert);

struct KSearchLimits {
  std::size_t max_levels = 0;  // 0: no cap beyond the variable count
  std::uint64_t node_budget = 10'000'000;
};

struct KSearchResult {
  enum class Outcome { found, refuted, exhausted };
  Outcome outcome = Outcome::refuted;
  std::optional<KCertificate> certificate;
  std::uint64_t nodes = 0;
  std::size_t levels_searched = 0;
};

/// Returns the first certificate in enumeration order whose scaled system
/// satisfies the classic condition; if no certificate has that property, the
/// first certificate found at all.
KSearchResult check_k_columns_condition(const DkSystem& s, const KSearchLimits& limits = {});

/// True iff scaled_system(s, delta) satisfies the classic columns condition.
bool scaled_system_satisfies_columns(const DkSystem& s, const IntVector& delta);

bool verify_k_certificate(const DkSystem& s, const KCertificate& cert);

/// Basis of the rational weights delta satisfying both level conditions for
/// the given partition. Empty means only delta = 0 works.
std::vector<RatVector> delta_space(const DkSystem& s, const LevelPartition& p);

/// Picks a combination of the basis whose support is the union of the
/// basis supports; deterministic.
RatVector max_support_combination(const std::vector<RatVector>& basis);

/// Completes a partition and a nonzero rational weight direction into an
/// integer certificate: the direction is made primitive, then multiplied by
/// the smallest positive integer for which every level's target is an
/// integer combination of earlier vectors. Returns nullopt if the direction
/// does not satisfy the rational conditions.
std::optional<KCertificate> assemble_certificate(const DkSystem& s, const LevelPartition& p, const RatVector& direction);

/// Smallest lambda >= 1 and integer coefficients with lambda * target equal to
/// the combination of `vectors`; nullopt when target is outside the Q-span.
std::optional<std::pair<Int, IntVector>> smallest_integer_multiple_in_span(const std::vector<IntVector>& vectors,
                                                                           const IntVector& target);

nlohmann::ordered_json certificate_to_json(const KCertificate& cert);
KCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::ordered_json columns_certificate_to_json(const ColumnsCertificate& cert);
nlohmann::ordered_json partition_to_json(const LevelPartition& p);
LevelPartition partition_from_json(const nlohmann::json& j);

}  // namespace radokit
