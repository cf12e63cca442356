#pragma once

// Turns smod-p solution data into a k-columns certificate: solutions are
// split into p-adic rank levels, primes sharing a level shape are pooled, the
// level conditions become linear forms in the weight ratios, and a common
// rational root of those forms is scaled to integer weights.

#include "radokit/condition_checker.hpp"
#include "radokit/integer.hpp"
#include "radokit/solution_search.hpp"
#include "radokit/system_model.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace radokit {

/// Thrown by rank_partition when a group is not monochromatic under sigma_p.
class NotMonochromaticError : public InputError {
 public:
  NotMonochromaticError(std::size_t group, const std::string& what) : InputError(what), group_(group) {}
  std::size_t group() const { return group_; }

 private:
  std::size_t group_;
};

struct RankPartition {
  std::uint64_t prime = 0;
  /// Levels of nonzero values, ordered by increasing p-adic order.
  LevelPartition finite;
  std::vector<std::uint32_t> orders;  // orders[s] = m_{p,s}
  /// Per group, indices whose value is zero (order infinity).
  std::vector<std::vector<std::size_t>> infinite;
  std::vector<std::uint64_t> alpha;  // per-group smod-p color

  bool has_infinite_level() const;
  /// finite levels followed by the zero level when it is nonempty
  LevelPartition shape() const;
};

RankPartition rank_partition(const DkSystem& s, const Assignment& a, std::uint64_t p);

/// Checks the level congruences implied by an exact solution, with
/// beta_j = alpha_{j*}^{-1} alpha_j mod p:
///   level 1:  sum_j beta_j A_{j,1} == 0 (mod p)
///   level s:  alpha_{j*}^{-1} sum_{s'<s} sum z a + p^{m_s} sum_j beta_j A_{j,s} == 0 (mod p^{m_s+1})
bool verify_rank_congruences(const DkSystem& s, const Assignment& a, std::uint64_t p, const RankPartition& rp,
                             std::size_t anchor);

/// constant + sum_v coeffs[v] * z_v
struct LinearForm {
  Int constant;
  IntVector coeffs;

  bool is_zero() const;
  Rational evaluate(const RatVector& z) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct FormOrigin {
  std::size_t level = 0;                  // zero-based
  std::optional<std::size_t> coordinate;  // level-1 forms: coordinate d
  std::vector<std::size_t> columns;       // higher levels: minor columns
};

struct PolynomialSystem {
  std::size_t anchor = 0;                    // j*, zero-based
  std::vector<std::size_t> variable_groups;  // z_v belongs to group variable_groups[v]
  std::vector<LinearForm> forms;
  std::vector<FormOrigin> origins;  // parallel to forms
  std::vector<FormOrigin> dropped;  // minors that vanished identically
  std::vector<std::size_t> skipped_levels;  // levels whose earlier span is all of Q^D
};

/// Level-1 coordinate forms and the maximal minors of each higher level's
/// W matrix (first row A_{j*,s} + sum z_j A_{j,s}, remaining rows a greedy
/// basis of the earlier vectors). `p` may omit indices; only listed ones are
/// used.
PolynomialSystem build_polynomial_system(const DkSystem& s, const LevelPartition& p, std::size_t anchor);

struct Obstruction {
  Int constant;        // positive
  IntVector multipliers;  // sum multipliers_i * f_i == constant identically
};

struct RootResult {
  std::optional<RatVector> root;
  std::optional<Obstruction> obstruction;
};

RootResult common_rational_root(const std::vector<LinearForm>& forms);

/// delta_1 = lcm of denominators, delta_{v+1} = gamma_v * delta_1.
IntVector scale_to_integer_delta(const RatVector& gamma);

struct PrimeEvidence {
  std::uint64_t prime = 0;
  SearchResult search;
  std::optional<RankPartition> ranks;
};

struct PrimeClass {
  LevelPartition shape;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> evidence;  // indices into PrimeGrouping::evidence
};

struct PrimeGrouping {
  std::vector<PrimeEvidence> evidence;  // one per input prime, input order
  std::vector<PrimeClass> classes;      // largest first, then smallest least prime
  std::vector<std::uint64_t> unsolved;
};

PrimeGrouping group_primes_by_partition(const DkSystem& s, const std::vector<std::uint64_t>& primes,
                                        std::int64_t radius, std::uint64_t node_budget = 2'000'000,
                                        unsigned jobs = 1);

struct CongruenceCheck {
  std::uint64_t prime = 0;
  std::size_t anchor = 0;
  bool holds = false;
};

struct ExtractionAttempt {
  std::size_t class_index = 0;
  std::size_t anchor = 0;
  PolynomialSystem polynomials;
  RootResult root;
  std::optional<IntVector> scaled_delta;
  std::string failure;  // empty on success
};

struct ExtractionReport {
  std::optional<KCertificate> certificate;
  std::string diagnostic;
  PrimeGrouping grouping;
  std::vector<ExtractionAttempt> attempts;
  std::vector<CongruenceCheck> congruences;
};

struct ExtractionOptions {
  std::uint64_t node_budget = 2'000'000;  // per prime
  unsigned jobs = 1;
};

ExtractionReport extract_certificate(const DkSystem& s, const std::vector<std::uint64_t>& primes, std::int64_t radius,
                                     const ExtractionOptions& options = {});

nlohmann::ordered_json linear_form_to_json(const LinearForm& f, const std::vector<std::size_t>& variable_groups);
nlohmann::ordered_json extraction_report_to_json(const ExtractionReport& report);

}  // namespace radokit
