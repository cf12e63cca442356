#pragma once

// Bounded-window search for semi-monochromatic solutions, window-relative
// falsification over smod-p colorings, and toy-scale semi-Rado numbers.

#include "radokit/colorings.hpp"
#include "radokit/system_model.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace radokit {

struct SearchResult {
  enum class Outcome { found, not_found, budget_exhausted };

  Outcome outcome = Outcome::not_found;
  Assignment witness;             // valid when found
  std::vector<Color> group_colors;  // valid when found
  std::int64_t radius = 0;        // window radius searched
  std::uint64_t nodes = 0;
};

const char* outcome_name(SearchResult::Outcome o);

/// Searches assignments with every |z_{j,i}| <= radius. Groups are handled in
/// order; each group first fixes its color class, then walks values by
/// increasing magnitude (positive before negative). Radii 1, 2, 4, ... are
/// tried before the full radius, so small witnesses come first. not_found is
/// exhaustive for the window.
SearchResult find_semi_mono_solution(const DkSystem& s, const Coloring& chi, std::int64_t radius,
                                     std::uint64_t node_budget = 10'000'000);

struct FalsifyEntry {
  std::uint64_t prime = 0;
  SearchResult result;
};

struct FalsifyReport {
  std::int64_t radius = 0;
  std::vector<FalsifyEntry> entries;  // in input prime order

  std::vector<std::uint64_t> primes_without_witness() const;
  std::vector<std::uint64_t> primes_with_witness() const;
};

FalsifyReport falsify_semi_regularity(const DkSystem& s, const std::vector<std::uint64_t>& primes,
                                      std::int64_t radius, std::uint64_t node_budget = 10'000'000,
                                      unsigned jobs = 1);

/// Thrown when a request would enumerate more colorings than the cap allows.
class InfeasibleError : public InputError {
 public:
  using InputError::InputError;
};

struct SemiRadoResult {
  std::optional<std::int64_t> value;  // least qualifying R, if any R <= max_radius qualifies
  std::int64_t max_radius = 0;
  /// For each R tried without success, a coloring of [-R, R] with no witness.
  std::vector<Coloring> avoiding_colorings;
  std::uint64_t colorings_checked = 0;
};

/// Least R <= max_radius such that every r-coloring of [-R, R] admits a
/// semi-monochromatic solution inside the window. Colorings are enumerated up
/// to renaming of colors.
SemiRadoResult semi_rado_number(const DkSystem& s, unsigned colors, std::int64_t max_radius,
                                std::uint64_t enumeration_cap = 1ULL << 22,
                                std::uint64_t node_budget = 10'000'000);

/// Runs fn(i) for i in [0, n) on up to `jobs` threads; results keep index order.
template <typename T, typename F>
std::vector<T> parallel_indexed(std::size_t n, unsigned jobs, F&& fn);

}  // namespace radokit

#include "radokit/detail/parallel.hpp"
