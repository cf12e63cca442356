#include "radokit/solution_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace radokit {

const char* outcome_name(SearchResult::Outcome o) {
  switch (o) {
    case SearchResult::Outcome::found:
      return "found";
    case SearchResult::Outcome::not_found:
      return "not_found";
    case SearchResult::Outcome::budget_exhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

namespace {

__extension__ using Wide = __int128;

class Searcher {
 public:
  Searcher(const DkSystem& s, const Coloring& chi, std::int64_t radius, std::uint64_t budget)
      : sys_(s), radius_(radius), budget_(budget) {
    require_nondegenerate(s);
    if (radius < 0) throw InputError("search radius must be nonnegative");
    if (!chi.covers(-radius, radius))
      throw ColoringDomainError("coloring " + chi.describe() + " is not total on [-" + std::to_string(radius) + ", " +
                                std::to_string(radius) + "]");
    vars_ = s.variable_order();
    const std::size_t n = vars_.size();
    dim_ = s.dim();
    // |a| * radius * n must stay far inside 128-bit partial sums
    const Int limit = Int(1) << 60;
    coef_.assign(n * dim_, 0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t d = 0; d < dim_; ++d) {
        const Int& a = s.coefficient(vars_[v].group, vars_[v].index)[d];
        if (abs(a) >= limit) throw InputError("coefficient too large for the solution search");
        coef_[v * dim_ + d] = to_int64(a);
      }
    remaining_abs_.assign((n + 1) * dim_, 0);
    for (std::size_t v = n; v-- > 0;)
      for (std::size_t d = 0; d < dim_; ++d)
        remaining_abs_[v * dim_ + d] = remaining_abs_[(v + 1) * dim_ + d] + std::abs(coef_[v * dim_ + d]);
    color_of_.resize(static_cast<std::size_t>(2 * radius + 1));
    for (std::int64_t z = -radius; z <= radius; ++z) color_of_[static_cast<std::size_t>(z + radius)] = chi(z);
    for (auto c : color_of_) palette_.push_back(c);
    std::sort(palette_.begin(), palette_.end());
    palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
  }

  SearchResult run() {
    SearchResult result;
    std::vector<std::int64_t> schedule;
    for (std::int64_t r = 1; r < radius_; r *= 2) schedule.push_back(r);
    schedule.push_back(radius_);
    for (auto r : schedule) {
      prepare(r);
      const auto outcome = attempt();
      result.nodes = nodes_;
      if (outcome == SearchResult::Outcome::found) {
        result.outcome = outcome;
        result.radius = radius_;
        result.witness = witness();
        result.group_colors = group_colors_;
        return result;
      }
      if (outcome == SearchResult::Outcome::budget_exhausted) {
        result.outcome = outcome;
        result.radius = radius_;
        return result;
      }
    }
    result.outcome = SearchResult::Outcome::not_found;
    result.radius = radius_;
    return result;
  }

 private:
  Color color(std::int64_t z) const { return color_of_[static_cast<std::size_t>(z + radius_)]; }

  void prepare(std::int64_t r) {
    current_ = r;
    classes_.clear();
    std::vector<std::int64_t> order{0};
    for (std::int64_t m = 1; m <= r; ++m) {
      order.push_back(m);
      order.push_back(-m);
    }
    for (auto c : palette_) classes_[c];
    for (auto z : order) classes_[color(z)].push_back(z);
  }

  SearchResult::Outcome attempt() {
    values_.assign(vars_.size(), 0);
    group_colors_.assign(sys_.groups(), 0);
    sums_.assign(dim_, 0);
    nonzero_ = 0;
    exhausted_ = false;
    if (dfs(0)) return SearchResult::Outcome::found;
    return exhausted_ ? SearchResult::Outcome::budget_exhausted : SearchResult::Outcome::not_found;
  }

  bool within_bounds(std::size_t next) const {
    for (std::size_t d = 0; d < dim_; ++d) {
      const Wide s = sums_[d];
      const Wide bound = static_cast<Wide>(remaining_abs_[next * dim_ + d]) * current_;
      if (s > bound || -s > bound) return false;
    }
    return true;
  }

  bool tick() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  void apply(std::size_t v, std::int64_t z, int sign) {
    for (std::size_t d = 0; d < dim_; ++d) sums_[d] += static_cast<Wide>(sign) * coef_[v * dim_ + d] * z;
    if (z != 0) nonzero_ += sign;
  }

  // The last variable is determined by the others whenever its coefficient
  // vector is nonzero.
  bool solve_last(std::size_t v) {
    if (!tick()) return false;
    std::size_t pivot = 0;
    while (coef_[v * dim_ + pivot] == 0) ++pivot;
    const Wide a = coef_[v * dim_ + pivot];
    const Wide s = sums_[pivot];
    if (s % a != 0) return false;
    const Wide z = -s / a;
    if (z > current_ || z < -current_) return false;
    for (std::size_t d = 0; d < dim_; ++d)
      if (sums_[d] + static_cast<Wide>(coef_[v * dim_ + d]) * z != 0) return false;
    const auto zz = static_cast<std::int64_t>(z);
    if (nonzero_ == 0 && zz == 0) return false;
    const auto [g, i] = vars_[v];
    if (i == 0) {
      group_colors_[g] = color(zz);
    } else if (color(zz) != group_colors_[g]) {
      return false;
    }
    values_[v] = zz;
    return true;
  }

  bool last_is_solvable(std::size_t v) const {
    for (std::size_t d = 0; d < dim_; ++d)
      if (coef_[v * dim_ + d] != 0) return true;
    return false;
  }

  bool try_value(std::size_t v, std::int64_t z) {
    if (!tick()) return false;
    apply(v, z, +1);
    values_[v] = z;
    bool ok = false;
    if (within_bounds(v + 1)) {
      if (v + 1 == vars_.size()) {
        ok = nonzero_ > 0 && std::all_of(sums_.begin(), sums_.end(), [](Wide x) { return x == 0; });
      } else {
        ok = dfs(v + 1);
      }
    }
    if (!ok) apply(v, z, -1);
    return ok;
  }

  bool dfs(std::size_t v) {
    const bool last = v + 1 == vars_.size();
    if (last && last_is_solvable(v)) return solve_last(v);
    const auto [g, i] = vars_[v];
    if (i == 0) {
      for (auto c : palette_) {
        const auto& values = classes_.at(c);
        if (values.empty()) continue;
        group_colors_[g] = c;
        for (auto z : values) {
          if (try_value(v, z)) return true;
          if (exhausted_) return false;
        }
      }
      return false;
    }
    for (auto z : classes_.at(group_colors_[g])) {
      if (try_value(v, z)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  Assignment witness() const {
    Assignment a;
    a.values.resize(sys_.groups());
    for (std::size_t v = 0; v < vars_.size(); ++v) a.values[vars_[v].group].push_back(values_[v]);
    return a;
  }

  const DkSystem& sys_;
  std::int64_t radius_;
  std::uint64_t budget_;
  std::size_t dim_ = 0;
  std::vector<VarIndex> vars_;
  std::vector<std::int64_t> coef_;
  std::vector<std::int64_t> remaining_abs_;
  std::vector<Color> color_of_;
  std::vector<Color> palette_;
  std::map<Color, std::vector<std::int64_t>> classes_;
  std::int64_t current_ = 0;

  std::vector<std::int64_t> values_;
  std::vector<Color> group_colors_;
  std::vector<Wide> sums_;
  int nonzero_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SearchResult find_semi_mono_solution(const DkSystem& s, const Coloring& chi, std::int64_t radius,
                                     std::uint64_t node_budget) {
  return Searcher(s, chi, radius, node_budget).run();
}

std::vector<std::uint64_t> FalsifyReport::primes_without_witness() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries)
    if (e.result.outcome != SearchResult::Outcome::found) out.push_back(e.prime);
  return out;
}

std::vector<std::uint64_t> FalsifyReport::primes_with_witness() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries)
    if (e.result.outcome == SearchResult::Outcome::found) out.push_back(e.prime);
  return out;
}

FalsifyReport falsify_semi_regularity(const DkSystem& s, const std::vector<std::uint64_t>& primes,
                                      std::int64_t radius, std::uint64_t node_budget, unsigned jobs) {
  require_nondegenerate(s);
  for (auto p : primes)
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  FalsifyReport report;
  report.radius = radius;
  report.entries = parallel_indexed<FalsifyEntry>(primes.size(), jobs, [&](std::size_t i) {
    return FalsifyEntry{primes[i], find_semi_mono_solution(s, Coloring::smod(primes[i]), radius, node_budget)};
  });
  return report;
}

SemiRadoResult semi_rado_number(const DkSystem& s, unsigned colors, std::int64_t max_radius,
                                std::uint64_t enumeration_cap, std::uint64_t node_budget) {
  require_nondegenerate(s);
  if (colors == 0) throw InputError("semi-Rado numbers need at least one color");
  if (max_radius < 1) throw InputError("max radius must be at least 1");
  SemiRadoResult result;
  result.max_radius = max_radius;
  for (std::int64_t r = 1; r <= max_radius; ++r) {
    const auto width = static_cast<std::size_t>(2 * r + 1);
    // colors^width, saturating
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < width && total <= enumeration_cap; ++i) total *= colors;
    if (total > enumeration_cap)
      throw InfeasibleError(std::to_string(colors) + "^" + std::to_string(width) +
                            " colorings exceed the enumeration cap of " + std::to_string(enumeration_cap));
    // restricted growth strings: color ids appear in order of first use
    std::vector<Color> table(width, 0);
    std::vector<Color> prefix_max(width, 0);
    std::optional<Coloring> avoiding;
    for (;;) {
      ++result.colorings_checked;
      auto chi = Coloring::table(-r, r, table);
      const auto found = find_semi_mono_solution(s, chi, r, node_budget);
      if (found.outcome == SearchResult::Outcome::budget_exhausted)
        throw InfeasibleError("search budget exhausted while checking a coloring of radius " + std::to_string(r));
      if (found.outcome == SearchResult::Outcome::not_found) {
        avoiding = std::move(chi);
        break;
      }
      std::size_t pos = width;
      while (pos > 1) {
        --pos;
        const Color cap = std::min<Color>(static_cast<Color>(colors) - 1, prefix_max[pos - 1] + 1);
        if (table[pos] < cap) break;
        if (pos == 1) {
          pos = 0;
          break;
        }
      }
      if (pos == 0 || width == 1) break;
      ++table[pos];
      for (std::size_t q = pos; q < width; ++q) {
        if (q > pos) table[q] = 0;
        prefix_max[q] = std::max(prefix_max[q - 1], table[q]);
      }
    }
    if (!avoiding) {
      result.value = r;
      return result;
    }
    result.avoiding_colorings.push_back(std::move(*avoiding));
  }
  return result;
}

}  // namespace radokit
