#include "radokit/condition_checker.hpp"

#include "radokit/exact_linalg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace radokit {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

void add_scaled(IntVector& acc, const IntVector& v, const Int& f) {
  if (f == 0) return;
  for (std::size_t d = 0; d < acc.size(); ++d) acc[d] += f * v[d];
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> divs{1};
  for (const auto& p : prime_factors(n)) {
    Int rest = n;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    const std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t b = 0; b < base; ++b) divs.push_back(divs[b] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::optional<std::pair<Int, IntVector>> smallest_integer_multiple_in_span(const std::vector<IntVector>& vectors,
                                                                           const IntVector& target) {
  std::vector<RatVector> rational;
  rational.reserve(vectors.size());
  for (const auto& v : vectors) rational.push_back(to_rational(v));
  const auto coeffs = in_rational_span(rational, to_rational(target));
  if (!coeffs) return std::nullopt;
  const Int bound = lcm_of_denominators(*coeffs);
  for (const auto& lambda : divisors(bound)) {
    IntVector scaled = target;
    for (auto& x : scaled) x *= lambda;
    if (auto c = in_integer_span(vectors, scaled)) return std::make_pair(lambda, std::move(*c));
  }
  // bound itself always works; reaching here means the rational solve lied
  throw std::logic_error("integer multiple search failed for an in-span target");
}

// ---- classic columns condition ------------------------------------------

std::optional<ColumnsCertificate> check_columns_condition(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t dim = m.rows();
  if (n == 0) throw InputError("check_columns_condition needs at least one column");
  if (n > 30) throw InputError("check_columns_condition supports at most 30 columns");
  std::vector<IntVector> cols(n);
  for (std::size_t c = 0; c < n; ++c) cols[c] = m.column(c);

  // Greedy peeling is complete: if some ordered partition works, its first
  // level not yet used always offers a subset of the unused columns whose sum
  // lies in the span of the used ones.
  ColumnsCertificate cert;
  std::vector<std::size_t> used;
  std::vector<std::size_t> remaining(n);
  for (std::size_t c = 0; c < n; ++c) remaining[c] = c;
  while (!remaining.empty()) {
    std::vector<IntVector> used_vectors;
    for (auto c : used) used_vectors.push_back(cols[c]);
    const auto ann = used.empty() ? [&] {
      std::vector<IntVector> id(dim, IntVector(dim));
      for (std::size_t d = 0; d < dim; ++d) id[d][d] = 1;
      return id;
    }()
                                  : annihilator(used_vectors, dim);
    std::vector<IntVector> projected(remaining.size(), IntVector(ann.size()));
    for (std::size_t r = 0; r < remaining.size(); ++r)
      for (std::size_t a = 0; a < ann.size(); ++a)
        for (std::size_t d = 0; d < dim; ++d) projected[r][a] += ann[a][d] * cols[remaining[r]][d];

    const std::uint64_t full = (std::uint64_t{1} << remaining.size()) - 1;
    std::optional<std::uint64_t> pick;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      IntVector sum(ann.size());
      for (std::size_t r = 0; r < remaining.size(); ++r)
        if ((mask >> r) & 1U)
          for (std::size_t a = 0; a < ann.size(); ++a) sum[a] += projected[r][a];
      if (is_zero(sum)) {
        pick = mask;
        break;
      }
    }
    if (!pick) return std::nullopt;

    std::vector<std::size_t> level;
    std::vector<std::size_t> rest;
    for (std::size_t r = 0; r < remaining.size(); ++r) ((*pick >> r) & 1U ? level : rest).push_back(remaining[r]);
    IntVector target(dim);
    for (auto c : level) add_scaled(target, cols[c], 1);
    auto found = smallest_integer_multiple_in_span(used_vectors, target);
    if (!found) throw std::logic_error("projected subset sum vanished but span test failed");
    std::vector<std::pair<std::size_t, Int>> terms;
    for (std::size_t u = 0; u < used.size(); ++u)
      if (found->second[u] != 0) terms.emplace_back(used[u], found->second[u]);
    cert.levels.push_back(level);
    cert.scales.push_back(found->first);
    cert.combos.push_back(std::move(terms));
    used.insert(used.end(), level.begin(), level.end());
    remaining = std::move(rest);
  }
  return cert;
}

bool verify_columns_certificate(const IntMatrix& m, const ColumnsCertificate& cert) {
  const std::size_t n = m.cols();
  const std::size_t t = cert.levels.size();
  if (t == 0 || cert.scales.size() != t || cert.combos.size() != t) return false;
  std::vector<int> level_of(n, -1);
  for (std::size_t s = 0; s < t; ++s) {
    if (cert.levels[s].empty()) return false;
    for (auto c : cert.levels[s]) {
      if (c >= n || level_of[c] != -1) return false;
      level_of[c] = static_cast<int>(s);
    }
  }
  if (std::any_of(level_of.begin(), level_of.end(), [](int l) { return l < 0; })) return false;
  for (std::size_t s = 0; s < t; ++s) {
    if (cert.scales[s] <= 0) return false;
    IntVector lhs(m.rows());
    for (auto c : cert.levels[s]) add_scaled(lhs, m.column(c), cert.scales[s]);
    IntVector rhs(m.rows());
    for (const auto& [c, coef] : cert.combos[s]) {
      if (c >= n || level_of[c] >= static_cast<int>(s)) return false;
      add_scaled(rhs, m.column(c), coef);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

// ---- k-columns condition ------------------------------------------------

bool is_valid_partition(const DkSystem& s, const LevelPartition& p) {
  if (p.levels.empty()) return false;
  std::vector<std::vector<bool>> seen(s.groups());
  for (std::size_t j = 0; j < s.groups(); ++j) seen[j].assign(s.group_size(j), false);
  for (const auto& level : p.levels) {
    if (level.size() != s.groups()) return false;
    bool any = false;
    for (std::size_t j = 0; j < s.groups(); ++j) {
      for (auto i : level[j]) {
        if (i >= s.group_size(j) || seen[j][i]) return false;
        seen[j][i] = true;
        any = true;
      }
    }
    if (!any) return false;
  }
  for (const auto& g : seen)
    if (std::find(g.begin(), g.end(), false) != g.end()) return false;
  return true;
}

IntVector level_sum(const DkSystem& s, const LevelPartition& p, std::size_t level, std::size_t group) {
  IntVector sum(s.dim());
  for (auto i : p.levels[level][group]) add_scaled(sum, s.coefficient(group, i), 1);
  return sum;
}

namespace {

std::vector<IntVector> earlier_vectors(const DkSystem& s, const LevelPartition& p, std::size_t level,
                                       std::vector<VarIndex>* origin = nullptr) {
  std::vector<IntVector> out;
  for (std::size_t sp = 0; sp < level; ++sp)
    for (std::size_t j = 0; j < s.groups(); ++j)
      for (auto i : p.levels[sp][j]) {
        out.push_back(s.coefficient(j, i));
        if (origin) origin->push_back({j, i});
      }
  return out;
}

/// Incrementally maintained echelon basis of linear constraints on delta.
class ConstraintSpace {
 public:
  explicit ConstraintSpace(std::size_t k) : k_(k) {}

  void add(const IntVector& row) {
    RatVector v = to_rational(row);
    for (const auto& [pc, r] : rows_) {
      if (v[pc] == 0) continue;
      const Rational f = v[pc];
      for (std::size_t j = 0; j < k_; ++j) v[j] -= f * r[j];
    }
    std::size_t pc = 0;
    while (pc < k_ && v[pc] == 0) ++pc;
    if (pc == k_) return;
    const Rational inv = 1 / v[pc];
    for (auto& x : v) x *= inv;
    for (auto& [opc, r] : rows_) {
      if (r[pc] == 0) continue;
      const Rational f = r[pc];
      for (std::size_t j = 0; j < k_; ++j) r[j] -= f * v[j];
    }
    rows_.emplace_back(pc, std::move(v));
  }

  bool saturated() const { return rows_.size() == k_; }

  std::vector<RatVector> solutions() const {
    RatMatrix m(rows_.size(), k_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t j = 0; j < k_; ++j) m(r, j) = rows_[r].second[j];
    return nullspace_rational(m);
  }

 private:
  std::size_t k_;
  std::vector<std::pair<std::size_t, RatVector>> rows_;
};

/// Adds the constraints imposed by one level: level sums must vanish at the
/// first level and lie in the span of `earlier` afterwards.
void add_level_constraints(ConstraintSpace& space, const std::vector<IntVector>& group_sums,
                           const std::vector<IntVector>* annihilator_rows, std::size_t dim) {
  const std::size_t k = group_sums.size();
  if (annihilator_rows == nullptr) {
    for (std::size_t d = 0; d < dim; ++d) {
      IntVector row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = group_sums[j][d];
      space.add(row);
    }
    return;
  }
  for (const auto& y : *annihilator_rows) {
    IntVector row(k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t d = 0; d < dim; ++d) row[j] += y[d] * group_sums[j][d];
    space.add(row);
  }
}

class KSearch {
 public:
  KSearch(const DkSystem& s, const KSearchLimits& limits) : sys_(s), limits_(limits) {
    for (const auto& v : s.variable_order()) vars_.push_back(v);
    if (vars_.size() > 40) throw InputError("k-columns search supports at most 40 variables");
  }

  KSearchResult run() {
    KSearchResult result;
    const std::size_t n = vars_.size();
    const std::size_t cap = limits_.max_levels == 0 ? n : std::min(limits_.max_levels, n);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::size_t t = 1; t <= cap && !exhausted_; ++t) {
      result.levels_searched = t;
      masks_.clear();
      ConstraintSpace space(sys_.groups());
      if (dfs(0, t, all, 0, space)) break;
    }
    result.nodes = nodes_;
    if (found_) {
      result.outcome = KSearchResult::Outcome::found;
      result.certificate = std::move(found_);
    } else if (fallback_) {
      result.outcome = KSearchResult::Outcome::found;
      result.certificate = std::move(fallback_);
    } else {
      result.outcome = exhausted_ ? KSearchResult::Outcome::exhausted : KSearchResult::Outcome::refuted;
    }
    return result;
  }

 private:
  std::vector<IntVector> group_sums(std::uint64_t mask) const {
    std::vector<IntVector> sums(sys_.groups(), IntVector(sys_.dim()));
    for (std::size_t f = 0; f < vars_.size(); ++f)
      if ((mask >> f) & 1U) add_scaled(sums[vars_[f].group], sys_.coefficient(vars_[f].group, vars_[f].index), 1);
    return sums;
  }

  const std::vector<IntVector>& annihilator_of(std::uint64_t earlier) {
    auto it = annihilators_.find(earlier);
    if (it != annihilators_.end()) return it->second;
    std::vector<IntVector> vecs;
    for (std::size_t f = 0; f < vars_.size(); ++f)
      if ((earlier >> f) & 1U) vecs.push_back(sys_.coefficient(vars_[f].group, vars_[f].index));
    return annihilators_.emplace(earlier, annihilator(vecs, sys_.dim())).first->second;
  }

  bool dfs(std::size_t level, std::size_t t, std::uint64_t remaining, std::uint64_t earlier,
           const ConstraintSpace& space) {
    const bool last = level + 1 == t;
    std::vector<std::size_t> bits;
    for (std::size_t f = 0; f < vars_.size(); ++f)
      if ((remaining >> f) & 1U) bits.push_back(f);
    const std::size_t still_needed = t - level - 1;
    const std::uint64_t combos = std::uint64_t{1} << bits.size();
    for (std::uint64_t c = last ? combos - 1 : 1; c < combos; ++c) {
      std::uint64_t mask = 0;
      for (std::size_t b = 0; b < bits.size(); ++b)
        if ((c >> b) & 1U) mask |= std::uint64_t{1} << bits[b];
      if (static_cast<std::size_t>(std::popcount(remaining & ~mask)) < still_needed) continue;
      if (++nodes_ > limits_.node_budget) {
        exhausted_ = true;
        return false;
      }
      ConstraintSpace next = space;
      add_level_constraints(next, group_sums(mask), level == 0 ? nullptr : &annihilator_of(earlier), sys_.dim());
      if (next.saturated()) continue;
      masks_.push_back(mask);
      if (last) {
        if (finish(next)) return true;
      } else if (dfs(level + 1, t, remaining & ~mask, earlier | mask, next)) {
        return true;
      }
      masks_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  bool finish(const ConstraintSpace& space) {
    LevelPartition p;
    for (auto mask : masks_) {
      std::vector<std::vector<std::size_t>> level(sys_.groups());
      for (std::size_t f = 0; f < vars_.size(); ++f)
        if ((mask >> f) & 1U) level[vars_[f].group].push_back(vars_[f].index);
      p.levels.push_back(std::move(level));
    }
    const auto basis = space.solutions();
    auto cert = assemble_certificate(sys_, p, max_support_combination(basis));
    if (!cert) throw std::logic_error("delta space nonzero but certificate assembly failed");
    if (scaled_system_satisfies_columns(sys_, cert->delta)) {
      found_ = std::move(cert);
      return true;
    }
    if (!fallback_) fallback_ = std::move(cert);
    return false;
  }

  const DkSystem& sys_;
  KSearchLimits limits_;
  std::vector<VarIndex> vars_;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, std::vector<IntVector>> annihilators_;
  std::optional<KCertificate> found_;
  std::optional<KCertificate> fallback_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

KSearchResult check_k_columns_condition(const DkSystem& s, const KSearchLimits& limits) {
  require_nondegenerate(s);
  return KSearch(s, limits).run();
}

bool scaled_system_satisfies_columns(const DkSystem& s, const IntVector& delta) {
  return check_columns_condition(scaled_system(s, delta).system.coefficient_matrix()).has_value();
}

std::vector<RatVector> delta_space(const DkSystem& s, const LevelPartition& p) {
  if (!is_valid_partition(s, p)) throw InputError("delta_space: partition does not match the system");
  ConstraintSpace space(s.groups());
  for (std::size_t level = 0; level < p.level_count(); ++level) {
    std::vector<IntVector> sums;
    for (std::size_t j = 0; j < s.groups(); ++j) sums.push_back(level_sum(s, p, level, j));
    if (level == 0) {
      add_level_constraints(space, sums, nullptr, s.dim());
    } else {
      const auto ann = annihilator(earlier_vectors(s, p, level), s.dim());
      add_level_constraints(space, sums, &ann, s.dim());
    }
  }
  return space.solutions();
}

RatVector max_support_combination(const std::vector<RatVector>& basis) {
  if (basis.empty()) return {};
  const std::size_t k = basis.front().size();
  std::vector<bool> wanted(k, false);
  for (const auto& b : basis)
    for (std::size_t j = 0; j < k; ++j)
      if (b[j] != 0) wanted[j] = true;
  // Each coordinate of sum x^i b_i is a nonzero polynomial in x wherever some
  // basis vector is nonzero, so only finitely many x fail.
  for (long x = 1;; ++x) {
    RatVector v(k);
    Rational power = 1;
    for (const auto& b : basis) {
      for (std::size_t j = 0; j < k; ++j) v[j] += power * b[j];
      power *= x;
    }
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j)
      if (wanted[j] && v[j] == 0) ok = false;
    if (ok) return v;
  }
}

std::optional<KCertificate> assemble_certificate(const DkSystem& s, const LevelPartition& p, const RatVector& direction) {
  if (direction.size() != s.groups()) throw InputError("weight direction length must equal the number of groups");
  if (!is_valid_partition(s, p)) return std::nullopt;
  const IntVector primitive = primitive_integer_direction(direction);
  if (is_zero(primitive)) return std::nullopt;

  auto weighted = [&](std::size_t level) {
    IntVector sum(s.dim());
    for (std::size_t j = 0; j < s.groups(); ++j) add_scaled(sum, level_sum(s, p, level, j), primitive[j]);
    return sum;
  };
  if (!is_zero(weighted(0))) return std::nullopt;

  Int lambda = 1;
  std::vector<std::pair<Int, IntVector>> per_level(p.level_count());
  std::vector<std::vector<VarIndex>> origins(p.level_count());
  for (std::size_t level = 1; level < p.level_count(); ++level) {
    const auto earlier = earlier_vectors(s, p, level, &origins[level]);
    auto found = smallest_integer_multiple_in_span(earlier, weighted(level));
    if (!found) return std::nullopt;
    lambda = lcm(lambda, found->first);
    per_level[level] = std::move(*found);
  }

  KCertificate cert;
  cert.partition = p;
  cert.delta = primitive;
  for (auto& x : cert.delta) x *= lambda;
  cert.combos.resize(p.level_count());
  for (std::size_t level = 1; level < p.level_count(); ++level) {
    const Int factor = lambda / per_level[level].first;
    for (std::size_t e = 0; e < origins[level].size(); ++e) {
      const Int coef = per_level[level].second[e] * factor;
      if (coef != 0) cert.combos[level].push_back({origins[level][e], coef});
    }
  }
  return cert;
}

bool verify_k_certificate(const DkSystem& s, const KCertificate& cert) {
  if (cert.delta.size() != s.groups()) throw InputError("certificate weight count differs from the group count");
  if (is_zero(cert.delta)) return false;
  if (!is_valid_partition(s, cert.partition)) return false;
  const auto& p = cert.partition;
  if (cert.combos.size() != p.level_count() || !cert.combos[0].empty()) return false;

  std::vector<std::vector<std::size_t>> level_of(s.groups());
  for (std::size_t j = 0; j < s.groups(); ++j) level_of[j].assign(s.group_size(j), 0);
  for (std::size_t level = 0; level < p.level_count(); ++level)
    for (std::size_t j = 0; j < s.groups(); ++j)
      for (auto i : p.levels[level][j]) level_of[j][i] = level;

  for (std::size_t level = 0; level < p.level_count(); ++level) {
    IntVector lhs(s.dim());
    for (std::size_t j = 0; j < s.groups(); ++j) add_scaled(lhs, level_sum(s, p, level, j), cert.delta[j]);
    IntVector rhs(s.dim());
    for (const auto& term : cert.combos[level]) {
      if (term.var.group >= s.groups() || term.var.index >= s.group_size(term.var.group)) return false;
      if (level_of[term.var.group][term.var.index] >= level) return false;
      add_scaled(rhs, s.coefficient(term.var.group, term.var.index), term.coef);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

// ---- JSON ---------------------------------------------------------------

ordered_json partition_to_json(const LevelPartition& p) {
  ordered_json levels = ordered_json::array();
  for (const auto& level : p.levels) {
    ordered_json groups = ordered_json::array();
    for (const auto& idx : level) {
      ordered_json one = ordered_json::array();
      for (auto i : idx) one.push_back(i + 1);
      groups.push_back(std::move(one));
    }
    levels.push_back(std::move(groups));
  }
  return levels;
}

LevelPartition partition_from_json(const json& j) {
  if (!j.is_array()) throw ParseError(ParseError::Kind::bad_type, "/partition", "expected an array of levels");
  LevelPartition p;
  for (const auto& level : j) {
    std::vector<std::vector<std::size_t>> groups;
    for (const auto& idx : level) {
      std::vector<std::size_t> one;
      for (const auto& i : idx) {
        const auto v = i.get<std::int64_t>();
        if (v < 1) throw ParseError(ParseError::Kind::bad_type, "/partition", "indices are 1-based");
        one.push_back(static_cast<std::size_t>(v - 1));
      }
      groups.push_back(std::move(one));
    }
    p.levels.push_back(std::move(groups));
  }
  return p;
}

ordered_json certificate_to_json(const KCertificate& cert) {
  ordered_json out;
  out["t"] = cert.partition.level_count();
  out["partition"] = partition_to_json(cert.partition);
  ordered_json delta = ordered_json::array();
  for (const auto& d : cert.delta) delta.push_back(integer_to_json(d));
  out["delta"] = std::move(delta);
  ordered_json combos = ordered_json::array();
  for (const auto& level : cert.combos) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : level) terms.push_back({t.var.group + 1, t.var.index + 1, integer_to_json(t.coef)});
    combos.push_back(std::move(terms));
  }
  out["combos"] = std::move(combos);
  return out;
}

KCertificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("partition") || !j.contains("delta") || !j.contains("combos"))
    throw ParseError(ParseError::Kind::missing_field, "", "certificate needs partition, delta and combos");
  KCertificate cert;
  cert.partition = partition_from_json(j.at("partition"));
  for (std::size_t i = 0; i < j.at("delta").size(); ++i)
    cert.delta.push_back(integer_from_json(j.at("delta")[i], "/delta/" + std::to_string(i)));
  for (const auto& level : j.at("combos")) {
    std::vector<CombinationTerm> terms;
    for (const auto& t : level) {
      if (!t.is_array() || t.size() != 3) throw ParseError(ParseError::Kind::bad_type, "/combos", "expected [j, i, c]");
      const auto g = t[0].get<std::int64_t>();
      const auto i = t[1].get<std::int64_t>();
      if (g < 1 || i < 1) throw ParseError(ParseError::Kind::bad_type, "/combos", "indices are 1-based");
      terms.push_back({{static_cast<std::size_t>(g - 1), static_cast<std::size_t>(i - 1)},
                       integer_from_json(t[2], "/combos")});
    }
    cert.combos.push_back(std::move(terms));
  }
  return cert;
}

ordered_json columns_certificate_to_json(const ColumnsCertificate& cert) {
  ordered_json out;
  out["t"] = cert.levels.size();
  ordered_json levels = ordered_json::array();
  for (const auto& level : cert.levels) {
    ordered_json one = ordered_json::array();
    for (auto c : level) one.push_back(c + 1);
    levels.push_back(std::move(one));
  }
  out["levels"] = std::move(levels);
  ordered_json scales = ordered_json::array();
  for (const auto& s : cert.scales) scales.push_back(integer_to_json(s));
  out["scales"] = std::move(scales);
  ordered_json combos = ordered_json::array();
  for (const auto& level : cert.combos) {
    ordered_json terms = ordered_json::array();
    for (const auto& [c, coef] : level) terms.push_back({c + 1, integer_to_json(coef)});
    combos.push_back(std::move(terms));
  }
  out["combos"] = std::move(combos);
  return out;
}

}  // namespace radokit
