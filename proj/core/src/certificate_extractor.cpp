#include "radokit/certificate_extractor.hpp"

#include "radokit/colorings.hpp"
#include "radokit/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace radokit {

bool RankPartition::has_infinite_level() const {
  return std::any_of(infinite.begin(), infinite.end(), [](const auto& v) { return !v.empty(); });
}

LevelPartition RankPartition::shape() const {
  LevelPartition out = finite;
  if (has_infinite_level()) out.levels.push_back(infinite);
  return out;
}

RankPartition rank_partition(const DkSystem& s, const Assignment& a, std::uint64_t p) {
  require_shape(s, a);
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (a.all_zero()) throw InputError("rank partition needs a nontrivial solution");
  if (!is_solution(s, a)) throw InputError("assignment is not a solution of the system");

  RankPartition rp;
  rp.prime = p;
  rp.alpha.assign(s.groups(), 0);
  rp.infinite.assign(s.groups(), {});
  std::map<std::uint32_t, std::vector<std::vector<std::size_t>>> by_order;
  for (std::size_t j = 0; j < s.groups(); ++j) {
    const auto& vals = a.values[j];
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const std::uint64_t color = smod(vals[i], p);
      if (i == 0) {
        rp.alpha[j] = color;
      } else if (color != rp.alpha[j]) {
        throw NotMonochromaticError(j, "group " + std::to_string(j + 1) + " is not monochromatic under smod " +
                                           std::to_string(p));
      }
      const Rank r = p_adic_order(from_int64(vals[i]), p);
      if (r.is_infinite()) {
        rp.infinite[j].push_back(i);
      } else {
        auto& level = by_order[*r.order];
        if (level.empty()) level.assign(s.groups(), {});
        level[j].push_back(i);
      }
    }
  }
  for (auto& [order, level] : by_order) {
    rp.orders.push_back(order);
    rp.finite.levels.push_back(std::move(level));
  }
  return rp;
}

bool verify_rank_congruences(const DkSystem& s, const Assignment& a, std::uint64_t p, const RankPartition& rp,
                             std::size_t anchor) {
  require_shape(s, a);
  if (anchor >= s.groups()) throw InputError("anchor group out of range");
  if (rp.alpha.size() != s.groups()) throw InputError("rank partition does not match the system");
  if (rp.alpha[anchor] % p == 0) throw InputError("anchor color is zero modulo p");
  const std::uint64_t inv = inverse_mod(rp.alpha[anchor], p);
  std::vector<Int> beta(s.groups());
  for (std::size_t j = 0; j < s.groups(); ++j) beta[j] = Int(static_cast<unsigned long>(mul_mod(inv, rp.alpha[j], p)));

  const std::size_t dim = s.dim();
  IntVector earlier(dim, 0);  // sum over earlier levels of z * a
  for (std::size_t lv = 0; lv < rp.finite.level_count(); ++lv) {
    Int modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), p, rp.orders[lv] + 1);
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), p, rp.orders[lv]);
    for (std::size_t d = 0; d < dim; ++d) {
      Int weighted = 0;
      for (std::size_t j = 0; j < s.groups(); ++j) weighted += beta[j] * level_sum(s, rp.finite, lv, j)[d];
      const Int lhs = Int(static_cast<unsigned long>(inv)) * earlier[d] + scale * weighted;
      if (floor_mod(lhs, modulus) != 0) return false;
    }
    for (std::size_t j = 0; j < s.groups(); ++j)
      for (auto i : rp.finite.levels[lv][j]) {
        const auto& col = s.coefficient(j, i);
        const Int z = from_int64(a.values[j][i]);
        for (std::size_t d = 0; d < dim; ++d) earlier[d] += z * col[d];
      }
  }
  return true;
}

bool LinearForm::is_zero() const {
  return constant == 0 && std::all_of(coeffs.begin(), coeffs.end(), [](const Int& c) { return c == 0; });
}

Rational LinearForm::evaluate(const RatVector& z) const {
  if (z.size() != coeffs.size()) throw InputError("assignment length does not match the form");
  Rational out(constant);
  for (std::size_t v = 0; v < z.size(); ++v) out += Rational(coeffs[v]) * z[v];
  out.canonicalize();
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> c(r);
  std::iota(c.begin(), c.end(), 0);
  for (;;) {
    out.push_back(c);
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t q = i; q < r; ++q) c[q] = c[q - 1] + 1;
  }
  return out;
}

// det of the matrix with `first` on top of `basis`, restricted to `cols`
Int minor_with_first_row(const IntVector& first, const std::vector<IntVector>& basis,
                         const std::vector<std::size_t>& cols) {
  const std::size_t r = cols.size();
  IntMatrix m(r, r);
  for (std::size_t c = 0; c < r; ++c) m(0, c) = first[cols[c]];
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t c = 0; c < r; ++c) m(b + 1, c) = basis[b][cols[c]];
  return determinant(m);
}

void add_form(PolynomialSystem& ps, LinearForm form, FormOrigin origin) {
  if (form.is_zero()) {
    ps.dropped.push_back(std::move(origin));
    return;
  }
  if (std::find(ps.forms.begin(), ps.forms.end(), form) != ps.forms.end()) return;
  ps.forms.push_back(std::move(form));
  ps.origins.push_back(std::move(origin));
}

}  // namespace

PolynomialSystem build_polynomial_system(const DkSystem& s, const LevelPartition& p, std::size_t anchor) {
  if (anchor >= s.groups()) throw InputError("anchor group out of range");
  for (const auto& level : p.levels) {
    if (level.size() != s.groups()) throw InputError("partition level has the wrong number of groups");
    for (std::size_t j = 0; j < s.groups(); ++j)
      for (auto i : level[j])
        if (i >= s.group_size(j)) throw InputError("partition index out of range");
  }
  PolynomialSystem ps;
  ps.anchor = anchor;
  for (std::size_t j = 0; j < s.groups(); ++j)
    if (j != anchor) ps.variable_groups.push_back(j);
  if (p.levels.empty()) return ps;

  const std::size_t dim = s.dim();
  const std::size_t nvars = ps.variable_groups.size();
  {
    const IntVector base = level_sum(s, p, 0, anchor);
    std::vector<IntVector> sums;
    for (auto j : ps.variable_groups) sums.push_back(level_sum(s, p, 0, j));
    for (std::size_t d = 0; d < dim; ++d) {
      LinearForm f{base[d], IntVector(nvars)};
      for (std::size_t v = 0; v < nvars; ++v) f.coeffs[v] = sums[v][d];
      add_form(ps, std::move(f), FormOrigin{0, d, {}});
    }
  }

  std::vector<IntVector> earlier;  // (s', j, i) order
  for (std::size_t lv = 1; lv < p.levels.size(); ++lv) {
    for (std::size_t j = 0; j < s.groups(); ++j)
      for (auto i : p.levels[lv - 1][j]) earlier.push_back(s.coefficient(j, i));
    std::vector<IntVector> basis;
    for (auto idx : greedy_basis(earlier, dim)) basis.push_back(earlier[idx]);
    if (basis.size() == dim) {
      ps.skipped_levels.push_back(lv);
      continue;
    }
    const IntVector base = level_sum(s, p, lv, anchor);
    std::vector<IntVector> sums;
    for (auto j : ps.variable_groups) sums.push_back(level_sum(s, p, lv, j));
    for (auto& cols : combinations(dim, basis.size() + 1)) {
      LinearForm f{minor_with_first_row(base, basis, cols), IntVector(nvars)};
      for (std::size_t v = 0; v < nvars; ++v) f.coeffs[v] = minor_with_first_row(sums[v], basis, cols);
      add_form(ps, std::move(f), FormOrigin{lv, std::nullopt, cols});
    }
  }
  return ps;
}

RootResult common_rational_root(const std::vector<LinearForm>& forms) {
  if (forms.empty()) throw InputError("common root needs at least one form");
  const std::size_t n = forms.front().coeffs.size();
  const std::size_t m = forms.size();
  for (const auto& f : forms)
    if (f.coeffs.size() != n) throw InputError("forms have different variable counts");

  // [coeffs | constant | multipliers]; each row is the combination of the
  // input forms given by its multiplier block.
  const std::size_t width = n + 1 + m;
  RatMatrix a(m, width);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = forms[r].coeffs[c];
    a(r, n) = forms[r].constant;
    a(r, n + 1 + r) = 1;
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a(piv, col) == 0) ++piv;
    if (piv == m) continue;
    a.swap_rows(piv, row);
    const Rational lead = a(row, col);
    for (std::size_t c = 0; c < width; ++c) a(row, c) /= lead;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < width; ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }

  RootResult out;
  for (std::size_t r = row; r < m; ++r) {
    if (a(r, n) == 0) continue;
    RatVector mult(m);
    for (std::size_t i = 0; i < m; ++i) mult[i] = a(r, n + 1 + i);
    mult.push_back(a(r, n));
    const Int scale = lcm_of_denominators(mult);
    IntVector ints(mult.size());
    Int g = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      const Rational scaled = mult[i] * scale;
      ints[i] = scaled.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (ints.back() < 0) g = -g;
    for (auto& x : ints) x /= g;
    Obstruction ob;
    ob.constant = ints.back();
    ints.pop_back();
    ob.multipliers = std::move(ints);
    out.obstruction = std::move(ob);
    return out;
  }
  RatVector root(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) root[pivots[r]] = -a(r, n);
  out.root = std::move(root);
  return out;
}

IntVector scale_to_integer_delta(const RatVector& gamma) {
  const Int lead = lcm_of_denominators(gamma);
  IntVector delta{lead};
  for (const auto& g : gamma) {
    const Rational v = g * lead;
    delta.push_back(v.get_num());
  }
  return delta;
}

PrimeGrouping group_primes_by_partition(const DkSystem& s, const std::vector<std::uint64_t>& primes,
                                        std::int64_t radius, std::uint64_t node_budget, unsigned jobs) {
  require_nondegenerate(s);
  for (auto p : primes)
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  PrimeGrouping g;
  g.evidence = parallel_indexed<PrimeEvidence>(primes.size(), jobs, [&](std::size_t i) {
    PrimeEvidence e;
    e.prime = primes[i];
    e.search = find_semi_mono_solution(s, Coloring::smod(primes[i]), radius, node_budget);
    if (e.search.outcome == SearchResult::Outcome::found) e.ranks = rank_partition(s, e.search.witness, primes[i]);
    return e;
  });

  std::map<std::vector<std::vector<std::vector<std::size_t>>>, std::size_t> index;
  for (std::size_t i = 0; i < g.evidence.size(); ++i) {
    const auto& e = g.evidence[i];
    if (!e.ranks) {
      g.unsolved.push_back(e.prime);
      continue;
    }
    LevelPartition shape = e.ranks->shape();
    auto [it, inserted] = index.try_emplace(shape.levels, g.classes.size());
    if (inserted) g.classes.push_back(PrimeClass{std::move(shape), {}, {}});
    g.classes[it->second].primes.push_back(e.prime);
    g.classes[it->second].evidence.push_back(i);
  }
  for (auto& c : g.classes) {
    std::vector<std::size_t> order(c.primes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return c.primes[x] < c.primes[y]; });
    PrimeClass sorted{c.shape, {}, {}};
    for (auto o : order) {
      sorted.primes.push_back(c.primes[o]);
      sorted.evidence.push_back(c.evidence[o]);
    }
    c = std::move(sorted);
  }
  std::sort(g.classes.begin(), g.classes.end(), [](const PrimeClass& x, const PrimeClass& y) {
    if (x.primes.size() != y.primes.size()) return x.primes.size() > y.primes.size();
    return x.primes.front() < y.primes.front();
  });
  return g;
}

namespace {

std::string describe_obstruction(const Obstruction& ob) { return "inconsistent polynomial system (obstruction " + to_string(ob.constant) + ")"; }

}  // namespace

ExtractionReport extract_certificate(const DkSystem& s, const std::vector<std::uint64_t>& primes, std::int64_t radius,
                                     const ExtractionOptions& options) {
  require_nondegenerate(s);
  ExtractionReport report;
  report.grouping = group_primes_by_partition(s, primes, radius, options.node_budget, options.jobs);

  for (const auto& e : report.grouping.evidence) {
    if (!e.ranks) continue;
    const auto& alpha = e.ranks->alpha;
    const auto it = std::find_if(alpha.begin(), alpha.end(), [](std::uint64_t a) { return a != 0; });
    const auto anchor = static_cast<std::size_t>(it - alpha.begin());
    report.congruences.push_back(
        CongruenceCheck{e.prime, anchor, verify_rank_congruences(s, e.search.witness, e.prime, *e.ranks, anchor)});
  }

  if (report.grouping.classes.empty()) {
    report.diagnostic = "no solutions found in window";
    return report;
  }

  for (std::size_t ci = 0; ci < report.grouping.classes.size(); ++ci) {
    const PrimeClass& cls = report.grouping.classes[ci];
    const RankPartition& first = *report.grouping.evidence[cls.evidence.front()].ranks;
    const LevelPartition finite = first.finite;
    for (std::size_t anchor = 0; anchor < s.groups(); ++anchor) {
      const bool unit = std::all_of(cls.evidence.begin(), cls.evidence.end(), [&](std::size_t ei) {
        return report.grouping.evidence[ei].ranks->alpha[anchor] != 0;
      });
      if (!unit) continue;
      ExtractionAttempt attempt;
      attempt.class_index = ci;
      attempt.anchor = anchor;
      attempt.polynomials = build_polynomial_system(s, finite, anchor);
      RatVector gamma(attempt.polynomials.variable_groups.size(), 0);
      if (!attempt.polynomials.forms.empty()) {
        attempt.root = common_rational_root(attempt.polynomials.forms);
        if (!attempt.root.root) {
          attempt.failure = describe_obstruction(*attempt.root.obstruction);
          report.attempts.push_back(std::move(attempt));
          continue;
        }
        gamma = *attempt.root.root;
      }
      attempt.scaled_delta = scale_to_integer_delta(gamma);
      RatVector direction(s.groups(), 0);
      direction[anchor] = 1;
      for (std::size_t v = 0; v < gamma.size(); ++v) direction[attempt.polynomials.variable_groups[v]] = gamma[v];
      auto cert = assemble_certificate(s, cls.shape, direction);
      if (!cert) {
        attempt.failure = "weights do not satisfy the level conditions";
      } else if (!verify_k_certificate(s, *cert)) {
        attempt.failure = "certificate verification failed";
      }
      const bool ok = attempt.failure.empty();
      report.attempts.push_back(std::move(attempt));
      if (ok) {
        report.certificate = std::move(cert);
        return report;
      }
    }
  }
  if (report.attempts.empty()) {
    report.diagnostic = "no group has a unit color for every prime of any class";
  } else {
    report.diagnostic = report.attempts.front().failure;
  }
  return report;
}

nlohmann::ordered_json linear_form_to_json(const LinearForm& f, const std::vector<std::size_t>& variable_groups) {
  nlohmann::ordered_json out;
  out["constant"] = integer_to_json(f.constant);
  auto coeffs = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < f.coeffs.size(); ++v)
    coeffs.push_back(nlohmann::ordered_json::array({variable_groups[v] + 1, integer_to_json(f.coeffs[v])}));
  out["coeffs"] = std::move(coeffs);
  return out;
}

namespace {

nlohmann::ordered_json origin_to_json(const FormOrigin& o) {
  nlohmann::ordered_json out;
  out["level"] = o.level + 1;
  if (o.coordinate) {
    out["coordinate"] = *o.coordinate + 1;
  } else {
    auto cols = nlohmann::ordered_json::array();
    for (auto c : o.columns) cols.push_back(c + 1);
    out["columns"] = std::move(cols);
  }
  return out;
}

}  // namespace

nlohmann::ordered_json extraction_report_to_json(const ExtractionReport& report) {
  nlohmann::ordered_json out;
  out["certificate"] = report.certificate ? certificate_to_json(*report.certificate) : nlohmann::ordered_json();
  out["diagnostic"] = report.diagnostic;

  auto evidence = nlohmann::ordered_json::array();
  for (const auto& e : report.grouping.evidence) {
    nlohmann::ordered_json item;
    item["prime"] = e.prime;
    item["search"] = outcome_name(e.search.outcome);
    item["nodes"] = e.search.nodes;
    if (e.ranks) {
      item["solution"] = solution_to_json(e.search.witness, e.search.group_colors);
      item["rank_partition"] = partition_to_json(e.ranks->shape());
      item["orders"] = e.ranks->orders;
      item["alpha"] = e.ranks->alpha;
    }
    evidence.push_back(std::move(item));
  }
  out["evidence"] = std::move(evidence);

  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : report.grouping.classes) {
    nlohmann::ordered_json item;
    item["partition"] = partition_to_json(c.shape);
    item["primes"] = c.primes;
    classes.push_back(std::move(item));
  }
  out["classes"] = std::move(classes);
  out["unsolved"] = report.grouping.unsolved;

  auto congruences = nlohmann::ordered_json::array();
  for (const auto& c : report.congruences) {
    nlohmann::ordered_json item;
    item["prime"] = c.prime;
    item["anchor"] = c.anchor + 1;
    item["holds"] = c.holds;
    congruences.push_back(std::move(item));
  }
  out["congruences"] = std::move(congruences);

  auto attempts = nlohmann::ordered_json::array();
  for (const auto& a : report.attempts) {
    nlohmann::ordered_json item;
    item["class"] = a.class_index;
    item["anchor"] = a.anchor + 1;
    auto forms = nlohmann::ordered_json::array();
    for (std::size_t f = 0; f < a.polynomials.forms.size(); ++f) {
      auto form = linear_form_to_json(a.polynomials.forms[f], a.polynomials.variable_groups);
      form["origin"] = origin_to_json(a.polynomials.origins[f]);
      forms.push_back(std::move(form));
    }
    item["forms"] = std::move(forms);
    item["dropped"] = a.polynomials.dropped.size();
    if (a.root.root) {
      auto gamma = nlohmann::ordered_json::array();
      for (const auto& g : *a.root.root) gamma.push_back(to_string(g));
      item["gamma"] = std::move(gamma);
    }
    if (a.root.obstruction) item["obstruction"] = integer_to_json(a.root.obstruction->constant);
    if (a.scaled_delta) {
      auto delta = nlohmann::ordered_json::array();
      for (const auto& d : *a.scaled_delta) delta.push_back(integer_to_json(d));
      item["scaled_delta"] = std::move(delta);
    }
    item["failure"] = a.failure;
    attempts.push_back(std::move(item));
  }
  out["attempts"] = std::move(attempts);
  return out;
}

}  // namespace radokit
