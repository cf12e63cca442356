// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "cli.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace radokit;
using namespace radokit::testing;

namespace {

using Clock = std::chrono::steady_clock;

std::string data(const std::string& name) { return std::string(RADOKIT_TEST_DATA) + "/" + name; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    pass = false;
    detail << " | FAILED: " << why;
  }
};

int failures = 0;

void report(int number, Outcome& o, double elapsed, double limit) {
  if (elapsed > limit) o.fail("runtime " + std::to_string(elapsed) + " s over " + std::to_string(limit) + " s");
  std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << number << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << elapsed << " s): " << o.detail.str() << std::endl;
  if (!o.pass) ++failures;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string compact(const DkSystem& s) { return system_to_json(s).dump(); }

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

// ---- shared corpus ------------------------------------------------------

struct CorpusEntry {
  DkSystem system;
  KSearchResult checker;
  bool oracle_found = false;
  bool bridged = false;
};

std::vector<CorpusEntry> corpus;

// ---- 1 ------------------------------------------------------------------

void criterion_1() {
  const auto start = Clock::now();
  Outcome o;
  const auto r = run_cli({"check-kcolumns", data("paper_example.json")});
  if (r.code != 0) o.fail("exit code " + std::to_string(r.code));
  try {
    const auto j = nlohmann::json::parse(r.out);
    const auto cert = certificate_from_json(j.at("result").at("certificate"));
    if (!verify_k_certificate(paper_system(), cert)) o.fail("certificate does not verify");
    if (cert.partition.level_count() != 1) o.fail("t != 1");
    if (cert.delta != iv({5, -4})) o.fail("delta " + to_string(cert.delta));
    o.detail << "t=" << cert.partition.level_count() << " delta=" << to_string(cert.delta) << " verified";
  } catch (const std::exception& e) {
    o.fail(std::string("unreadable report: ") + e.what());
  }
  report(1, o, seconds_since(start), 1.0);
}

// ---- 2 ------------------------------------------------------------------

void criterion_2() {
  const auto start = Clock::now();
  Outcome o;
  const Assignment golden{{{6, -6}, {2, 1}}};
  const auto red_iff_three = [](std::int64_t z) -> std::int64_t { return z % 3 == 0 ? 0 : 1; };
  if (!is_semi_monochromatic(paper_system(), golden, divisible_by_three(10))) o.fail("library rejects (6,-6,2,1)");
  if (!naive_is_semi_monochromatic(paper_system(), golden, red_iff_three)) o.fail("first-principles check rejects (6,-6,2,1)");

  const auto r = run_cli({"find-solution", data("paper_example.json"), "--coloring",
                          "file:" + data("divisible_by_three_r10.json"), "--window", "10"});
  if (r.code != 0) {
    o.fail("find-solution exit code " + std::to_string(r.code));
  } else {
    const auto j = nlohmann::json::parse(r.out);
    const Assignment w = assignment_from_json(j.at("result").at("solution"));
    bool in_window = true;
    for (const auto& g : w.values)
      for (auto x : g) in_window = in_window && x >= -10 && x <= 10;
    if (!in_window) o.fail("witness leaves the window");
    if (!naive_is_semi_monochromatic(paper_system(), w, red_iff_three)) o.fail("witness is not semi-monochromatic");
    o.detail << "golden solution confirmed; witness " << j.at("result").at("solution").at("values").dump();
  }
  report(2, o, seconds_since(start), 1.0);
}

// ---- 3 ------------------------------------------------------------------

void criterion_3() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t instances = 0, regular = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<int> entries(n, -3);
    for (;;) {
      IntMatrix m(1, n);
      for (std::size_t c = 0; c < n; ++c) m(0, c) = entries[c];
      ++instances;
      const auto cert = check_columns_condition(m);
      const bool oracle = columns_oracle(m).has_value();
      if (cert) {
        ++regular;
        if (!verify_columns_certificate(m, *cert)) o.fail("unverifiable certificate");
      }
      if (cert.has_value() != oracle) {
        std::string row;
        for (auto e : entries) row += std::to_string(e) + " ";
        o.fail("disagreement on [" + row + "]");
      }
      std::size_t pos = 0;
      while (pos < n && entries[pos] == 3) entries[pos++] = -3;
      if (pos == n) break;
      ++entries[pos];
    }
  }
  o.detail << instances << " matrices, " << regular << " satisfy the condition, all agree with the oracle";
  report(3, o, seconds_since(start), 300.0);
}

// ---- 4 and 5 ------------------------------------------------------------

void criterion_4() {
  const auto start = Clock::now();
  Outcome o;
  std::mt19937_64 rng(20240501);
  std::size_t found = 0, refuted = 0, checker_only = 0;
  for (int trial = 0; trial < 500; ++trial) {
    CorpusEntry e{random_system(rng, 2, 3, 5, 3), {}, false};
    e.checker = check_k_columns_condition(e.system);
    e.oracle_found = k_columns_oracle(e.system).has_value();
    switch (e.checker.outcome) {
      case KSearchResult::Outcome::exhausted:
        o.fail("budget exhausted on " + compact(e.system));
        break;
      case KSearchResult::Outcome::found:
        ++found;
        if (!verify_k_certificate(e.system, *e.checker.certificate))
          o.fail("unverifiable certificate on " + compact(e.system));
        else if (!e.oracle_found)
          ++checker_only;
        break;
      case KSearchResult::Outcome::refuted:
        ++refuted;
        if (e.oracle_found) o.fail("checker refutes but oracle finds a certificate: " + compact(e.system));
        break;
    }
    corpus.push_back(std::move(e));
  }
  o.detail << "500 systems: " << found << " certificates (all verified, " << checker_only
           << " outside the oracle box), " << refuted << " refutations confirmed";
  report(4, o, seconds_since(start), 600.0);
}

// Colors 0 alone and everything else by smod p; true if some small prime
// leaves no semi-monochromatic solution in the window.
bool zero_isolating_coloring_defeats(const DkSystem& s) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto chi = Coloring::from_function(-30, 30, [p](std::int64_t z) -> Color {
      return z == 0 ? static_cast<Color>(p) : static_cast<Color>(naive_smod(z, p));
    });
    if (find_semi_mono_solution(s, chi, 30, 5'000'000).outcome == SearchResult::Outcome::not_found) return true;
  }
  return false;
}

void criterion_5() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t certificates = 0, bridged = 0, unattainable = 0, isolated = 0;
  std::string example;
  for (auto& e : corpus) {
    if (!e.checker.certificate) continue;
    ++certificates;
    const auto& delta = e.checker.certificate->delta;
    const auto scaled = scaled_system(e.system, delta);
    const auto cert = check_columns_condition(scaled.system.coefficient_matrix());
    if (cert && verify_columns_certificate(scaled.system.coefficient_matrix(), *cert)) {
      ++bridged;
      e.bridged = true;
      continue;
    }
    if (!k_columns_bridge_oracle(e.system).has_value()) {
      ++unattainable;
      if (zero_isolating_coloring_defeats(e.system)) ++isolated;
      if (example.empty())
        example = compact(e.system) + " delta=" + to_string(delta);
    } else {
      o.fail("a bridge-compatible certificate exists but was not returned: " + compact(e.system));
    }
  }
  o.detail << bridged << "/" << certificates << " scaled systems satisfy the columns condition";
  if (bridged != certificates) {
    o.fail(std::to_string(certificates - bridged) + " scaled systems fail; for " + std::to_string(unattainable) +
           " of them no certificate in the oracle box has a bridge-compatible delta (e.g. " + example + "); " +
           std::to_string(isolated) + " of them have no semi-monochromatic solution in [-30,30] once 0 gets a "
           "color of its own");
  }
  report(5, o, seconds_since(start), 600.0);
}

// ---- 6 and 7 ------------------------------------------------------------

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

std::vector<std::pair<DkSystem, Assignment>> witnesses;  // (system, witness) per prime
std::vector<std::uint64_t> witness_primes;
std::size_t report_congruences = 0;
std::size_t report_congruence_failures = 0;

void collect(const DkSystem& s, const ExtractionReport& r) {
  for (const auto& ev : r.grouping.evidence) {
    if (ev.search.outcome != SearchResult::Outcome::found) continue;
    witnesses.emplace_back(s, ev.search.witness);
    witness_primes.push_back(ev.prime);
  }
  for (const auto& c : r.congruences) {
    ++report_congruences;
    if (!c.holds) ++report_congruence_failures;
  }
}

void criterion_6() {
  const auto start = Clock::now();
  Outcome o;
  const auto primes = primes_up_to(50);
  ExtractionOptions options;

  const auto paper = extract_certificate(paper_system(), primes, 100, options);
  collect(paper_system(), paper);
  if (!paper.certificate) {
    o.fail("paper example: " + paper.diagnostic);
  } else {
    const auto& d = paper.certificate->delta;
    if (!verify_k_certificate(paper_system(), *paper.certificate)) o.fail("paper certificate does not verify");
    if (d[0] * -4 != d[1] * 5) o.fail("paper delta " + to_string(d) + " not proportional to (5,-4)");
    o.detail << "paper example delta=" << to_string(d) << "; ";
  }

  std::size_t attempted = 0, succeeded = 0, invalid = 0, unbridged_failures = 0, unbridged = 0;
  std::map<std::string, std::size_t> diagnostics;
  for (const auto& e : corpus) {
    if (!e.checker.certificate) continue;
    ++attempted;
    if (!e.bridged) ++unbridged;
    try {
      const auto r = extract_certificate(e.system, primes, 200, options);
      collect(e.system, r);
      if (r.certificate) {
        if (verify_k_certificate(e.system, *r.certificate))
          ++succeeded;
        else
          ++invalid;
      } else {
        ++diagnostics[r.diagnostic.substr(0, r.diagnostic.find(" ("))];
        if (!e.bridged) ++unbridged_failures;
      }
    } catch (const std::exception& ex) {
      ++diagnostics[std::string("exception: ") + ex.what()];
    }
  }
  const double rate = attempted ? static_cast<double>(succeeded) / static_cast<double>(attempted) : 0.0;
  if (invalid) o.fail(std::to_string(invalid) + " invalid certificates");
  if (rate < 0.9) o.fail("success rate below 90%");
  o.detail << "corpus " << succeeded << "/" << attempted << " (" << std::fixed << std::setprecision(1)
           << 100.0 * rate << "%), invalid " << invalid << "; " << unbridged_failures << " of the "
           << attempted - succeeded << " failures are among the " << unbridged << " systems without a bridge";
  for (const auto& [why, count] : diagnostics) o.detail << "; " << count << "x " << why;
  report(6, o, seconds_since(start), 900.0);
}

std::uint64_t naive_order(std::int64_t x, std::uint64_t p) {
  std::uint64_t m = 0;
  while (x % static_cast<std::int64_t>(p) == 0) {
    x /= static_cast<std::int64_t>(p);
    ++m;
  }
  return m;
}

// Level-by-level congruence of the rank partition computed from scratch:
// with every value of order m written p^m u, the vectors of orders below m
// plus p^m sum(u a) over order m vanish modulo p^(m+1).
bool naive_congruences(const DkSystem& s, const Assignment& a, std::uint64_t p) {
  std::map<std::uint64_t, std::vector<std::pair<VarIndex, std::int64_t>>> by_order;
  for (std::size_t j = 0; j < s.groups(); ++j)
    for (std::size_t i = 0; i < s.group_size(j); ++i)
      if (a.values[j][i] != 0) by_order[naive_order(a.values[j][i], p)].push_back({{j, i}, a.values[j][i]});
  std::vector<Int> lower(s.dim(), 0);
  for (const auto& [m, vars] : by_order) {
    Int modulus = 1;
    for (std::uint64_t e = 0; e <= m; ++e) modulus *= static_cast<unsigned long>(p);
    Int pm = modulus / static_cast<unsigned long>(p);
    std::vector<Int> level(s.dim(), 0);
    for (const auto& [var, x] : vars) {
      const std::int64_t u = x / static_cast<std::int64_t>(pm.get_si());
      const auto alpha = static_cast<long>(naive_smod(u, p));
      if (alpha == 0) return false;
      for (std::size_t d = 0; d < s.dim(); ++d) level[d] += alpha * s.coefficient(var.group, var.index)[d];
    }
    for (std::size_t d = 0; d < s.dim(); ++d) {
      Int r = (lower[d] + pm * level[d]) % modulus;
      if (r != 0) return false;
    }
    for (const auto& [var, x] : vars)
      for (std::size_t d = 0; d < s.dim(); ++d) lower[d] += Int(static_cast<long>(x)) * s.coefficient(var.group, var.index)[d];
  }
  return true;
}

void criterion_7() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t checks = 0, failed = 0, naive_failed = 0;
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    const auto& [s, a] = witnesses[w];
    const auto p = witness_primes[w];
    if (!naive_congruences(s, a, p)) ++naive_failed;
    const auto rp = rank_partition(s, a, p);
    for (std::size_t j = 0; j < s.groups(); ++j) {
      if (rp.alpha[j] == 0) continue;
      ++checks;
      if (!verify_rank_congruences(s, a, p, rp, j)) ++failed;
    }
  }
  if (failed) o.fail(std::to_string(failed) + " library congruence checks fail");
  if (naive_failed) o.fail(std::to_string(naive_failed) + " witnesses fail the first-principles congruence");
  if (report_congruence_failures) o.fail("extraction reports contain failing congruences");
  if (witnesses.empty()) o.fail("no witnesses collected");
  o.detail << witnesses.size() << " witnesses, " << checks << " anchored checks, " << report_congruences
           << " recorded during extraction, all hold";
  report(7, o, seconds_since(start), 600.0);
}

// ---- 8 ------------------------------------------------------------------

void criterion_8() {
  const auto start = Clock::now();
  Outcome o;
  std::mt19937_64 rng(8080);
  std::uniform_int_distribution<int> value(-6, 6);
  const auto primes = primes_up_to(100);
  std::size_t systems = 0, primes_with_roots = 0;
  while (systems < 200) {
    const std::size_t vars = 1 + rng() % 2;
    const std::size_t count = vars + 1 + rng() % 2;
    std::vector<LinearForm> forms;
    std::vector<std::int64_t> constants;
    std::vector<std::vector<std::int64_t>> coeffs;
    for (std::size_t f = 0; f < count; ++f) {
      LinearForm form{value(rng), IntVector(vars)};
      std::vector<std::int64_t> row(vars);
      for (std::size_t v = 0; v < vars; ++v) {
        row[v] = value(rng);
        form.coeffs[v] = row[v];
      }
      constants.push_back(form.constant.get_si());
      coeffs.push_back(row);
      forms.push_back(std::move(form));
    }
    const auto r = common_rational_root(forms);
    if (!r.obstruction) continue;
    ++systems;
    const auto& ob = *r.obstruction;
    // the multipliers must cancel every variable and leave the constant
    Int constant = 0;
    std::vector<Int> residue(vars, 0);
    for (std::size_t f = 0; f < count; ++f) {
      constant += ob.multipliers[f] * forms[f].constant;
      for (std::size_t v = 0; v < vars; ++v) residue[v] += ob.multipliers[f] * forms[f].coeffs[v];
    }
    if (constant != ob.constant || ob.constant <= 0) o.fail("obstruction constant mismatch");
    for (const auto& x : residue)
      if (x != 0) o.fail("obstruction multipliers leave a variable");
    for (auto p : primes) {
      if (!brute_common_root_mod_p(constants, coeffs, p)) continue;
      ++primes_with_roots;
      if (ob.constant % static_cast<unsigned long>(p) != 0)
        o.fail("prime " + std::to_string(p) + " has a root but does not divide " + ob.constant.get_str());
    }
  }
  o.detail << systems << " inconsistent systems, " << primes_with_roots << " (system, prime) roots, all divide c";
  report(8, o, seconds_since(start), 600.0);
}

// ---- 9 ------------------------------------------------------------------

bool is_hermite(const IntMatrix& h) {
  std::size_t lead = 0;
  bool zero_seen = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      zero_seen = true;
      continue;
    }
    if (zero_seen || (r > 0 && c < lead) || h(r, c) <= 0) return false;
    if (r > 0 && c == lead) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
    lead = c;
  }
  return true;
}

Int naive_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Int det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    det += (c % 2 ? -1 : 1) * m(0, c) * naive_det(minor);
  }
  return det;
}

void criterion_9() {
  const auto start = Clock::now();
  Outcome o;
  std::mt19937_64 rng(9090);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
    const auto hnf = hermite_normal_form(m);
    bool ok = hnf.u.rows() == rows && hnf.u.cols() == rows && hnf.h.rows() == rows && hnf.h.cols() == cols;
    for (std::size_t r = 0; ok && r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        Int acc = 0;
        for (std::size_t k = 0; k < rows; ++k) acc += hnf.u(r, k) * m(k, c);
        ok = ok && acc == hnf.h(r, c);
      }
    if (!ok) {
      o.fail("H != U M");
      break;
    }
    if (abs(naive_det(hnf.u)) != 1) o.fail("U not unimodular");
    if (!is_hermite(hnf.h)) o.fail("H not in Hermite form");
    if (!o.pass) break;
  }

  std::uniform_int_distribution<int> small(-3, 3);
  std::size_t members = 0;
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    const std::size_t dim = 1 + rng() % 3, count = 1 + rng() % 3;
    std::vector<IntVector> basis(count, IntVector(dim));
    std::vector<std::vector<std::int64_t>> plain(count, std::vector<std::int64_t>(dim));
    for (std::size_t b = 0; b < count; ++b)
      for (std::size_t d = 0; d < dim; ++d) basis[b][d] = plain[b][d] = small(rng);
    std::vector<std::int64_t> target(dim, 0);
    if (rng() % 2) {
      for (std::size_t b = 0; b < count; ++b) {
        const int c = small(rng);
        for (std::size_t d = 0; d < dim; ++d) target[d] += c * plain[b][d];
      }
    } else {
      for (auto& t : target) t = small(rng);
    }
    IntVector v(dim);
    for (std::size_t d = 0; d < dim; ++d) v[d] = static_cast<long>(target[d]);
    const auto lib = in_integer_span(basis, v);
    const auto brute = brute_integer_span(plain, target, 6);
    if (lib) {
      ++members;
      IntVector back(dim);
      for (std::size_t b = 0; b < count; ++b)
        for (std::size_t d = 0; d < dim; ++d) back[d] += (*lib)[b] * basis[b][d];
      if (back != v) o.fail("span coefficients do not reproduce the target");
    } else if (brute) {
      o.fail("brute force finds a combination the library misses");
    }
  }

  std::uniform_int_distribution<std::int64_t> wide(-1'000'000, 1'000'000);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (int trial = 0; trial < 1000 && o.pass; ++trial) {
      std::int64_t a = 0, b = 0;
      while (a == 0) a = wide(rng);
      while (b == 0) b = wide(rng);
      const Int product = Int(static_cast<long>(a)) * Int(static_cast<long>(b));
      if (smod(product, p) != smod(a, p) * smod(b, p) % p) o.fail("smod not multiplicative");
      if (smod(a, p) != naive_smod(a, p)) o.fail("smod differs from repeated division");
    }
  }
  o.detail << "1000 HNF round trips, 1000 span queries (" << members << " members), 6000 smod pairs";
  report(9, o, seconds_since(start), 120.0);
}

// ---- 10 -----------------------------------------------------------------

void criterion_10() {
  const auto start = Clock::now();
  Outcome o;
  const auto columns = run_cli({"check-columns", data("x_plus_y_eq_3z.json")});
  if (columns.code != 1) o.fail("check-columns exit code " + std::to_string(columns.code));

  const auto r = run_cli({"falsify", data("x_plus_y_eq_3z.json"), "--primes", "5", "--window", "60"});
  try {
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"tool", "version", "subcommand", "input_digest", "parameters", "outcome", "exit_code", "result"})
      if (!j.contains(key)) o.fail(std::string("report lacks ") + key);
    if (j.at("exit_code") != r.code) o.fail("exit_code field differs from the exit status");
    const auto& entries = j.at("result").at("entries");
    if (entries.size() != 1 || entries[0].at("prime") != 5) o.fail("expected one entry for prime 5");

    // every semi-monochromatic solution of x + y = 3z in [-60,60] under smod:5
    bool exists = false;
    for (std::int64_t x = -60; x <= 60 && !exists; ++x)
      for (std::int64_t y = -60; y <= 60 && !exists; ++y) {
        if ((x + y) % 3 != 0) continue;
        const std::int64_t z = (x + y) / 3;
        if (x == 0 && y == 0) continue;
        const auto c = naive_smod(x, 5);
        exists = c == naive_smod(y, 5) && c == naive_smod(z, 5);
      }
    const std::string outcome = entries[0].at("outcome");
    if (exists != (outcome == "found")) o.fail("report outcome " + outcome + " contradicts the brute force");
    if (outcome == "found") {
      const Assignment a = assignment_from_json(entries[0].at("solution"));
      const auto smod5 = [](std::int64_t z) { return static_cast<std::int64_t>(naive_smod(z, 5)); };
      if (!naive_is_semi_monochromatic(x_plus_y_eq_3z(), a, smod5)) o.fail("reported witness is invalid");
    }
    const int expected = exists ? 0 : 1;
    if (r.code != expected) o.fail("falsify exit code " + std::to_string(r.code));
    o.detail << "check-columns exit 1; falsify outcome " << outcome << ", exit " << r.code
             << ", brute force over [-60,60] agrees";
  } catch (const std::exception& e) {
    o.fail(std::string("malformed report: ") + e.what());
  }
  report(10, o, seconds_since(start), 60.0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
