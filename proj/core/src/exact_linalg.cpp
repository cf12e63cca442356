#include "radokit/exact_linalg.hpp"

#include <algorithm>
#include <functional>

namespace radokit {

RowEchelon row_echelon(RatMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank_rational(const RatMatrix& m) { return row_echelon(m).pivots.size(); }

std::vector<RatVector> nullspace_rational(const RatMatrix& m) {
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> in_rational_span(const std::vector<RatVector>& basis, const RatVector& v) {
  const std::size_t dim = v.size();
  for (const auto& b : basis)
    if (b.size() != dim) throw InputError("in_rational_span: dimension mismatch");
  RatMatrix aug(dim, basis.size() + 1);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) aug(r, c) = basis[c][r];
  for (std::size_t r = 0; r < dim; ++r) aug(r, basis.size()) = v[r];
  const auto ech = row_echelon(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == basis.size()) return std::nullopt;
  RatVector coeffs(basis.size());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) coeffs[ech.pivots[i]] = ech.reduced(i, basis.size());
  return coeffs;
}

namespace {

void subtract_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool have_pivot = false;
    for (;;) {
      // smallest nonzero magnitude in column c at or below row r
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      have_pivot = true;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        const Int q = floor_div(h(i, c), h(r, c));
        subtract_row_multiple(h, i, r, q);
        subtract_row_multiple(u, i, r, q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(h(i, c), h(r, c));
      subtract_row_multiple(h, i, r, q);
      subtract_row_multiple(u, i, r, q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

std::optional<IntVector> in_integer_span(const std::vector<IntVector>& basis, const IntVector& v) {
  const std::size_t dim = v.size();
  for (const auto& b : basis)
    if (b.size() != dim) throw InputError("in_integer_span: dimension mismatch");
  if (basis.empty()) {
    if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) return IntVector{};
    return std::nullopt;
  }
  const IntMatrix rows = IntMatrix::from_rows(basis, dim);
  const auto [h, u] = hermite_normal_form(rows);
  IntVector residual = v;
  IntVector y(h.rows());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < dim && h(r, c) == 0) ++c;
    if (c == dim) break;  // remaining rows are zero
    if (residual[c] % h(r, c) != 0) return std::nullopt;
    y[r] = residual[c] / h(r, c);
    for (std::size_t j = c; j < dim; ++j) residual[j] -= y[r] * h(r, j);
  }
  if (std::any_of(residual.begin(), residual.end(), [](const Int& x) { return x != 0; })) return std::nullopt;
  IntVector coeffs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t r = 0; r < h.rows(); ++r) coeffs[i] += u(r, i) * y[r];
  return coeffs;
}

namespace {

Int cofactor_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  switch (n) {
    case 0:
      return 1;
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    default:
      break;
  }
  Int det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (j == c) continue;
        sub(r - 1, k++) = a(r, j);
      }
    const Int term = a(0, c) * cofactor_determinant(sub);
    det += (c % 2 == 0) ? term : Int(-term);
  }
  return det;
}

Int bareiss_determinant(IntMatrix a) {
  const std::size_t n = a.rows();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

Int determinant(const IntMatrix& square) {
  if (square.rows() != square.cols()) throw InputError("determinant of a non-square matrix");
  if (square.rows() <= 4) return cofactor_determinant(square);
  return bareiss_determinant(square);
}

std::vector<Minor> maximal_minors(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t n = m.cols();
  if (r > n) throw InputError("maximal_minors: more rows than columns");
  std::vector<Minor> out;
  std::vector<std::size_t> cols(r);
  for (std::size_t i = 0; i < r; ++i) cols[i] = i;
  for (;;) {
    IntMatrix sub(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(i, cols[j]);
    out.push_back({cols, determinant(sub)});
    // next combination in lexicographic order
    std::size_t i = r;
    while (i > 0 && cols[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < r; ++j) cols[j] = cols[j - 1] + 1;
  }
  return out;
}

namespace {

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2;
    Int y = 2;
    Int d = 1;
    auto step = [&](const Int& v) {
      Int next = v * v + c;
      mpz_mod(next.get_mpz_t(), next.get_mpz_t(), n.get_mpz_t());
      return next;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(Int(abs(x - y)), n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::set<Int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.insert(n);
    return;
  }
  const Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Int(n / d), out);
}

}  // namespace

std::vector<Int> prime_factors(const Int& n) {
  if (n == 0) throw InputError("prime_factors of zero");
  Int rest = abs(n);
  std::set<Int> found;
  constexpr unsigned long kTrialLimit = 1'000'000;
  for (unsigned long p = 2; p <= kTrialLimit && Int(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    found.insert(Int(p));
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
  }
  factor_into(rest, found);
  return {found.begin(), found.end()};
}

std::variant<std::set<Int>, DegenerateMinor> excluded_primes(const IntMatrix& m) {
  std::set<Int> primes;
  const auto minors = maximal_minors(m);
  for (const auto& minor : minors)
    if (minor.value == 0) return DegenerateMinor{minor.columns};
  for (const auto& minor : minors)
    for (auto& p : prime_factors(minor.value)) primes.insert(std::move(p));
  return primes;
}

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

struct ModEchelon {
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivots;
};

ModEchelon echelon_mod_p(std::vector<std::vector<std::uint64_t>> a, std::size_t cols, std::uint64_t p) {
  std::size_t r = 0;
  ModEchelon out;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[r], a[pivot]);
    const std::uint64_t inv = inverse_mod(a[r][c], p);
    for (auto& x : a[r]) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) {
        const std::uint64_t sub = mul_mod(f, a[r][j], p);
        a[i][j] = (a[i][j] + p - sub) % p;
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

std::vector<std::vector<std::uint64_t>> reduce_mod_p(const IntMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = residue(m(i, j), p);
  return a;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> solve_mod_p(const IntMatrix& m, const IntVector& b, std::uint64_t p) {
  require_prime(p);
  if (b.size() != m.rows()) throw InputError("solve_mod_p: right-hand side length mismatch");
  auto a = reduce_mod_p(m, p);
  for (std::size_t i = 0; i < m.rows(); ++i) a[i].push_back(residue(b[i], p));
  const auto ech = echelon_mod_p(std::move(a), m.cols() + 1, p);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  std::vector<std::uint64_t> x(m.cols(), 0);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.rows[i][m.cols()];
  return x;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  require_prime(p);
  return echelon_mod_p(reduce_mod_p(m, p), m.cols(), p).pivots.size();
}

std::vector<std::size_t> greedy_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
  std::vector<std::size_t> chosen;
  // echelon rows kept normalized so that reduction is a single pass
  std::vector<std::pair<std::size_t, RatVector>> echelon;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    if (vectors[idx].size() != dim) throw InputError("greedy_basis: dimension mismatch");
    RatVector v = to_rational(vectors[idx]);
    for (const auto& [pc, row] : echelon) {
      if (v[pc] == 0) continue;
      const Rational f = v[pc];
      for (std::size_t j = 0; j < dim; ++j) v[j] -= f * row[j];
    }
    std::size_t pc = 0;
    while (pc < dim && v[pc] == 0) ++pc;
    if (pc == dim) continue;
    const Rational inv = 1 / v[pc];
    for (auto& x : v) x *= inv;
    // keep earlier rows reduced in the new pivot column
    for (auto& [opc, row] : echelon) {
      if (row[pc] == 0) continue;
      const Rational f = row[pc];
      for (std::size_t j = 0; j < dim; ++j) row[j] -= f * v[j];
    }
    echelon.emplace_back(pc, std::move(v));
    chosen.push_back(idx);
  }
  return chosen;
}

std::vector<IntVector> annihilator(const std::vector<IntVector>& vectors, std::size_t dim) {
  RatMatrix m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw InputError("annihilator: dimension mismatch");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  }
  std::vector<IntVector> out;
  for (const auto& v : nullspace_rational(m)) out.push_back(primitive_integer_direction(v));
  return out;
}

IntVector primitive_integer_direction(const RatVector& v) {
  const Int scale = lcm_of_denominators(v);
  IntVector out(v.size());
  Int content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Int(v[i].get_num() * (scale / v[i].get_den()));
    content = gcd(content, out[i]);
  }
  if (content == 0) return out;
  std::size_t lead = 0;
  while (out[lead] == 0) ++lead;
  if (out[lead] < 0) content = -content;
  for (auto& x : out) x /= content;
  return out;
}

}  // namespace radokit
