#include "radokit/colorings.hpp"

#include <map>

namespace radokit {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

// Removes every factor p from n in place; returns how many were removed.
std::uint32_t strip(Int& n, std::uint64_t p) {
  std::uint32_t m = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++m;
  }
  return m;
}

}  // namespace

Rank p_adic_order(const Int& n, std::uint64_t p) {
  require_prime(p);
  if (n == 0) return {};
  Int rest = n;
  return {strip(rest, p)};
}

std::uint64_t smod(const Int& n, std::uint64_t p) {
  require_prime(p);
  if (n == 0) return 0;
  Int unit = n;
  strip(unit, p);
  return residue(unit, p);
}

std::uint64_t smod(const Rational& q, std::uint64_t p) {
  require_prime(p);
  if (q == 0) return 0;
  Int a = q.get_num();
  Int b = q.get_den();
  strip(a, p);
  strip(b, p);
  return mul_mod(residue(a, p), inverse_mod(residue(b, p), p), p);
}

std::uint64_t smod(std::int64_t n, std::uint64_t p) {
  require_prime(p);
  if (n == 0) return 0;
  if (p > static_cast<std::uint64_t>(INT64_MAX)) return smod(from_int64(n), p);
  const auto sp = static_cast<std::int64_t>(p);
  while (n % sp == 0) n /= sp;
  const std::int64_t r = n % sp;
  return static_cast<std::uint64_t>(r < 0 ? r + sp : r);
}

Coloring Coloring::smod(std::uint64_t p) {
  require_prime(p);
  Coloring c;
  c.prime_ = p;
  return c;
}

Coloring Coloring::table(std::int64_t lo, std::int64_t hi, std::vector<Color> colors) {
  if (hi < lo) throw InputError("coloring window is empty");
  if (colors.size() != static_cast<std::size_t>(hi - lo + 1))
    throw InputError("coloring table does not cover its window");
  for (auto c : colors)
    if (c < 0) throw InputError("color ids must be nonnegative");
  Coloring out;
  out.lo_ = lo;
  out.hi_ = hi;
  out.colors_ = std::move(colors);
  return out;
}

Color Coloring::operator()(std::int64_t z) const {
  if (prime_) return static_cast<Color>(radokit::smod(z, *prime_));
  if (z < lo_ || z > hi_)
    throw ColoringDomainError("value " + std::to_string(z) + " outside coloring window [" + std::to_string(lo_) +
                              ", " + std::to_string(hi_) + "]");
  return colors_[static_cast<std::size_t>(z - lo_)];
}

bool Coloring::covers(std::int64_t lo, std::int64_t hi) const {
  return prime_.has_value() || (lo >= lo_ && hi <= hi_);
}

Coloring Coloring::restricted(std::int64_t lo, std::int64_t hi) const {
  if (!covers(lo, hi)) throw ColoringDomainError("restriction window exceeds the coloring's window");
  return from_function(lo, hi, [this](std::int64_t z) { return (*this)(z); });
}

std::string Coloring::describe() const {
  if (prime_) return "smod:" + std::to_string(*prime_);
  return "table:[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
}

ProductColoring product_coloring(const Coloring& base, const IntVector& delta, std::int64_t lo, std::int64_t hi) {
  if (delta.empty()) throw InputError("product_coloring needs at least one weight");
  for (const auto& d : delta)
    if (d == 0) throw InputError("product_coloring weights must be nonzero");
  std::map<std::vector<Color>, Color> ids;
  ProductColoring out{Coloring::table(lo, lo, {0}), {}};
  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t z = lo; z <= hi; ++z) {
    std::vector<Color> tuple;
    tuple.reserve(delta.size());
    for (const auto& d : delta) {
      const Int scaled = d * from_int64(z);
      if (!fits_int64(scaled)) throw ColoringDomainError("scaled value " + scaled.get_str() + " overflows");
      tuple.push_back(base(to_int64(scaled)));
    }
    auto [it, inserted] = ids.try_emplace(tuple, static_cast<Color>(out.tuples.size()));
    if (inserted) out.tuples.push_back(tuple);
    colors.push_back(it->second);
  }
  out.coloring = Coloring::table(lo, hi, std::move(colors));
  return out;
}

}  // namespace radokit
