#pragma once

// Exact scalar types shared by every radokit module. Integers and rationals
// are GMP-backed; mpq_class keeps every value in lowest terms with a positive
// denominator, which is the invariant the rest of the library relies on.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace radokit {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;

/// Thrown when a caller violates a documented precondition (non-prime modulus,
/// mismatched shapes, degenerate systems, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses an optionally signed decimal integer; rejects anything else.
std::optional<Int> parse_decimal(std::string_view text);

/// True when x fits in a signed 64-bit integer.
inline bool fits_int64(const Int& x) {
  static const Int lo = Int("-9223372036854775808");
  static const Int hi = Int("9223372036854775807");
  return x >= lo && x <= hi;
}

std::int64_t to_int64(const Int& x);
Int from_int64(std::int64_t x);

/// Floor division and the matching non-negative remainder for b > 0.
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

Int lcm_of_denominators(const RatVector& v);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Primality for arbitrary precision values (GMP BPSW + Miller-Rabin rounds).
bool is_probable_prime(const Int& n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Modular inverse of a in F_p; a must be nonzero mod p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t residue(const Int& x, std::uint64_t p);

}  // namespace radokit
