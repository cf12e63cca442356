#include "radokit/integer.hpp"

#include <array>
#include <cctype>

namespace radokit {

std::optional<Int> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t i = pos; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Int(digits, 10);
}

std::int64_t to_int64(const Int& x) {
  if (!fits_int64(x)) throw InputError("integer " + x.get_str() + " does not fit in 64 bits");
  static_assert(sizeof(long) == 8, "radokit assumes LP64");
  return static_cast<std::int64_t>(x.get_si());
}

Int from_int64(std::int64_t x) { return Int(static_cast<long>(x)); }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm_of_denominators(const RatVector& v) {
  Int l = 1;
  for (const auto& q : v) l = lcm(l, Int(q.get_den()));
  return l;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using Wide = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : small) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are sufficient for every n < 2^64.
  for (auto a : small) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw InputError("zero has no inverse modulo " + std::to_string(p));
  // p is prime, so Fermat gives the inverse directly.
  return pow_mod(a, p - 2, p);
}

std::uint64_t residue(const Int& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

}  // namespace radokit
