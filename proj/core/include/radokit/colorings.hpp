#pragma once

// Finite colorings of the integers: smod-p colorings, explicit tables on a
// window, and the product coloring used to pull a scaled system back.

#include "radokit/integer.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace radokit {

using Color = std::int64_t;

/// Raised when a coloring is queried outside the window it is defined on.
class ColoringDomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// p-adic order; empty means infinity (the order of zero).
struct Rank {
  std::optional<std::uint32_t> order;

  bool is_infinite() const { return !order.has_value(); }
  friend bool operator==(const Rank&, const Rank&) = default;
};

Rank p_adic_order(const Int& n, std::uint64_t p);

/// smod p color: write q = p^m a/b with p not dividing ab, return a b^-1 mod p.
/// smod(0, p) == 0.
std::uint64_t smod(const Int& n, std::uint64_t p);
std::uint64_t smod(const Rational& q, std::uint64_t p);
std::uint64_t smod(std::int64_t n, std::uint64_t p);

/// Total coloring of either all of Z (smod p) or an explicit window [lo, hi].
class Coloring {
 public:
  static Coloring smod(std::uint64_t p);
  static Coloring table(std::int64_t lo, std::int64_t hi, std::vector<Color> colors);

  template <typename F>
  static Coloring from_function(std::int64_t lo, std::int64_t hi, F&& f) {
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t z = lo; z <= hi; ++z) colors.push_back(static_cast<Color>(f(z)));
    return table(lo, hi, std::move(colors));
  }

  Color operator()(std::int64_t z) const;

  bool covers(std::int64_t lo, std::int64_t hi) const;
  /// Table coloring agreeing with this one on [lo, hi].
  Coloring restricted(std::int64_t lo, std::int64_t hi) const;

  std::optional<std::uint64_t> smod_prime() const { return prime_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  bool is_table() const { return !prime_.has_value(); }
  const std::vector<Color>& table_colors() const { return colors_; }

  std::string describe() const;

 private:
  Coloring() = default;

  std::optional<std::uint64_t> prime_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = -1;
  std::vector<Color> colors_;
};

struct ProductColoring {
  Coloring coloring;
  /// tuples[id] is the color tuple (chi(delta_1 z), ..., chi(delta_k z)) behind id.
  std::vector<std::vector<Color>> tuples;
};

/// chi*(z) = (chi(delta_j z))_j on [lo, hi], tuple ids assigned in first-seen
/// order while sweeping the window from lo to hi.
ProductColoring product_coloring(const Coloring& base, const IntVector& delta, std::int64_t lo, std::int64_t hi);

}  // namespace radokit
