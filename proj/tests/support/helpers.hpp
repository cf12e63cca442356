#pragma once

#include "radokit/radokit.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace radokit::testing {

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

inline DkSystem paper_system() {
  return DkSystem(2, {{iv({2, 1}), iv({2, 3})}, {iv({-5, 7}), iv({10, -2})}});
}

inline DkSystem schur_system() { return DkSystem(1, {{iv({1}), iv({1}), iv({-1})}}); }

inline DkSystem x_plus_y_eq_3z() { return DkSystem(1, {{iv({1}), iv({1}), iv({-3})}}); }

/// 2-coloring of [-radius, radius]: 0 when 3 divides z, else 1.
inline Coloring divisible_by_three(std::int64_t radius) {
  return Coloring::from_function(-radius, radius, [](std::int64_t z) { return z % 3 == 0 ? 0 : 1; });
}

}  // namespace radokit::testing
