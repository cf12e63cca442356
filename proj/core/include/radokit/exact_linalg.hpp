#pragma once

// Exact dense linear algebra over Q, Z and F_p. Everything here is a pure
// function of its arguments; no floating point is used anywhere.

#include "radokit/integer.hpp"
#include "radokit/matrix.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace radokit {

/// Reduced row echelon form over Q together with its pivot columns.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_echelon(RatMatrix m);

std::size_t rank_rational(const RatMatrix& m);
inline std::size_t rank_rational(const IntMatrix& m) { return rank_rational(to_rational(m)); }

/// Basis of {v : M v = 0}, one vector per free column of the echelon form.
std::vector<RatVector> nullspace_rational(const RatMatrix& m);

/// Coefficients c with sum c_i basis_i == v, or nullopt when v is outside the
/// Q-span. Free coefficients are fixed to zero.
std::optional<RatVector> in_rational_span(const std::vector<RatVector>& basis, const RatVector& v);

struct HermiteForm {
  IntMatrix h;  // row-style HNF
  IntMatrix u;  // unimodular, h == u * m
};

/// Row-style Hermite normal form: echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntMatrix& m);

/// Integer coefficients c with sum c_i basis_i == v, or nullopt.
std::optional<IntVector> in_integer_span(const std::vector<IntVector>& basis, const IntVector& v);

Int determinant(const IntMatrix& square);

struct Minor {
  std::vector<std::size_t> columns;  // zero-based, increasing
  Int value;
};

/// Every rows x rows minor, columns chosen in lexicographic order. Requires
/// rows <= cols.
std::vector<Minor> maximal_minors(const IntMatrix& m);

/// Prime factors (distinct, ascending) of |n|; n must be nonzero.
std::vector<Int> prime_factors(const Int& n);

struct DegenerateMinor {
  std::vector<std::size_t> columns;
};

/// Primes dividing at least one maximal minor, or the first vanishing minor
/// when the full-rank hypothesis fails.
std::variant<std::set<Int>, DegenerateMinor> excluded_primes(const IntMatrix& m);

/// Gaussian elimination over F_p. Free variables are set to zero.
std::optional<std::vector<std::uint64_t>> solve_mod_p(const IntMatrix& m, const IntVector& b, std::uint64_t p);

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Indices of a maximal linearly independent subset, scanning left to right.
std::vector<std::size_t> greedy_basis(const std::vector<IntVector>& vectors, std::size_t dim);

/// Left annihilator: integer row vectors y with y . e == 0 for every e, spanning
/// the orthogonal complement of span(vectors) in Q^dim.
std::vector<IntVector> annihilator(const std::vector<IntVector>& vectors, std::size_t dim);

/// Scales a rational vector to a primitive integer vector (content 1) whose
/// first nonzero entry is positive. The zero vector maps to zeros.
IntVector primitive_integer_direction(const RatVector& v);

}  // namespace radokit
