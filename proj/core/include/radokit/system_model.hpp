#pragma once

// The k-partite linear system sum_j sum_i a_{j,i} x_{j,i} = 0, its solutions,
// and the JSON file formats used at the command-line boundary.

#include "radokit/colorings.hpp"
#include "radokit/integer.hpp"
#include "radokit/matrix.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace radokit {

/// Position of a variable: group j and index i inside the group, both zero-based.
struct VarIndex {
  std::size_t group = 0;
  std::size_t index = 0;
  friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

class DkSystem {
 public:
  /// blocks[j][i] is the coefficient vector a_{j,i}; every vector has length dim.
  DkSystem(std::size_t dim, std::vector<std::vector<IntVector>> blocks);

  std::size_t dim() const { return dim_; }
  std::size_t groups() const { return blocks_.size(); }
  std::size_t group_size(std::size_t j) const { return blocks_[j].size(); }
  std::size_t variable_count() const;
  const IntVector& coefficient(std::size_t j, std::size_t i) const { return blocks_[j][i]; }
  const std::vector<std::vector<IntVector>>& blocks() const { return blocks_; }

  /// True when every coefficient is zero; such systems are solved by anything.
  bool degenerate() const { return degenerate_; }

  /// D x (sum N_j) matrix, groups concatenated left to right.
  IntMatrix coefficient_matrix() const;
  std::vector<IntVector> columns() const;
  std::vector<VarIndex> variable_order() const;

  friend bool operator==(const DkSystem&, const DkSystem&) = default;

 private:
  std::size_t dim_;
  std::vector<std::vector<IntVector>> blocks_;
  bool degenerate_ = false;
};

/// values[j][i] = z_{j,i}.
struct Assignment {
  std::vector<std::vector<std::int64_t>> values;

  bool all_zero() const;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

void require_shape(const DkSystem& s, const Assignment& a);
void require_nondegenerate(const DkSystem& s);

IntVector evaluate(const DkSystem& s, const Assignment& a);
bool is_solution(const DkSystem& s, const Assignment& a);

/// Nontrivial exact solution whose groups are each monochromatic under chi.
bool is_semi_monochromatic(const DkSystem& s, const Assignment& a, const Coloring& chi);

/// The single-group system with coefficients delta_j a_{j,i} over the groups
/// with delta_j != 0, plus the map back to the original variables.
struct ScaledSystem {
  DkSystem system;
  IntVector delta;
  std::vector<VarIndex> origin;  // origin[n] = original variable of scaled column n

  /// x_{j,i} = delta_j x'_n for surviving groups, 0 for dropped ones.
  Assignment lift(const Assignment& scaled_solution, const DkSystem& original) const;
};

ScaledSystem scaled_system(const DkSystem& s, const IntVector& delta);

// ---- file formats -------------------------------------------------------

/// Distinct failure kinds of parse_system; `path` names the offending JSON node.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, missing_field, bad_type, count_mismatch, ragged_vector, empty_block, non_integer };

  ParseError(Kind kind, std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), kind_(kind), path_(std::move(path)) {}

  Kind kind() const { return kind_; }
  const std::string& path() const { return path_; }

 private:
  Kind kind_;
  std::string path_;
};

DkSystem parse_system(std::string_view text);
DkSystem system_from_json(const nlohmann::json& j);

/// Canonical form: keys d, k, blocks in that order; integers of magnitude
/// >= 2^53 written as decimal strings.
nlohmann::ordered_json system_to_json(const DkSystem& s);
std::string serialize_system(const DkSystem& s);

Coloring parse_coloring(std::string_view text);
nlohmann::ordered_json coloring_to_json(const Coloring& c);

nlohmann::ordered_json integer_to_json(const Int& x);
Int integer_from_json(const nlohmann::json& j, const std::string& path);

nlohmann::ordered_json solution_to_json(const Assignment& a, const std::vector<Color>& group_colors);
Assignment assignment_from_json(const nlohmann::json& j);

}  // namespace radokit
