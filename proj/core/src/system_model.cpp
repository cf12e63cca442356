#include "radokit/system_model.hpp"

#include <algorithm>
#include <set>

namespace radokit {

using nlohmann::json;
using nlohmann::ordered_json;

DkSystem::DkSystem(std::size_t dim, std::vector<std::vector<IntVector>> blocks)
    : dim_(dim), blocks_(std::move(blocks)) {
  if (dim_ == 0) throw InputError("system dimension must be at least 1");
  if (blocks_.empty()) throw InputError("system needs at least one group");
  degenerate_ = true;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j].empty()) throw InputError("group " + std::to_string(j + 1) + " is empty");
    for (const auto& v : blocks_[j]) {
      if (v.size() != dim_) throw InputError("coefficient vector length differs from the dimension");
      if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; })) degenerate_ = false;
    }
  }
}

std::size_t DkSystem::variable_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.size();
  return n;
}

IntMatrix DkSystem::coefficient_matrix() const { return IntMatrix::from_columns(columns(), dim_); }

std::vector<IntVector> DkSystem::columns() const {
  std::vector<IntVector> out;
  out.reserve(variable_count());
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<VarIndex> DkSystem::variable_order() const {
  std::vector<VarIndex> out;
  for (std::size_t j = 0; j < blocks_.size(); ++j)
    for (std::size_t i = 0; i < blocks_[j].size(); ++i) out.push_back({j, i});
  return out;
}

bool Assignment::all_zero() const {
  return std::all_of(values.begin(), values.end(),
                     [](const auto& g) { return std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; }); });
}

void require_shape(const DkSystem& s, const Assignment& a) {
  if (a.values.size() != s.groups()) throw InputError("assignment has the wrong number of groups");
  for (std::size_t j = 0; j < s.groups(); ++j)
    if (a.values[j].size() != s.group_size(j))
      throw InputError("assignment group " + std::to_string(j + 1) + " has the wrong size");
}

void require_nondegenerate(const DkSystem& s) {
  if (s.degenerate()) throw InputError("degenerate system: every coefficient is zero");
}

IntVector evaluate(const DkSystem& s, const Assignment& a) {
  require_shape(s, a);
  IntVector sum(s.dim());
  for (std::size_t j = 0; j < s.groups(); ++j)
    for (std::size_t i = 0; i < s.group_size(j); ++i) {
      const std::int64_t z = a.values[j][i];
      if (z == 0) continue;
      const Int zz = from_int64(z);
      const auto& col = s.coefficient(j, i);
      for (std::size_t d = 0; d < s.dim(); ++d) sum[d] += col[d] * zz;
    }
  return sum;
}

bool is_solution(const DkSystem& s, const Assignment& a) {
  const auto v = evaluate(s, a);
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_semi_monochromatic(const DkSystem& s, const Assignment& a, const Coloring& chi) {
  require_shape(s, a);
  // colors are looked up first so out-of-window values always raise
  bool mono = true;
  for (const auto& group : a.values) {
    const Color c = chi(group.front());
    for (auto z : group)
      if (chi(z) != c) mono = false;
  }
  return mono && !a.all_zero() && is_solution(s, a);
}

Assignment ScaledSystem::lift(const Assignment& scaled_solution, const DkSystem& original) const {
  require_shape(system, scaled_solution);
  Assignment out;
  out.values.resize(original.groups());
  for (std::size_t j = 0; j < original.groups(); ++j) out.values[j].assign(original.group_size(j), 0);
  for (std::size_t n = 0; n < origin.size(); ++n) {
    const auto [j, i] = origin[n];
    const Int x = delta[j] * from_int64(scaled_solution.values[0][n]);
    out.values[j][i] = to_int64(x);
  }
  return out;
}

ScaledSystem scaled_system(const DkSystem& s, const IntVector& delta) {
  if (delta.size() != s.groups()) throw InputError("delta length must equal the number of groups");
  if (std::all_of(delta.begin(), delta.end(), [](const Int& x) { return x == 0; }))
    throw InputError("delta must not be the zero vector");
  std::vector<IntVector> merged;
  std::vector<VarIndex> origin;
  for (std::size_t j = 0; j < s.groups(); ++j) {
    if (delta[j] == 0) continue;
    for (std::size_t i = 0; i < s.group_size(j); ++i) {
      IntVector v = s.coefficient(j, i);
      for (auto& x : v) x *= delta[j];
      merged.push_back(std::move(v));
      origin.push_back({j, i});
    }
  }
  return {DkSystem(s.dim(), {std::move(merged)}), delta, std::move(origin)};
}

// ---- JSON ---------------------------------------------------------------

namespace {

const Int& json_safe_limit() {
  static const Int limit = Int(1) << 53;
  return limit;
}

std::size_t require_count(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) throw ParseError(ParseError::Kind::missing_field, path + "/" + key, "missing field");
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    throw ParseError(ParseError::Kind::bad_type, path + "/" + key, "expected a positive integer");
  return static_cast<std::size_t>(v.get<std::int64_t>());
}

}  // namespace

Int integer_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    const auto v = j.get<std::int64_t>();
    return from_int64(v);
  }
  if (j.is_string()) {
    if (auto v = parse_decimal(j.get<std::string>())) return *v;
  }
  throw ParseError(ParseError::Kind::non_integer, path, "expected an integer (number or decimal string)");
}

ordered_json integer_to_json(const Int& x) {
  if (abs(x) >= json_safe_limit()) return x.get_str();
  return static_cast<std::int64_t>(x.get_si());
}

DkSystem system_from_json(const json& j) {
  if (!j.is_object()) throw ParseError(ParseError::Kind::bad_type, "", "system file must be a JSON object");
  const std::size_t d = require_count(j, "d", "");
  const std::size_t k = require_count(j, "k", "");
  if (!j.contains("blocks")) throw ParseError(ParseError::Kind::missing_field, "/blocks", "missing field");
  const auto& blocks = j.at("blocks");
  if (!blocks.is_array()) throw ParseError(ParseError::Kind::bad_type, "/blocks", "expected an array");
  if (blocks.size() != k)
    throw ParseError(ParseError::Kind::count_mismatch, "/blocks",
                     "k = " + std::to_string(k) + " but " + std::to_string(blocks.size()) + " blocks given");
  std::vector<std::vector<IntVector>> out(k);
  for (std::size_t jj = 0; jj < k; ++jj) {
    const std::string bpath = "/blocks/" + std::to_string(jj);
    const auto& block = blocks[jj];
    if (!block.is_array()) throw ParseError(ParseError::Kind::bad_type, bpath, "expected an array of vectors");
    if (block.empty()) throw ParseError(ParseError::Kind::empty_block, bpath, "group has no variables");
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::string vpath = bpath + "/" + std::to_string(i);
      const auto& vec = block[i];
      if (!vec.is_array()) throw ParseError(ParseError::Kind::bad_type, vpath, "expected a coefficient vector");
      if (vec.size() != d)
        throw ParseError(ParseError::Kind::ragged_vector, vpath,
                         "vector length " + std::to_string(vec.size()) + " differs from d = " + std::to_string(d));
      IntVector v;
      v.reserve(d);
      for (std::size_t c = 0; c < d; ++c) v.push_back(integer_from_json(vec[c], vpath + "/" + std::to_string(c)));
      out[jj].push_back(std::move(v));
    }
  }
  return DkSystem(d, std::move(out));
}

DkSystem parse_system(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::syntax, "", e.what());
  }
  return system_from_json(j);
}

ordered_json system_to_json(const DkSystem& s) {
  ordered_json out;
  out["d"] = s.dim();
  out["k"] = s.groups();
  ordered_json blocks = ordered_json::array();
  for (const auto& block : s.blocks()) {
    ordered_json b = ordered_json::array();
    for (const auto& v : block) {
      ordered_json vec = ordered_json::array();
      for (const auto& x : v) vec.push_back(integer_to_json(x));
      b.push_back(std::move(vec));
    }
    blocks.push_back(std::move(b));
  }
  out["blocks"] = std::move(blocks);
  return out;
}

std::string serialize_system(const DkSystem& s) { return system_to_json(s).dump() + "\n"; }

Coloring parse_coloring(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::syntax, "", e.what());
  }
  if (!j.is_object() || !j.contains("window") || !j.contains("colors"))
    throw ParseError(ParseError::Kind::missing_field, "", "coloring needs \"window\" and \"colors\"");
  const auto& w = j.at("window");
  if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
    throw ParseError(ParseError::Kind::bad_type, "/window", "expected [lo, hi]");
  const auto lo = w[0].get<std::int64_t>();
  const auto hi = w[1].get<std::int64_t>();
  if (hi < lo) throw ParseError(ParseError::Kind::bad_type, "/window", "empty window");
  const auto& colors = j.at("colors");
  if (!colors.is_object()) throw ParseError(ParseError::Kind::bad_type, "/colors", "expected an object");
  std::vector<Color> table(static_cast<std::size_t>(hi - lo + 1), -1);
  for (const auto& [key, value] : colors.items()) {
    const std::string path = "/colors/" + key;
    const auto z = parse_decimal(key);
    if (!z || !fits_int64(*z)) throw ParseError(ParseError::Kind::non_integer, path, "key is not an integer");
    const auto zi = to_int64(*z);
    if (zi < lo || zi > hi) throw ParseError(ParseError::Kind::count_mismatch, path, "key outside the window");
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
      throw ParseError(ParseError::Kind::bad_type, path, "color id must be a nonnegative integer");
    table[static_cast<std::size_t>(zi - lo)] = value.get<std::int64_t>();
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] < 0)
      throw ParseError(ParseError::Kind::count_mismatch, "/colors",
                       "coloring is not total: " + std::to_string(lo + static_cast<std::int64_t>(i)) + " missing");
  return Coloring::table(lo, hi, std::move(table));
}

ordered_json coloring_to_json(const Coloring& c) {
  if (!c.is_table()) throw InputError("only table colorings have a file form");
  ordered_json out;
  out["window"] = {c.lo(), c.hi()};
  ordered_json colors = ordered_json::object();
  for (std::int64_t z = c.lo(); z <= c.hi(); ++z) colors[std::to_string(z)] = c(z);
  out["colors"] = std::move(colors);
  return out;
}

ordered_json solution_to_json(const Assignment& a, const std::vector<Color>& group_colors) {
  ordered_json out;
  out["values"] = a.values;
  out["colors"] = group_colors;
  return out;
}

Assignment assignment_from_json(const json& j) {
  if (!j.is_object() || !j.contains("values") || !j.at("values").is_array())
    throw ParseError(ParseError::Kind::missing_field, "/values", "expected an array of groups");
  Assignment a;
  const auto& groups = j.at("values");
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::string gpath = "/values/" + std::to_string(g);
    if (!groups[g].is_array()) throw ParseError(ParseError::Kind::bad_type, gpath, "expected an array");
    std::vector<std::int64_t> vals;
    for (std::size_t i = 0; i < groups[g].size(); ++i) {
      const Int v = integer_from_json(groups[g][i], gpath + "/" + std::to_string(i));
      if (!fits_int64(v)) throw ParseError(ParseError::Kind::non_integer, gpath, "value exceeds 64 bits");
      vals.push_back(to_int64(v));
    }
    a.values.push_back(std::move(vals));
  }
  return a;
}

}  // namespace radokit
