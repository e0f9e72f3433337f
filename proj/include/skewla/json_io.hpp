#pragma once

#include "skewla/matrix.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace skewla {

using json = nlohmann::json;

/// Malformed or schema-violating JSON input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using QuaternionQ = Quaternion<Rational>;

/// Scalars are [w, x, y, z] arrays or a bare real. Exact coefficients are "p/q"
/// strings (integers are accepted on input); float coefficients are numbers.
json scalar_to_json(const QuaternionQ& q);
json scalar_to_json(const QuaternionD& q);

template <typename S>
S scalar_from_json(const json& j);

template <>
QuaternionQ scalar_from_json<QuaternionQ>(const json& j);
template <>
QuaternionD scalar_from_json<QuaternionD>(const json& j);

/// {"rows": r, "cols": c, "entries": [[row 0], [row 1], ...]}
template <typename S>
json matrix_to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(S(m(i, j))));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

/// Accepts the object form above ("rows"/"cols" optional) or a bare array of rows.
template <typename S>
Matrix<S> matrix_from_json(const json& j) {
  const json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw InputError("matrix object needs an \"entries\" field");
    entries = &j.at("entries");
  }
  if (!entries->is_array()) throw InputError("matrix entries must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(entries->size());
  Eigen::Index cols = 0;
  if (rows > 0) {
    if (!entries->front().is_array()) throw InputError("matrix entries must be an array of rows");
    cols = static_cast<Eigen::Index>(entries->front().size());
  } else if (j.is_object() && j.contains("cols") && j["cols"].is_number_integer()) {
    cols = j["cols"].get<Eigen::Index>();
    if (cols < 0) throw InputError("\"cols\" must be nonnegative");
  }
  if (j.is_object()) {
    if (j.contains("rows") && (!j["rows"].is_number_integer() || j["rows"].get<Eigen::Index>() != rows)) {
      throw InputError("\"rows\" does not match the entries");
    }
    if (j.contains("cols") && (!j["cols"].is_number_integer() || j["cols"].get<Eigen::Index>() != cols)) {
      throw InputError("\"cols\" does not match the entries");
    }
  }
  Matrix<S> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = (*entries)[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InputError("matrix rows must all have " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = scalar_from_json<S>(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

/// Vectors are matrices, or {"column": [s, ...]} / {"row": [s, ...]}.
template <typename S>
Matrix<S> vector_from_json(const json& j) {
  for (const char* key : {"column", "row"}) {
    if (!j.is_object() || !j.contains(key)) continue;
    const json& items = j.at(key);
    if (!items.is_array()) throw InputError(std::string("\"") + key + "\" must be an array of scalars");
    const auto n = static_cast<Eigen::Index>(items.size());
    const bool column = std::string(key) == "column";
    Matrix<S> v(column ? n : 1, column ? 1 : n);
    for (Eigen::Index k = 0; k < n; ++k) v(k) = scalar_from_json<S>(items[static_cast<std::size_t>(k)]);
    return v;
  }
  return matrix_from_json<S>(j);
}

}  // namespace skewla
