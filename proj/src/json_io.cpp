#include "skewla/json_io.hpp"

namespace skewla {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) throw InputError("exact mode needs integers or \"p/q\" strings, got " + j.dump());
  throw InputError("expected a rational coefficient, got " + j.dump());
}

double double_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return to_double(parse_rational(j.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a numeric coefficient, got " + j.dump());
}

template <typename T, typename F>
Quaternion<T> quaternion_from_json(const json& j, F&& coeff) {
  if (j.is_array()) {
    if (j.size() != 4) throw InputError("quaternion must be [w, x, y, z], got " + j.dump());
    return {coeff(j[0]), coeff(j[1]), coeff(j[2]), coeff(j[3])};
  }
  return Quaternion<T>(coeff(j));
}

}  // namespace

json scalar_to_json(const QuaternionQ& q) {
  return json::array({format_rational(q.w()), format_rational(q.x()), format_rational(q.y()), format_rational(q.z())});
}

json scalar_to_json(const QuaternionD& q) { return json::array({q.w(), q.x(), q.y(), q.z()}); }

template <>
QuaternionQ scalar_from_json<QuaternionQ>(const json& j) {
  return quaternion_from_json<Rational>(j, rational_from_json);
}

template <>
QuaternionD scalar_from_json<QuaternionD>(const json& j) {
  return quaternion_from_json<double>(j, double_from_json);
}

}  // namespace skewla
