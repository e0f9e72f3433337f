#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace skewla {

/// Exact rational coefficient. Expression templates are off so the type
/// behaves as a plain value inside Eigen containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form (q > 0, lowest terms, q always written).
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double r) { return r; }

}  // namespace skewla
