#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>

namespace sofic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

double to_double(const Rational& r);

/// JSON form {"num": ..., "den": ...}. Components that do not fit in an int64
/// are written as decimal strings.
nlohmann::json rational_to_json(const Rational& r);

/// Accepts {"num","den"}, a bare integer, or a "p/q" string.
Rational rational_from_json(const nlohmann::json& j);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace sofic
