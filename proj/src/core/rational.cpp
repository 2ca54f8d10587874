#include "sofic/core/rational.hpp"

#include <limits>
#include <stdexcept>

namespace sofic {

namespace {

nlohmann::json bigint_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or decimal string, got " + j.dump());
}

}  // namespace

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

nlohmann::json rational_to_json(const Rational& r) {
  return {{"num", bigint_to_json(boost::multiprecision::numerator(r))},
          {"den", bigint_to_json(boost::multiprecision::denominator(r))}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den")) {
      throw std::invalid_argument("rational object needs \"num\" and \"den\"");
    }
    const BigInt den = bigint_from_json(j.at("den"));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(bigint_from_json(j.at("num")), den);
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(BigInt(s.substr(0, slash)), den);
  }
  throw std::invalid_argument("cannot read rational from " + j.dump());
}

}  // namespace sofic
