#include "curvelift/rational.hpp"

#include <cctype>
#include <cmath>

#include "curvelift/error.hpp"

namespace curvelift {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t first = 0;
  while (first < s.size() && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
  s = s.substr(first);
  require(!s.empty(), ErrorCode::kParse, "empty rational literal");
  std::size_t slash = s.find('/');
  auto valid_integer = [](std::string_view part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  require(valid_integer(num) && valid_integer(den) && den[0] != '-' && den[0] != '+',
          ErrorCode::kParse, "malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Rational value;
  value.get_num().set_str(num, 10);
  value.get_den().set_str(den, 10);
  require(value.get_den() != 0, ErrorCode::kParse, "zero denominator in '" + s + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

int sign(const Rational& value) { return sgn(value); }

Rational from_double(double value) {
  require(std::isfinite(value), ErrorCode::kInvalidArgument, "non-finite value");
  return Rational(value);
}

}  // namespace curvelift
