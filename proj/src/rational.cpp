#include "pbq/rational.hpp"

#include <cctype>
#include <ostream>

namespace pbq {

namespace {

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw InputError("Rational: empty integer");
  size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') pos = 1;
  if (pos == s.size()) throw InputError("Rational: sign without digits");
  for (size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("Rational: invalid integer '" + std::string(s) + "'");
  }
  return BigInt(std::string(s));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InputError("Rational: empty string");
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s), BigInt(1));
  return Rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

std::string Rational::str() const {
  BigInt num = numerator();
  BigInt den = denominator();
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exp) {
  Rational result(1);
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

}  // namespace pbq
