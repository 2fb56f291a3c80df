#pragma once

// Exact rational scalar. Every quantity in this library is a Rational;
// floating point is never used, so equality checks are decidable.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pbq/errors.hpp"

namespace pbq {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long value) : v_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den) {
    if (den == 0) throw InputError("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = Backend(num, den);  // canonicalized by the backend
  }

  // Accepts "p" or "p/q" with optional leading minus signs.
  static Rational parse(std::string_view text);

  // "p" when the denominator is 1, otherwise "p/q" with q > 0.
  std::string str() const;

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  Rational operator-() const { return Rational(Backend(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : v_(std::move(v)) {}
  Backend v_;
};

// min(a, 0), the negative-part operator.
inline Rational neg_part(const Rational& a) { return a < Rational(0) ? a : Rational(0); }

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow(const Rational& base, unsigned exp);

}  // namespace pbq
