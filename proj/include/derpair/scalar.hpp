#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace derpair {

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
///
/// Every arithmetic operation returns a canonical value, so equality is a
/// plain comparison of numerator and denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);
  explicit Scalar(mpq_class value);

  /// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument.
  static Scalar parse(std::string_view text);

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other) {
    value_ += other.value_;
    return *this;
  }
  Scalar& operator-=(const Scalar& other) {
    value_ -= other.value_;
    return *this;
  }
  Scalar& operator*=(const Scalar& other) {
    value_ *= other.value_;
    return *this;
  }
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(mpq_class(-value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class value_;
};

/// Dense coordinate vector over the rationals.
using Vec = std::vector<Scalar>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar{}); }

inline Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);

/// Renders a coefficient vector against basis labels, e.g. "2*e1 - 1/3*e2".
std::string format_vec(const Vec& v, const std::vector<std::string>& labels);

}  // namespace derpair
