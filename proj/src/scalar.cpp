#include "derpair/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace derpair {

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Scalar: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!valid_integer(num_text)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(parse_integer(num_text));
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!valid_integer(den_text) || den_text.front() == '-' || den_text.front() == '+') {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(parse_integer(num_text), den);
  }
  return Scalar(std::move(q));
}

std::string Scalar::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  return Scalar(mpq_class(1 / value_));
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw std::domain_error("Scalar: division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

bool is_zero(const Vec& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  r += b;
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  r -= b;
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(s * x);
  return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

std::string format_vec(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Scalar c = v[i];
    if (out.empty()) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (!(c == Scalar(1))) out += c.str() + "*";
    out += i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace derpair
