#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "constalg/error.hpp"

namespace constalg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(mpz_class(std::to_string(v))) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Accepts "n", "-n", "n/m", "-n/m" with decimal digits.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto digits = [](std::string_view t) {
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw ParseError("malformed rational '" + s + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (negative) n = -n;
    return Rational(n, d);
  }

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
  [[nodiscard]] const mpq_class& value() const { return v_; }
  [[nodiscard]] std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

}  // namespace constalg
