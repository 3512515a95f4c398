#pragma once

// Text form of polynomials:
//
//   poly    := [sign] term { sign term }      sign := '+' | '-'
//   term    := coef | coef '*' factors | factors
//   factors := factor { '*' factor }
//   factor  := var [ '^' nat ]
//   var     := 'x' nat | 'y' nat | 'u' nat '_' nat
//   coef    := nat | nat '/' nat
//
// Whitespace is ignored and indices are 1-based. Ring A accepts x and y,
// ring P accepts x and u with ascending pairs.

#include <cctype>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

#include "constalg/polynomial.hpp"

namespace constalg {

namespace detail {

template <class Ring>
class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t d) : d_(d) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  Polynomial<Monomial<Ring>> parse() {
    Polynomial<Monomial<Ring>> out(d_);
    if (s_.empty()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size() || first) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      out.add_term(m, sign < 0 ? -c : c);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + ": " + what);
  }
  [[nodiscard]] char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    return s_[pos_++];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }

  std::size_t small_nat() {
    std::string t = digits();
    if (t.size() > 9) fail("number too large: " + t);
    return std::stoul(t);
  }

  std::size_t index() {
    std::size_t i = small_nat();
    if (i < 1 || i > d_) fail("index " + std::to_string(i) + " out of range 1.." + std::to_string(d_));
    return i;
  }

  std::pair<Monomial<Ring>, Rational> term() {
    Rational coef(1);
    Monomial<Ring> mono(d_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        den = digits();
      }
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      coef = Rational(mpz_class(num, 10), mpz_class(den, 10));
      if (peek() != '*') return {mono, coef};
      ++pos_;
    }
    factor(mono);
    while (peek() == '*') {
      ++pos_;
      factor(mono);
    }
    return {mono, coef};
  }

  void factor(Monomial<Ring>& mono) {
    char v = get();
    std::size_t slot = 0;
    if (v == 'x') {
      std::size_t i = index();
      slot = x_slot(i);
    } else if (v == 'y' && std::is_same_v<Ring, ARing>) {
      std::size_t i = index();
      slot = 2 * (i - 1) + 1;
    } else if (v == 'u' && std::is_same_v<Ring, PRing>) {
      std::size_t j = index();
      expect('_');
      std::size_t k = index();
      if (j >= k) fail("u" + std::to_string(j) + "_" + std::to_string(k) + ": pair must satisfy j < k");
      slot = pair_rank(d_, j, k);
    } else {
      --pos_;
      fail(std::string("unexpected '") + v + "'");
    }
    std::uint64_t e = 1;
    if (peek() == '^') {
      ++pos_;
      e = small_nat();
    }
    std::vector<Exponent> exps(mono.exponents().begin(), mono.exponents().end());
    std::uint64_t total = exps[slot] + e;
    if (total > std::numeric_limits<Exponent>::max()) fail("exponent overflow");
    exps[slot] = static_cast<Exponent>(total);
    mono = Monomial<Ring>(d_, std::move(exps));
  }

  [[nodiscard]] std::size_t x_slot(std::size_t i) const {
    if constexpr (std::is_same_v<Ring, ARing>)
      return 2 * (i - 1);
    else
      return pair_count(d_) + i - 1;
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::size_t d_;
};

inline void append_power(std::ostringstream& os, bool& first, const std::string& var, Exponent e) {
  if (e == 0) return;
  if (!first) os << '*';
  first = false;
  os << var;
  if (e > 1) os << '^' << e;
}

}  // namespace detail

inline APoly parse_a_poly(std::string_view text, std::size_t d) {
  return detail::PolyParser<ARing>(text, d).parse();
}
inline PPoly parse_p_poly(std::string_view text, std::size_t d) {
  return detail::PolyParser<PRing>(text, d).parse();
}

/// x-factors ascending, then y-factors (ring A) or u-factors (ring P).
/// The unit monomial prints as "1".
template <class Ring>
std::string format_monomial(const Monomial<Ring>& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 1; i <= m.dim(); ++i) detail::append_power(os, first, "x" + std::to_string(i), m.x(i));
  if constexpr (std::is_same_v<Ring, ARing>) {
    for (std::size_t i = 1; i <= m.dim(); ++i) detail::append_power(os, first, "y" + std::to_string(i), m.y(i));
  } else {
    for (const auto& f : m.u_factors())
      detail::append_power(os, first, "u" + std::to_string(f.j) + "_" + std::to_string(f.k), f.exp);
  }
  return first ? "1" : os.str();
}

template <class M>
std::string format_poly(const Polynomial<M>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    const bool negative = c.sign() < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Rational mag = negative ? -c : c;
    if (m.is_unit())
      os << mag;
    else if (mag.is_one())
      os << format_monomial(m);
    else
      os << mag << '*' << format_monomial(m);
  }
  return os.str();
}

}  // namespace constalg
