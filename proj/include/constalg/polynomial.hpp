#pragma once

#include <compare>
#include <concepts>
#include <functional>
#include <map>
#include <utility>

#include "constalg/error.hpp"
#include "constalg/monomial.hpp"
#include "constalg/rational.hpp"

namespace constalg {

/// A total comparison on monomials of type M.
template <class O, class M>
concept MonomialOrder = requires(const O& o, const M& a, const M& b) {
  { o.compare(a, b) } -> std::same_as<std::strong_ordering>;
};

/// The storage-order lexicographic comparison of a ring. For ring A this is
/// the lex order x_1 > y_1 > ... > y_d; for ring P it is plain lex with
/// u_12 > u_13 > ... > u_{d-1,d} > x_1 > ... > x_d.
struct CanonicalOrder {
  template <class M>
  std::strong_ordering compare(const M& a, const M& b) const {
    return a <=> b;
  }
};

/// Adapts a MonomialOrder to a strict-weak "less" predicate for containers.
template <class Order>
struct OrderLess {
  const Order* order;
  template <class M>
  bool operator()(const M& a, const M& b) const {
    return order->compare(a, b) < 0;
  }
};

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// descending canonical order; no stored coefficient is ever zero.
template <class M>
class Polynomial {
 public:
  using monomial_type = M;
  using term_map = std::map<M, Rational, std::greater<M>>;

  Polynomial() = default;
  explicit Polynomial(std::size_t d) : d_(d) {}
  Polynomial(const M& m, const Rational& c) : d_(m.dim()) { add_term(m, c); }
  explicit Polynomial(const M& m) : Polynomial(m, Rational(1)) {}

  static Polynomial constant(std::size_t d, const Rational& c) { return Polynomial(M(d), c); }

  [[nodiscard]] std::size_t dim() const { return d_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const term_map& terms() const { return terms_; }
  [[nodiscard]] auto begin() const { return terms_.begin(); }
  [[nodiscard]] auto end() const { return terms_.end(); }

  [[nodiscard]] Rational coefficient(const M& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  [[nodiscard]] std::uint64_t total_degree() const {
    std::uint64_t deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
    return deg;
  }

  /// Accumulates c*m into the polynomial (builder use).
  void add_term(const M& m, const Rational& c) {
    if (m.dim() != d_) throw DimensionMismatch(d_, m.dim());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial r(a.d_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto [it, inserted] = r.terms_.try_emplace(ma * mb, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    std::erase_if(r.terms_, [](const auto& t) { return t.second.is_zero(); });
    return r;
  }

  /// Multiplies every term by the monomial m and scalar c.
  [[nodiscard]] Polynomial times_term(const M& m, const Rational& c) const {
    if (m.dim() != d_) throw DimensionMismatch(d_, m.dim());
    Polynomial r(d_);
    if (c.is_zero()) return r;
    for (const auto& [tm, tc] : terms_) r.terms_.emplace_hint(r.terms_.end(), tm * m, tc * c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.d_ != d_) throw DimensionMismatch(d_, o.d_);
  }

  std::size_t d_ = 0;
  term_map terms_;
};

using APoly = Polynomial<AMonomial>;
using PPoly = Polynomial<PMonomial>;

template <class M>
struct Term {
  M monomial;
  Rational coefficient;
};

/// Order-maximal term of a nonzero polynomial.
template <class M, class Order>
  requires MonomialOrder<Order, M>
Term<M> leading_term(const Polynomial<M>& p, const Order& order) {
  if (p.is_zero()) throw ZeroPolynomial("leading_term");
  auto best = p.begin();
  for (auto it = std::next(p.begin()); it != p.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

template <class M>
Term<M> leading_term(const Polynomial<M>& p) {
  if (p.is_zero()) throw ZeroPolynomial("leading_term");
  return {p.begin()->first, p.begin()->second};
}

/// p^n by repeated squaring.
template <class M>
Polynomial<M> power(const Polynomial<M>& p, unsigned n) {
  Polynomial<M> result = Polynomial<M>::constant(p.dim(), 1);
  Polynomial<M> base = p;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace constalg
