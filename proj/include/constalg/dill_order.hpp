#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "constalg/monomial.hpp"

namespace constalg {

/// Degree / interval-length / lexicographic orders on P-monomials.
///
/// `corrected` compares, in turn: deg_U, total interval length, deg_X, and
/// finally the exponent vector lexicographically with variable precedence
/// u_12 > u_13 > ... > u_{d-1,d} > x_1 > ... > x_d. Under it the leading
/// monomials of r(i,j,k,l) and s(i,j,k) are u_ik u_jl and x_j^{m_j} u_ik.
///
/// `paper_literal` compares deg_X, then deg_U, then interval length, then
/// the index tuple (x indices ascending, then the j's, then the k's of the
/// u-factors sorted by (j, k)) lexicographically, larger entry winning. It
/// does not reproduce the leading monomials above and is kept for comparison.
enum class OrderVariant { corrected, paper_literal };

inline std::string_view to_string(OrderVariant v) {
  return v == OrderVariant::corrected ? "corrected" : "paper";
}

inline OrderVariant parse_variant(std::string_view s) {
  if (s == "corrected") return OrderVariant::corrected;
  if (s == "paper" || s == "paper_literal") return OrderVariant::paper_literal;
  throw ParseError("unknown order variant '" + std::string(s) + "'");
}

/// Graded part of the comparison key. Additive under multiplication.
struct DillKey {
  std::uint64_t x_degree = 0;
  std::uint64_t u_degree = 0;
  std::uint64_t interval_length = 0;
  friend bool operator==(const DillKey&, const DillKey&) = default;
};

inline DillKey dill_key(const PMonomial& v) {
  return {v.x_degree(), v.u_degree(), v.interval_length()};
}

namespace detail {

inline std::vector<std::size_t> index_tuple(const PMonomial& v) {
  std::vector<std::size_t> omega;
  for (std::size_t i = 1; i <= v.dim(); ++i)
    for (Exponent e = 0; e < v.x(i); ++e) omega.push_back(i);
  const auto factors = v.u_factors();
  for (const auto& f : factors)
    for (Exponent e = 0; e < f.exp; ++e) omega.push_back(f.j);
  for (const auto& f : factors)
    for (Exponent e = 0; e < f.exp; ++e) omega.push_back(f.k);
  return omega;
}

}  // namespace detail

class DillOrder {
 public:
  explicit DillOrder(OrderVariant variant = OrderVariant::corrected) : variant_(variant) {}

  [[nodiscard]] OrderVariant variant() const { return variant_; }

  [[nodiscard]] std::strong_ordering compare(const PMonomial& a, const PMonomial& b) const {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    const DillKey ka = dill_key(a);
    const DillKey kb = dill_key(b);
    if (variant_ == OrderVariant::corrected) {
      if (auto c = ka.u_degree <=> kb.u_degree; c != 0) return c;
      if (auto c = ka.interval_length <=> kb.interval_length; c != 0) return c;
      if (auto c = ka.x_degree <=> kb.x_degree; c != 0) return c;
      return a <=> b;
    }
    if (auto c = ka.x_degree <=> kb.x_degree; c != 0) return c;
    if (auto c = ka.u_degree <=> kb.u_degree; c != 0) return c;
    if (auto c = ka.interval_length <=> kb.interval_length; c != 0) return c;
    const auto wa = detail::index_tuple(a);
    const auto wb = detail::index_tuple(b);
    return std::lexicographical_compare_three_way(wa.begin(), wa.end(), wb.begin(), wb.end());
  }

 private:
  OrderVariant variant_;
};

/// Plain lexicographic order on P (u_12 > ... > u_{d-1,d} > x_1 > ... > x_d).
struct PLexOrder {
  [[nodiscard]] std::strong_ordering compare(const PMonomial& a, const PMonomial& b) const { return a <=> b; }
};

}  // namespace constalg
