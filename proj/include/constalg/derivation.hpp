#pragma once

#include <vector>

#include "constalg/instance.hpp"

namespace constalg {

/// Delta(g) by the Leibniz rule: for x^a y^b the image is
/// sum_i b_i x^a y^{b - e_i} f_i(x_i).
inline APoly apply_delta(const ProblemInstance& inst, const APoly& g) {
  const std::size_t d = inst.dim();
  if (g.dim() != d) throw DimensionMismatch(d, g.dim());
  APoly out(d);
  for (const auto& [m, c] : g) {
    for (std::size_t i = 1; i <= d; ++i) {
      const Exponent b = m.y(i);
      if (b == 0) continue;
      AMonomial base = m;
      base.set_y(i, b - 1);
      for (const auto& [fm, fc] : inst.f_in_a(i)) out.add_term(base * fm, c * fc * Rational(static_cast<long>(b)));
    }
  }
  return out;
}

inline bool is_constant(const ProblemInstance& inst, const APoly& g) { return apply_delta(inst, g).is_zero(); }

namespace detail {

/// Euclidean division of dense univariate polynomials; divisor nonzero.
inline std::pair<Coefficients, Coefficients> divmod(Coefficients num, const Coefficients& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {Coefficients{}, num};
  Coefficients quo(num.size() - dd, Rational(0));
  for (std::size_t n = num.size(); n-- > dd;) {
    if (num[n].is_zero()) continue;
    const Rational q = num[n] / den.back();
    quo[n - dd] = q;
    for (std::size_t t = 0; t <= dd; ++t) num[n - dd + t] -= q * den[t];
  }
  num.resize(dd);
  trim(num);
  trim(quo);
  return {quo, num};
}

}  // namespace detail

/// Writes g(x_i) = sum_n q_n(x_i) f_i(x_i)^n with deg q_n < m_i, by repeated
/// division by f_i. Returns q_0..q_n; the zero polynomial expands to {0}.
inline std::vector<APoly> f_adic_expand(const ProblemInstance& inst, std::size_t i, const APoly& g) {
  const std::size_t d = inst.dim();
  if (g.dim() != d) throw DimensionMismatch(d, g.dim());
  if (i < 1 || i > d) throw Error("f_adic_expand: index out of range");
  Coefficients dense;
  for (const auto& [m, c] : g) {
    for (std::size_t t = 1; t <= d; ++t)
      if (m.y(t) != 0 || (t != i && m.x(t) != 0))
        throw Error("f_adic_expand: polynomial involves variables other than x" + std::to_string(i));
    const std::size_t e = m.x(i);
    if (dense.size() <= e) dense.resize(e + 1, Rational(0));
    dense[e] = c;
  }
  std::vector<APoly> out;
  do {
    auto [quo, rem] = detail::divmod(dense, inst.f(i));
    out.push_back(univariate<ARing>(rem, d, i));
    dense = std::move(quo);
  } while (!dense.empty());
  return out;
}

}  // namespace constalg
