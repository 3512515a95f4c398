#pragma once

#include <string>
#include <vector>

#include "constalg/polynomial.hpp"

namespace constalg {

/// Dense univariate coefficients, ascending degree.
using Coefficients = std::vector<Rational>;

inline void trim(Coefficients& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

/// c(x_i) as a polynomial of ring A or P in d variables.
template <class Ring>
Polynomial<Monomial<Ring>> univariate(const Coefficients& c, std::size_t d, std::size_t i) {
  Polynomial<Monomial<Ring>> p(d);
  for (std::size_t n = 0; n < c.size(); ++n) {
    Monomial<Ring> m(d);
    m.set_x(i, static_cast<Exponent>(n));
    p.add_term(m, c[n]);
  }
  return p;
}

/// The data f_1(x_1), ..., f_d(x_d) of a derivation Delta(y_i) = f_i(x_i),
/// Delta(x_i) = 0. Every f_i is nonconstant; m_i = deg f_i and lc_i is its
/// leading coefficient. Immutable after construction.
class ProblemInstance {
 public:
  explicit ProblemInstance(std::vector<Coefficients> f) : f_(std::move(f)) {
    if (f_.empty()) throw DegenerateInstance("instance needs d >= 1");
    const std::size_t d = f_.size();
    for (std::size_t i = 0; i < d; ++i) {
      trim(f_[i]);
      const std::string name = "f" + std::to_string(i + 1);
      if (f_[i].empty()) throw DegenerateInstance(name + " is the zero polynomial");
      if (f_[i].size() == 1) throw DegenerateInstance(name + " is constant (degree 0)");
      f_a_.push_back(univariate<ARing>(f_[i], d, i + 1));
      f_p_.push_back(univariate<PRing>(f_[i], d, i + 1));
    }
  }

  /// f_i = x_i^{m_i} for the given exponents.
  static ProblemInstance monomial(const std::vector<std::size_t>& m) {
    std::vector<Coefficients> f;
    for (std::size_t mi : m) {
      Coefficients c(mi + 1, Rational(0));
      c[mi] = 1;
      f.push_back(std::move(c));
    }
    return ProblemInstance(std::move(f));
  }

  [[nodiscard]] std::size_t dim() const { return f_.size(); }
  /// Coefficients of f_i, 1-based i.
  [[nodiscard]] const Coefficients& f(std::size_t i) const { return f_[i - 1]; }
  [[nodiscard]] std::size_t degree(std::size_t i) const { return f_[i - 1].size() - 1; }
  [[nodiscard]] const Rational& lc(std::size_t i) const { return f_[i - 1].back(); }
  [[nodiscard]] const APoly& f_in_a(std::size_t i) const { return f_a_[i - 1]; }
  [[nodiscard]] const PPoly& f_in_p(std::size_t i) const { return f_p_[i - 1]; }
  [[nodiscard]] std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> m;
    for (std::size_t i = 1; i <= dim(); ++i) m.push_back(degree(i));
    return m;
  }
  [[nodiscard]] std::size_t max_degree() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i <= dim(); ++i) best = std::max(best, degree(i));
    return best;
  }

 private:
  std::vector<Coefficients> f_;
  std::vector<APoly> f_a_;
  std::vector<PPoly> f_p_;
};

}  // namespace constalg
