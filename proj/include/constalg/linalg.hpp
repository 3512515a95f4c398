#pragma once

#include <gmpxx.h>

#include <vector>

#include "constalg/rational.hpp"

namespace constalg {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Row echelon form computed by fraction-free (Bareiss) elimination over the
/// integers. Row t of `rows` has its first nonzero entry in column pivots[t].
struct EchelonForm {
  std::size_t cols = 0;
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> pivots;
  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Scales every row by the lcm of its denominators.
inline std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).denominator().get_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
  }
  return out;
}

/// Bareiss elimination: every intermediate entry is a minor of the input, so
/// the division by the previous pivot is exact.
inline EchelonForm fraction_free_echelon(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  EchelonForm ef;
  ef.cols = cols;
  const std::size_t nrows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const mpz_class lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = piv * a[i][j] - lead * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ef.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  ef.rows = std::move(a);
  return ef;
}

inline EchelonForm fraction_free_echelon(const RationalMatrix& m) {
  return fraction_free_echelon(integer_rows(m), m.cols());
}

inline std::size_t rank(const RationalMatrix& m) { return fraction_free_echelon(m).rank(); }

/// Basis of { v : m v = 0 }, one vector per non-pivot column (that entry 1,
/// other free entries 0).
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const EchelonForm ef = fraction_free_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ef.pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[free] = 1;
    for (std::size_t t = ef.rank(); t-- > 0;) {
      const std::size_t pc = ef.pivots[t];
      Rational s(0);
      for (std::size_t j = pc + 1; j < n; ++j)
        if (!x[j].is_zero() && ef.rows[t][j] != 0) s += Rational(ef.rows[t][j]) * x[j];
      x[pc] = -s / Rational(ef.rows[t][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace constalg
