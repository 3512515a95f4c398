#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "constalg/error.hpp"

namespace constalg {

using Exponent = std::uint32_t;

/// Ring A = K[x_1..x_d, y_1..y_d]. Exponents are stored interleaved as
/// (x_1, y_1, x_2, y_2, ..., x_d, y_d), so the storage order is exactly the
/// lexicographic order with x_1 > y_1 > x_2 > ... > y_d.
struct ARing {
  static constexpr std::size_t width(std::size_t d) { return 2 * d; }
};

/// Ring P = K[x_1..x_d, u_{jk} : j<k]. Storage is (u_12, u_13, ..., u_{d-1,d},
/// x_1, ..., x_d): pairs in ascending (j, k) order, then the x variables.
struct PRing {
  static constexpr std::size_t width(std::size_t d) { return d * (d - 1) / 2 + d; }
};

/// Number of pairs (j, k) with 1 <= j < k <= d.
constexpr std::size_t pair_count(std::size_t d) { return d * (d - 1) / 2; }

/// 0-based slot of u_{jk} (1-based j < k) in ascending pair order.
constexpr std::size_t pair_rank(std::size_t d, std::size_t j, std::size_t k) {
  return (j - 1) * d - (j - 1) * j / 2 + (k - j - 1);
}

struct UFactor {
  std::size_t j;
  std::size_t k;
  Exponent exp;
  friend bool operator==(const UFactor&, const UFactor&) = default;
};

/// Exponent vector over one of the two rings. Variable indices in the public
/// accessors are 1-based, matching the printed names x1, y2, u1_3.
template <class Ring>
class Monomial {
 public:
  using ring_type = Ring;

  Monomial() = default;
  explicit Monomial(std::size_t d) : d_(d), e_(Ring::width(d), 0) {}
  Monomial(std::size_t d, std::vector<Exponent> exps) : d_(d), e_(std::move(exps)) {
    if (e_.size() != Ring::width(d)) throw DimensionMismatch(Ring::width(d), e_.size());
  }

  [[nodiscard]] std::size_t dim() const { return d_; }
  [[nodiscard]] std::span<const Exponent> exponents() const { return e_; }
  [[nodiscard]] Exponent operator[](std::size_t slot) const { return e_[slot]; }
  [[nodiscard]] bool is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent e) { return e == 0; });
  }
  [[nodiscard]] std::uint64_t total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }

  // ---- ring A accessors
  [[nodiscard]] Exponent x(std::size_t i) const requires std::same_as<Ring, ARing> { return e_[2 * (i - 1)]; }
  [[nodiscard]] Exponent y(std::size_t i) const requires std::same_as<Ring, ARing> { return e_[2 * (i - 1) + 1]; }
  void set_x(std::size_t i, Exponent v) requires std::same_as<Ring, ARing> { e_[2 * (i - 1)] = v; }
  void set_y(std::size_t i, Exponent v) requires std::same_as<Ring, ARing> { e_[2 * (i - 1) + 1] = v; }
  [[nodiscard]] std::uint64_t y_degree() const requires std::same_as<Ring, ARing> {
    std::uint64_t s = 0;
    for (std::size_t i = 1; i <= d_; ++i) s += y(i);
    return s;
  }

  // ---- ring P accessors
  [[nodiscard]] Exponent x(std::size_t i) const requires std::same_as<Ring, PRing> {
    return e_[pair_count(d_) + i - 1];
  }
  [[nodiscard]] Exponent u(std::size_t j, std::size_t k) const requires std::same_as<Ring, PRing> {
    return e_[pair_rank(d_, j, k)];
  }
  void set_x(std::size_t i, Exponent v) requires std::same_as<Ring, PRing> { e_[pair_count(d_) + i - 1] = v; }
  void set_u(std::size_t j, std::size_t k, Exponent v) requires std::same_as<Ring, PRing> {
    e_[pair_rank(d_, j, k)] = v;
  }
  /// deg in X_d.
  [[nodiscard]] std::uint64_t x_degree() const requires std::same_as<Ring, PRing> {
    return std::accumulate(e_.begin() + static_cast<std::ptrdiff_t>(pair_count(d_)), e_.end(), std::uint64_t{0});
  }
  /// deg in U_d.
  [[nodiscard]] std::uint64_t u_degree() const requires std::same_as<Ring, PRing> {
    return std::accumulate(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(pair_count(d_)), std::uint64_t{0});
  }
  /// Sum over u-factors of the interval length k - j, with multiplicity.
  [[nodiscard]] std::uint64_t interval_length() const requires std::same_as<Ring, PRing> {
    std::uint64_t s = 0;
    for (const auto& f : u_factors()) s += static_cast<std::uint64_t>(f.exp) * (f.k - f.j);
    return s;
  }
  /// u-factors with positive exponent, ascending in (j, k).
  [[nodiscard]] std::vector<UFactor> u_factors() const requires std::same_as<Ring, PRing> {
    std::vector<UFactor> out;
    std::size_t slot = 0;
    for (std::size_t j = 1; j <= d_; ++j)
      for (std::size_t k = j + 1; k <= d_; ++k, ++slot)
        if (e_[slot] > 0) out.push_back({j, k, e_[slot]});
    return out;
  }

  // ---- monoid structure
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_dims(a, b);
    Monomial r = a;
    for (std::size_t s = 0; s < r.e_.size(); ++s) r.e_[s] += b.e_[s];
    return r;
  }
  /// True iff a divides b.
  friend bool divides(const Monomial& a, const Monomial& b) {
    check_dims(a, b);
    for (std::size_t s = 0; s < a.e_.size(); ++s)
      if (a.e_[s] > b.e_[s]) return false;
    return true;
  }
  /// b / a; requires divides(a, b).
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    if (!divides(a, b)) throw Error("monomial quotient: not divisible");
    Monomial r = b;
    for (std::size_t s = 0; s < r.e_.size(); ++s) r.e_[s] -= a.e_[s];
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_dims(a, b);
    Monomial r = a;
    for (std::size_t s = 0; s < r.e_.size(); ++s) r.e_[s] = std::max(a.e_[s], b.e_[s]);
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    check_dims(a, b);
    for (std::size_t s = 0; s < a.e_.size(); ++s)
      if (a.e_[s] > 0 && b.e_[s] > 0) return false;
    return true;
  }

  /// Storage-order lexicographic comparison (the canonical order of the ring).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  static void check_dims(const Monomial& a, const Monomial& b) {
    if (a.d_ != b.d_) throw DimensionMismatch(a.d_, b.d_);
  }

  std::size_t d_ = 0;
  std::vector<Exponent> e_;
};

using AMonomial = Monomial<ARing>;
using PMonomial = Monomial<PRing>;

inline AMonomial a_x(std::size_t d, std::size_t i, Exponent e = 1) {
  AMonomial m(d);
  m.set_x(i, e);
  return m;
}
inline AMonomial a_y(std::size_t d, std::size_t i, Exponent e = 1) {
  AMonomial m(d);
  m.set_y(i, e);
  return m;
}
inline PMonomial p_x(std::size_t d, std::size_t i, Exponent e = 1) {
  PMonomial m(d);
  m.set_x(i, e);
  return m;
}
inline PMonomial p_u(std::size_t d, std::size_t j, std::size_t k, Exponent e = 1) {
  PMonomial m(d);
  m.set_u(j, k, e);
  return m;
}

/// Calls visit(exps) for every exponent vector of the given width whose
/// entries sum to at most max_degree, in graded order (degree 0 first).
inline void for_each_exponent_vector(std::size_t width, std::size_t max_degree,
                                     const std::function<void(const std::vector<Exponent>&)>& visit) {
  std::vector<Exponent> e(width, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t remaining) {
    if (slot + 1 == width) {
      e[slot] = static_cast<Exponent>(remaining);
      visit(e);
      e[slot] = 0;
      return;
    }
    for (std::size_t v = remaining + 1; v-- > 0;) {
      e[slot] = static_cast<Exponent>(v);
      rec(slot + 1, remaining - v);
    }
    e[slot] = 0;
  };
  if (width == 0) {
    visit(e);
    return;
  }
  for (std::size_t deg = 0; deg <= max_degree; ++deg) rec(0, deg);
}

/// All monomials of the ring with total degree at most max_degree.
template <class Ring>
std::vector<Monomial<Ring>> monomials_up_to(std::size_t d, std::size_t max_degree) {
  std::vector<Monomial<Ring>> out;
  for_each_exponent_vector(Ring::width(d), max_degree,
                           [&](const std::vector<Exponent>& e) { out.emplace_back(d, e); });
  return out;
}

}  // namespace constalg
