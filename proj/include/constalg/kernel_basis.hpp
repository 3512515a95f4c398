#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "constalg/dill_order.hpp"
#include "constalg/linalg.hpp"
#include "constalg/presentation.hpp"
#include "constalg/text.hpp"

namespace constalg {

/// Lex order on ring A with x_1 > y_1 > x_2 > ... > y_d, i.e. comparison of
/// the tuples (a_1, b_1, ..., a_d, b_d). This is the storage order of AMonomial.
struct ALexOrder {
  [[nodiscard]] std::strong_ordering compare(const AMonomial& a, const AMonomial& b) const { return a <=> b; }
};

/// A P-monomial is a normal word when (i) no two of its u-intervals cross,
/// i.e. there is no j_b < j_c < k_b < k_c, and (ii) every x_i with i strictly
/// inside some u-interval has exponent below m_i.
inline bool is_normal_word(const ProblemInstance& inst, const PMonomial& v) {
  if (v.dim() != inst.dim()) throw DimensionMismatch(inst.dim(), v.dim());
  const auto factors = v.u_factors();
  for (const auto& b : factors) {
    for (const auto& c : factors)
      if (b.j < c.j && c.j < b.k && b.k < c.k) return false;
    for (std::size_t i = b.j + 1; i < b.k; ++i)
      if (v.x(i) >= inst.degree(i)) return false;
  }
  return true;
}

/// {u_ik u_jl : i<j<k<l} u {x_j^{m_j} u_ik : i<j<k}.
inline std::vector<PMonomial> claimed_leads(const ProblemInstance& inst) {
  const std::size_t d = inst.dim();
  std::vector<PMonomial> out;
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i + 1; j <= d; ++j)
      for (std::size_t k = j + 1; k <= d; ++k) {
        out.push_back(p_x(d, j, static_cast<Exponent>(inst.degree(j))) * p_u(d, i, k));
        for (std::size_t l = k + 1; l <= d; ++l) out.push_back(p_u(d, i, k) * p_u(d, j, l));
      }
  return out;
}

inline bool divisible_by_claimed_lead(const ProblemInstance& inst, const PMonomial& v) {
  const auto leads = claimed_leads(inst);
  return std::any_of(leads.begin(), leads.end(), [&](const PMonomial& l) { return divides(l, v); });
}

/// A P-monomial certified to be a normal word.
class NormalWord {
 public:
  static NormalWord make(const ProblemInstance& inst, const PMonomial& v) {
    if (!is_normal_word(inst, v)) throw Error("not a normal word: " + format_monomial(v));
    return NormalWord(v);
  }
  [[nodiscard]] const PMonomial& monomial() const { return v_; }
  friend bool operator==(const NormalWord&, const NormalWord&) = default;

 private:
  explicit NormalWord(PMonomial v) : v_(std::move(v)) {}
  PMonomial v_;
};

/// ALex-leading term of pi(v) for a normal word v, read off without
/// expansion: x^a * prod_b x_{j_b}^{m_{j_b}} y_{k_b}, coefficient prod_b lc_{j_b}.
inline Term<AMonomial> lead_of_image(const ProblemInstance& inst, const PMonomial& v) {
  if (!is_normal_word(inst, v)) throw Error("lead_of_image: not a normal word");
  const std::size_t d = inst.dim();
  AMonomial w(d);
  for (std::size_t i = 1; i <= d; ++i) w.set_x(i, v.x(i));
  Rational coef(1);
  for (const auto& f : v.u_factors()) {
    w.set_x(f.j, w.x(f.j) + f.exp * static_cast<Exponent>(inst.degree(f.j)));
    w.set_y(f.k, w.y(f.k) + f.exp);
    for (Exponent e = 0; e < f.exp; ++e) coef *= inst.lc(f.j);
  }
  return {w, coef};
}

inline Term<AMonomial> lead_of_image(const ProblemInstance& inst, const NormalWord& v) {
  return lead_of_image(inst, v.monomial());
}

/// Inverse of lead_of_image. Repeatedly takes the smallest k with a positive
/// y-exponent and the largest i < k whose x-exponent reaches m_i, and peels
/// off u_ik = x_i^{m_i} y_k. Throws PeelingFailure when no such i exists or
/// the result is not a normal word.
inline NormalWord recover_word_from_lead(const ProblemInstance& inst, const AMonomial& w) {
  const std::size_t d = inst.dim();
  if (w.dim() != d) throw DimensionMismatch(d, w.dim());
  AMonomial rest = w;
  PMonomial v(d);
  while (rest.y_degree() > 0) {
    std::size_t k = 1;
    while (rest.y(k) == 0) ++k;
    std::size_t i = k;
    while (i > 1 && rest.x(i - 1) < inst.degree(i - 1)) --i;
    if (i == 1) throw PeelingFailure("no i < " + std::to_string(k) + " with x_i^{m_i} available to pair with y" +
                                     std::to_string(k));
    --i;
    v.set_u(i, k, v.u(i, k) + 1);
    rest.set_x(i, rest.x(i) - static_cast<Exponent>(inst.degree(i)));
    rest.set_y(k, rest.y(k) - 1);
  }
  for (std::size_t i = 1; i <= d; ++i) v.set_x(i, rest.x(i));
  if (!is_normal_word(inst, v)) throw PeelingFailure("peeled monomial is not a normal word");
  return NormalWord::make(inst, v);
}

/// Writes a constant g as a combination h of normal words with pi(h) = g, by
/// repeatedly cancelling the ALex-leading term of g with pi of the normal
/// word recovered from it.
inline PPoly rewrite_constant(const GeneratorTable& table, const APoly& g) {
  const ProblemInstance& inst = table.instance();
  if (g.dim() != inst.dim()) throw DimensionMismatch(inst.dim(), g.dim());
  if (!is_constant(inst, g)) throw NotConstant();
  PPoly h(inst.dim());
  APoly rest = g;
  while (!rest.is_zero()) {
    const auto lead = leading_term(rest, ALexOrder{});
    const NormalWord v = recover_word_from_lead(inst, lead.monomial);
    const auto image_lead = lead_of_image(inst, v);
    if (image_lead.monomial != lead.monomial) throw PeelingFailure("recovered word does not reproduce the lead");
    const Rational c = lead.coefficient / image_lead.coefficient;
    h.add_term(v.monomial(), c);
    rest -= pi_substitute(table, v.monomial()) * c;
  }
  return h;
}

inline PPoly rewrite_constant(const ProblemInstance& inst, const APoly& g) {
  return rewrite_constant(GeneratorTable(inst), g);
}

namespace detail {

/// Total degree of pi(v), computed on the expanded image of the u-part
/// (multiplying by x^a shifts every term by |a|).
class ImageDegree {
 public:
  explicit ImageDegree(const GeneratorTable& table) : table_(table) {}
  std::uint64_t operator()(const PMonomial& v) {
    PMonomial u_part = v;
    for (std::size_t i = 1; i <= v.dim(); ++i) u_part.set_x(i, 0);
    auto it = cache_.find(u_part);
    if (it == cache_.end()) it = cache_.emplace(u_part, pi_substitute(table_, u_part).total_degree()).first;
    return it->second + v.x_degree();
  }

 private:
  const GeneratorTable& table_;
  std::map<PMonomial, std::uint64_t> cache_;
};

}  // namespace detail

/// Every normal word v with deg pi(v) <= max_image_degree, ascending in `order`.
inline std::vector<NormalWord> enumerate_normal_words(const ProblemInstance& inst, std::size_t max_image_degree,
                                                      const DillOrder& order = DillOrder()) {
  const GeneratorTable table(inst);
  detail::ImageDegree image_degree(table);
  std::vector<PMonomial> words;
  // pi(v) is nonzero with y-degree deg_U(v) and x-degree >= deg_X(v), so its
  // degree is at least the internal degree of v.
  for (auto& v : monomials_up_to<PRing>(inst.dim(), max_image_degree))
    if (is_normal_word(inst, v) && image_degree(v) <= max_image_degree) words.push_back(std::move(v));
  std::sort(words.begin(), words.end(), [&](const auto& a, const auto& b) { return order.compare(a, b) < 0; });
  std::vector<NormalWord> out;
  out.reserve(words.size());
  for (auto& v : words) out.push_back(NormalWord::make(inst, v));
  return out;
}

struct KernelSlice {
  std::size_t max_degree = 0;
  std::size_t dimension = 0;
  std::vector<APoly> basis;  ///< each monic under ALex
};

/// Exact nullspace of Delta on the polynomials of degree <= max_degree.
/// Delta lowers the y-degree by exactly one, so the kernel splits along
/// y-degree and each block is solved separately.
inline KernelSlice kernel_dim_oracle(const ProblemInstance& inst, std::size_t max_degree,
                                     std::size_t monomial_budget = 5000) {
  const std::size_t d = inst.dim();
  std::vector<AMonomial> source = monomials_up_to<ARing>(d, max_degree);
  if (source.size() > monomial_budget)
    throw BudgetExceeded("kernel_dim_oracle: " + std::to_string(source.size()) + " monomials exceed the budget of " +
                         std::to_string(monomial_budget));
  std::map<std::uint64_t, std::vector<AMonomial>> by_y_degree;
  for (auto& m : source) by_y_degree[m.y_degree()].push_back(std::move(m));

  KernelSlice slice;
  slice.max_degree = max_degree;
  for (const auto& [t, cols] : by_y_degree) {
    std::vector<APoly> images;
    std::map<AMonomial, std::size_t> row_index;
    for (const auto& m : cols) {
      images.push_back(apply_delta(inst, APoly(m)));
      for (const auto& [rm, rc] : images.back()) row_index.try_emplace(rm, row_index.size());
    }
    RationalMatrix mat(row_index.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [rm, rc] : images[c]) mat(row_index.at(rm), c) = rc;
    for (const auto& vec : nullspace(mat)) {
      APoly g(d);
      for (std::size_t c = 0; c < cols.size(); ++c) g.add_term(cols[c], vec[c]);
      g *= Rational(1) / leading_term(g, ALexOrder{}).coefficient;
      slice.basis.push_back(std::move(g));
    }
  }
  slice.dimension = slice.basis.size();
  return slice;
}

struct IndependenceVerdict {
  std::size_t word_count = 0;
  std::size_t rank = 0;
  bool leads_distinct = false;
  [[nodiscard]] bool ok() const { return leads_distinct && rank == word_count; }
};

/// Exact rank of { pi(v) : v normal, deg pi(v) <= max_image_degree } against
/// the number of such words, plus pairwise distinctness of their leads.
inline IndependenceVerdict independence_check(const ProblemInstance& inst, std::size_t max_image_degree,
                                              std::size_t word_budget = 5000) {
  const auto words = enumerate_normal_words(inst, max_image_degree);
  if (words.size() > word_budget)
    throw BudgetExceeded("independence_check: " + std::to_string(words.size()) + " words exceed the budget");
  const GeneratorTable table(inst);
  IndependenceVerdict verdict;
  verdict.word_count = words.size();

  std::set<AMonomial> leads;
  for (const auto& v : words) leads.insert(lead_of_image(inst, v).monomial);
  verdict.leads_distinct = leads.size() == words.size();

  // pi(v) is homogeneous of y-degree deg_U(v); blocks have disjoint supports.
  std::map<std::uint64_t, std::vector<APoly>> blocks;
  for (const auto& v : words) blocks[v.monomial().u_degree()].push_back(pi_substitute(table, v.monomial()));
  for (const auto& [q, images] : blocks) {
    std::map<AMonomial, std::size_t> row_index;
    for (const auto& img : images)
      for (const auto& [m, c] : img) row_index.try_emplace(m, row_index.size());
    RationalMatrix mat(row_index.size(), images.size());
    for (std::size_t c = 0; c < images.size(); ++c)
      for (const auto& [m, coef] : images[c]) mat(row_index.at(m), c) = coef;
    verdict.rank += rank(mat);
  }
  return verdict;
}

}  // namespace constalg
