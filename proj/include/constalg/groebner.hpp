#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "constalg/polynomial.hpp"

namespace constalg {

template <class M>
struct ReductionResult {
  Polynomial<M> remainder;
  std::size_t steps = 0;
};

/// Full normal form of p modulo G. The order-maximal reducible monomial is
/// always reduced first, by the first element of G (list order) whose leading
/// monomial divides it, so the result and step count are deterministic.
template <class M, class Order>
  requires MonomialOrder<Order, M>
ReductionResult<M> reduce_counted(const Polynomial<M>& p, std::span<const Polynomial<M>> basis, const Order& order) {
  std::vector<Term<M>> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.dim() != p.dim()) throw DimensionMismatch(p.dim(), g.dim());
    leads.push_back(leading_term(g, order));
  }

  std::map<M, Rational, OrderLess<Order>> work(OrderLess<Order>{&order});
  for (const auto& [m, c] : p) work.emplace(m, c);

  ReductionResult<M> out{Polynomial<M>(p.dim()), 0};
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const M target = top->first;
    const Rational coef = top->second;
    std::optional<std::size_t> reducer;
    for (std::size_t r = 0; r < leads.size(); ++r)
      if (divides(leads[r].monomial, target)) {
        reducer = r;
        break;
      }
    if (!reducer) {
      out.remainder.add_term(target, coef);
      work.erase(top);
      continue;
    }
    const M shift = quotient(target, leads[*reducer].monomial);
    const Rational factor = coef / leads[*reducer].coefficient;
    for (const auto& [gm, gc] : basis[*reducer]) {
      auto [it, inserted] = work.try_emplace(gm * shift, -(factor * gc));
      if (!inserted) {
        it->second -= factor * gc;
        if (it->second.is_zero()) work.erase(it);
      }
    }
    ++out.steps;
  }
  return out;
}

template <class M, class Order>
  requires MonomialOrder<Order, M>
Polynomial<M> reduce(const Polynomial<M>& p, std::span<const Polynomial<M>> basis, const Order& order) {
  return reduce_counted(p, basis, order).remainder;
}

template <class M, class Order>
  requires MonomialOrder<Order, M>
Polynomial<M> reduce(const Polynomial<M>& p, const std::vector<Polynomial<M>>& basis, const Order& order) {
  return reduce_counted(p, std::span<const Polynomial<M>>(basis), order).remainder;
}

/// p divided by its leading coefficient.
template <class M, class Order>
  requires MonomialOrder<Order, M>
Polynomial<M> make_monic(const Polynomial<M>& p, const Order& order) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / leading_term(p, order).coefficient);
}

/// lcm/lead(g) * g / lc(g) - lcm/lead(h) * h / lc(h).
template <class M, class Order>
  requires MonomialOrder<Order, M>
Polynomial<M> s_polynomial(const Polynomial<M>& g, const Polynomial<M>& h, const Order& order) {
  if (g.is_zero() || h.is_zero()) throw ZeroPolynomial("s_polynomial");
  const Term<M> lg = leading_term(g, order);
  const Term<M> lh = leading_term(h, order);
  const M l = lcm(lg.monomial, lh.monomial);
  return g.times_term(quotient(l, lg.monomial), Rational(1) / lg.coefficient) -
         h.times_term(quotient(l, lh.monomial), Rational(1) / lh.coefficient);
}

template <class M>
struct CompletionResult {
  std::vector<Polynomial<M>> basis;  ///< input elements followed by added ones
  std::size_t input_size = 0;
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;

  [[nodiscard]] std::span<const Polynomial<M>> added() const {
    return std::span<const Polynomial<M>>(basis).subspan(input_size);
  }
};

/// Buchberger completion with the normal selection strategy: the pending pair
/// with the order-minimal lcm of leading monomials is processed next (ties by
/// pair index). Pairs with coprime leading monomials are skipped. Throws
/// BudgetExceeded once more than pair_budget pairs have been generated.
template <class M, class Order>
  requires MonomialOrder<Order, M>
CompletionResult<M> buchberger_complete(const std::vector<Polynomial<M>>& input, const Order& order,
                                        std::size_t pair_budget = 100000) {
  if (input.empty()) throw Error("buchberger_complete: empty input");
  CompletionResult<M> res;
  std::vector<M> leads;
  for (const auto& f : input) {
    if (f.is_zero()) continue;
    res.basis.push_back(f);
    leads.push_back(leading_term(f, order).monomial);
  }
  res.input_size = res.basis.size();

  struct Pair {
    std::size_t a, b;
    M lcm;
  };
  std::vector<Pair> pending;
  std::size_t generated = 0;
  auto add_pairs_for = [&](std::size_t b) {
    for (std::size_t a = 0; a < b; ++a) {
      if (++generated > pair_budget)
        throw BudgetExceeded("buchberger_complete: more than " + std::to_string(pair_budget) + " pairs");
      pending.push_back({a, b, lcm(leads[a], leads[b])});
    }
  };
  for (std::size_t b = 0; b < res.basis.size(); ++b) add_pairs_for(b);

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& x, const Pair& y) {
      auto c = order.compare(x.lcm, y.lcm);
      if (c != 0) return c < 0;
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    const Pair pair = *best;
    pending.erase(best);
    ++res.pairs_considered;
    if (coprime(leads[pair.a], leads[pair.b])) {
      ++res.pairs_skipped_coprime;
      continue;
    }
    Polynomial<M> r = reduce(s_polynomial(res.basis[pair.a], res.basis[pair.b], order), res.basis, order);
    if (r.is_zero()) continue;
    r = make_monic(r, order);
    leads.push_back(leading_term(r, order).monomial);
    res.basis.push_back(std::move(r));
    add_pairs_for(res.basis.size() - 1);
  }
  return res;
}

/// The reduced Groebner basis spanned by a Groebner basis G: drops elements
/// whose leading monomial is divisible by another's, fully reduces the rest
/// against each other and makes them monic. Sorted by descending lead.
template <class M, class Order>
  requires MonomialOrder<Order, M>
std::vector<Polynomial<M>> interreduce(const std::vector<Polynomial<M>>& basis, const Order& order) {
  std::vector<Polynomial<M>> kept;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].is_zero()) continue;
    const M la = leading_term(basis[a], order).monomial;
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b || basis[b].is_zero()) continue;
      const M lb = leading_term(basis[b], order).monomial;
      // equal leads: keep the first occurrence only
      if (divides(lb, la) && (lb != la || b < a)) redundant = true;
    }
    if (!redundant) kept.push_back(basis[a]);
  }
  std::vector<Polynomial<M>> out;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    std::vector<Polynomial<M>> others;
    for (std::size_t b = 0; b < kept.size(); ++b)
      if (b != a) others.push_back(kept[b]);
    out.push_back(make_monic(reduce(kept[a], others, order), order));
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return order.compare(leading_term(x, order).monomial, leading_term(y, order).monomial) > 0;
  });
  return out;
}

}  // namespace constalg
