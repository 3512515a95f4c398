#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "constalg/dill_order.hpp"
#include "constalg/groebner.hpp"
#include "constalg/presentation.hpp"

namespace constalg {

/// The leading monomial each relation must have: u_ik u_jl for r(i,j,k,l)
/// and x_j^{m_j} u_ik for s(i,j,k).
inline PMonomial expected_lead(const ProblemInstance& inst, const Relation& rel) {
  const std::size_t d = inst.dim();
  const auto& ix = rel.indices;
  if (rel.kind == RelationKind::R) return p_u(d, ix[0], ix[2]) * p_u(d, ix[1], ix[3]);
  return p_x(d, ix[1], static_cast<Exponent>(inst.degree(ix[1]))) * p_u(d, ix[0], ix[2]);
}

struct LeadCheck {
  std::string label;
  PMonomial expected;
  PMonomial actual;
  Rational coefficient;
  [[nodiscard]] bool ok() const { return expected == actual; }
};

struct LeadConformanceReport {
  std::vector<LeadCheck> checks;
  [[nodiscard]] std::vector<LeadCheck> violations() const {
    std::vector<LeadCheck> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const LeadCheck& c) { return !c.ok(); });
    return out;
  }
  [[nodiscard]] bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const LeadCheck& c) { return c.ok(); });
  }
};

inline LeadConformanceReport verify_lead_conformance(const ProblemInstance& inst, const RelationSet& relations,
                                                     const DillOrder& order) {
  LeadConformanceReport report;
  for (const auto& rel : relations.all()) {
    const auto lead = leading_term(rel.poly, order);
    report.checks.push_back({rel.label(), expected_lead(inst, rel), lead.monomial, lead.coefficient});
  }
  return report;
}

struct ReducednessReport {
  std::vector<std::string> violations;
  std::vector<PPoly> monic_basis;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// No leading monomial of one element divides any monomial of another, and
/// the monic normalization of every element has leading coefficient 1.
template <class Order>
ReducednessReport verify_reduced(const std::vector<Relation>& basis, const Order& order) {
  ReducednessReport report;
  std::vector<PMonomial> leads;
  for (const auto& rel : basis) {
    leads.push_back(leading_term(rel.poly, order).monomial);
    report.monic_basis.push_back(make_monic(rel.poly, order));
    if (!leading_term(report.monic_basis.back(), order).coefficient.is_one())
      report.violations.push_back(rel.label() + ": monic normalization failed");
  }
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      for (const auto& [m, c] : basis[b].poly)
        if (divides(leads[a], m)) {
          report.violations.push_back("lead of " + basis[a].label() + " divides a monomial of " + basis[b].label());
          break;
        }
    }
  return report;
}

struct PairOutcome {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string first_label;
  std::string second_label;
  bool coprime_leads = false;
  bool reduces_to_zero = false;
  std::size_t steps = 0;
  PPoly remainder;
};

struct GroebnerVerdict {
  OrderVariant variant = OrderVariant::corrected;
  std::vector<Relation> basis;
  LeadConformanceReport conformance;
  std::vector<PairOutcome> pairs;
  ReducednessReport reducedness;
  bool verified = false;

  [[nodiscard]] std::optional<PairOutcome> first_failing_pair() const {
    for (const auto& p : pairs)
      if (!p.reduces_to_zero) return p;
    return std::nullopt;
  }
};

/// Reduces the S-polynomial of every pair of R u S modulo R u S. Pairs whose
/// leading monomials are coprime are reduced as well and flagged. Work is
/// split over `jobs` threads; results are stored by pair index, so the
/// outcome does not depend on scheduling.
inline std::vector<PairOutcome> check_s_pairs(const std::vector<Relation>& basis, const DillOrder& order,
                                              unsigned jobs = 1) {
  std::vector<PPoly> polys;
  for (const auto& rel : basis) polys.push_back(rel.poly);
  std::vector<PairOutcome> outcomes;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      outcomes.push_back({a, b, basis[a].label(), basis[b].label(), false, false, 0, PPoly(polys[a].dim())});

  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t n = start; n < outcomes.size(); n += stride) {
      auto& o = outcomes[n];
      const auto& g = polys[o.first];
      const auto& h = polys[o.second];
      o.coprime_leads = coprime(leading_term(g, order).monomial, leading_term(h, order).monomial);
      auto red = reduce_counted(s_polynomial(g, h, order), std::span<const PPoly>(polys), order);
      o.steps = red.steps;
      o.reduces_to_zero = red.remainder.is_zero();
      o.remainder = std::move(red.remainder);
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work, t, jobs);
  }
  return outcomes;
}

/// Checks that R u S is a reduced Groebner basis under the given variant.
/// Leading-monomial conformance is a gate: if it fails, no pairs are checked
/// and the verdict is false.
inline GroebnerVerdict verify_groebner(const ProblemInstance& inst, OrderVariant variant, unsigned jobs = 1) {
  const DillOrder order(variant);
  const RelationSet relations = build_relations(inst);
  GroebnerVerdict v;
  v.variant = variant;
  v.basis = relations.all();
  v.conformance = verify_lead_conformance(inst, relations, order);
  if (!v.conformance.ok()) return v;
  v.pairs = check_s_pairs(v.basis, order, jobs);
  v.reducedness = verify_reduced(v.basis, order);
  v.verified = !v.first_failing_pair() && v.reducedness.ok();
  return v;
}

}  // namespace constalg
