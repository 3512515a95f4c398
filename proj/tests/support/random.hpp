#pragma once

// Seeded generators for property tests.

#include <random>
#include <vector>

#include "constalg/constalg.hpp"

namespace constalg::sample {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, long bound = 5) {
  long n = uniform(rng, -bound, bound);
  long d = uniform(rng, 1, 3);
  return Rational(mpz_class(n), mpz_class(d));
}

inline Rational nonzero_integer(Rng& rng, long bound = 5) {
  long v = 0;
  while (v == 0) v = uniform(rng, -bound, bound);
  return Rational(v);
}

/// Dense f_i with integer coefficients in [-bound, bound] and given degrees.
inline ProblemInstance random_instance(Rng& rng, const std::vector<std::size_t>& degrees, long bound = 5) {
  std::vector<Coefficients> f;
  for (std::size_t m : degrees) {
    Coefficients c;
    for (std::size_t n = 0; n < m; ++n) c.emplace_back(uniform(rng, -bound, bound));
    c.push_back(nonzero_integer(rng, bound));
    f.push_back(std::move(c));
  }
  return ProblemInstance(std::move(f));
}

inline ProblemInstance random_instance(Rng& rng, std::size_t d, std::size_t max_m, long bound = 5) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < d; ++i) m.push_back(static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_m))));
  return random_instance(rng, m, bound);
}

template <class Ring>
Monomial<Ring> random_monomial(Rng& rng, std::size_t d, std::size_t max_degree) {
  Monomial<Ring> m(d);
  std::vector<Exponent> e(Ring::width(d), 0);
  const auto deg = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_degree)));
  for (std::size_t n = 0; n < deg; ++n) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(e.size()) - 1))];
  return Monomial<Ring>(d, e);
}

template <class Ring>
Polynomial<Monomial<Ring>> random_poly(Rng& rng, std::size_t d, std::size_t max_terms, std::size_t max_degree) {
  Polynomial<Monomial<Ring>> p(d);
  const auto n = uniform(rng, 0, static_cast<long>(max_terms));
  for (long t = 0; t < n; ++t) p.add_term(random_monomial<Ring>(rng, d, max_degree), small_rational(rng));
  return p;
}

/// Random univariate polynomial in x_i with exact degree <= max_degree.
inline APoly random_univariate(Rng& rng, std::size_t d, std::size_t i, std::size_t max_degree) {
  Coefficients c;
  const auto deg = uniform(rng, 0, static_cast<long>(max_degree));
  for (long n = 0; n <= deg; ++n) c.push_back(small_rational(rng));
  return univariate<ARing>(c, d, i);
}

}  // namespace constalg::sample
