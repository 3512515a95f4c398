#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "constalg/derivation.hpp"

namespace constalg {

/// The generators u_{jk} = f_j(x_j) y_k - f_k(x_k) y_j as elements of ring A.
class GeneratorTable {
 public:
  explicit GeneratorTable(const ProblemInstance& inst) : inst_(inst) {
    const std::size_t d = inst.dim();
    for (std::size_t j = 1; j <= d; ++j)
      for (std::size_t k = j + 1; k <= d; ++k)
        u_.push_back(inst.f_in_a(j) * APoly(a_y(d, k)) - inst.f_in_a(k) * APoly(a_y(d, j)));
  }

  [[nodiscard]] const ProblemInstance& instance() const { return inst_; }
  [[nodiscard]] std::size_t dim() const { return inst_.dim(); }
  [[nodiscard]] std::size_t size() const { return u_.size(); }
  [[nodiscard]] const APoly& u(std::size_t j, std::size_t k) const { return u_[pair_rank(dim(), j, k)]; }

 private:
  ProblemInstance inst_;
  std::vector<APoly> u_;
};

inline GeneratorTable build_generators(const ProblemInstance& inst) { return GeneratorTable(inst); }

/// Image of a single P-monomial: x_i -> x_i, u_{jk} -> f_j y_k - f_k y_j.
inline APoly pi_substitute(const GeneratorTable& table, const PMonomial& v) {
  const std::size_t d = table.dim();
  if (v.dim() != d) throw DimensionMismatch(d, v.dim());
  AMonomial xs(d);
  for (std::size_t i = 1; i <= d; ++i) xs.set_x(i, v.x(i));
  APoly image(xs);
  for (const auto& f : v.u_factors()) image = image * power(table.u(f.j, f.k), f.exp);
  return image;
}

/// The ring homomorphism pi: K[X_d, U_d] -> K[X_d, Y_d].
inline APoly pi_substitute(const GeneratorTable& table, const PPoly& p) {
  const std::size_t d = table.dim();
  if (p.dim() != d) throw DimensionMismatch(d, p.dim());
  APoly out(d);
  std::map<PMonomial, APoly> u_part_cache;
  for (const auto& [m, c] : p) {
    PMonomial u_only = m;
    AMonomial xs(d);
    for (std::size_t i = 1; i <= d; ++i) {
      xs.set_x(i, m.x(i));
      u_only.set_x(i, 0);
    }
    auto it = u_part_cache.find(u_only);
    if (it == u_part_cache.end()) it = u_part_cache.emplace(u_only, pi_substitute(table, u_only)).first;
    out += it->second.times_term(xs, c);
  }
  return out;
}

enum class RelationKind { R, S };

/// One defining relation r(i,j,k,l) or s(i,j,k), fully expanded over P.
struct Relation {
  RelationKind kind;
  std::vector<std::size_t> indices;
  PPoly poly;

  [[nodiscard]] std::string label() const {
    std::string s = kind == RelationKind::R ? "R(" : "S(";
    for (std::size_t n = 0; n < indices.size(); ++n) s += (n ? "," : "") + std::to_string(indices[n]);
    return s + ")";
  }
};

/// r(i,j,k,l) = u_ij u_kl - u_ik u_jl + u_il u_jk.
inline PPoly relation_r(std::size_t d, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  PPoly r(d);
  r.add_term(p_u(d, i, j) * p_u(d, k, l), 1);
  r.add_term(p_u(d, i, k) * p_u(d, j, l), -1);
  r.add_term(p_u(d, i, l) * p_u(d, j, k), 1);
  return r;
}

/// s(i,j,k) = f_i(x_i) u_jk - f_j(x_j) u_ik + f_k(x_k) u_ij, with the full f's.
inline PPoly relation_s(const ProblemInstance& inst, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t d = inst.dim();
  return inst.f_in_p(i) * PPoly(p_u(d, j, k)) - inst.f_in_p(j) * PPoly(p_u(d, i, k)) +
         inst.f_in_p(k) * PPoly(p_u(d, i, j));
}

struct RelationSet {
  std::vector<Relation> r;  ///< C(d,4) elements, lexicographic in (i,j,k,l)
  std::vector<Relation> s;  ///< C(d,3) elements, lexicographic in (i,j,k)

  /// R followed by S.
  [[nodiscard]] std::vector<Relation> all() const {
    std::vector<Relation> out = r;
    out.insert(out.end(), s.begin(), s.end());
    return out;
  }
  [[nodiscard]] std::vector<PPoly> polys() const {
    std::vector<PPoly> out;
    for (const auto& rel : all()) out.push_back(rel.poly);
    return out;
  }
};

inline RelationSet build_relations(const ProblemInstance& inst) {
  const std::size_t d = inst.dim();
  RelationSet set;
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i + 1; j <= d; ++j)
      for (std::size_t k = j + 1; k <= d; ++k) {
        set.s.push_back({RelationKind::S, {i, j, k}, relation_s(inst, i, j, k)});
        for (std::size_t l = k + 1; l <= d; ++l)
          set.r.push_back({RelationKind::R, {i, j, k, l}, relation_r(d, i, j, k, l)});
      }
  return set;
}

}  // namespace constalg
