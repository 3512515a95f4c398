// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "constalg/constalg.hpp"
#include "support/random.hpp"

using namespace constalg;
using constalg::sample::Rng;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<ProblemInstance> sweep_instances() {
  Rng rng(2024);
  std::vector<ProblemInstance> out;
  for (std::size_t d = 4; d <= 6; ++d)
    for (int n = 0; n < 5; ++n) out.push_back(sample::random_instance(rng, d, 4, 5));
  return out;
}

Outcome relation_vanishing() {
  const auto t0 = Clock::now();
  std::size_t checked = 0, failures = 0;
  for (const auto& inst : sweep_instances()) {
    const auto table = build_generators(inst);
    for (const auto& rel : build_relations(inst).all()) {
      ++checked;
      failures += pi_substitute(table, rel.poly).is_zero() ? 0 : 1;
    }
  }
  const double t = seconds_since(t0);
  std::ostringstream s;
  s << checked << " relations, " << failures << " nonzero images, " << t << " s (limit 10 s)";
  return {failures == 0 && t < 10.0, s.str()};
}

Outcome lead_conformance() {
  std::size_t checked = 0, violations = 0;
  for (const auto& inst : sweep_instances()) {
    const auto report = verify_lead_conformance(inst, build_relations(inst), DillOrder(OrderVariant::corrected));
    checked += report.checks.size();
    violations += report.violations().size();
  }
  std::ostringstream s;
  s << checked << " leads, " << violations << " violations";
  return {violations == 0, s.str()};
}

Outcome groebner_verification() {
  const auto t0 = Clock::now();
  const ProblemInstance classical = ProblemInstance::monomial({1, 1, 1, 1});
  Rng rng(5);
  const ProblemInstance mixed = sample::random_instance(rng, {2, 3, 1, 2, 4}, 5);
  std::ostringstream s;
  bool ok = true;
  for (const auto* inst : {&classical, &mixed}) {
    const auto v = verify_groebner(*inst, OrderVariant::corrected);
    std::size_t zero = 0;
    for (const auto& p : v.pairs) zero += p.reduces_to_zero ? 1 : 0;
    s << "d=" << inst->dim() << ": " << zero << "/" << v.pairs.size() << " pairs to zero, reduced "
      << (v.reducedness.ok() ? "yes" : "no") << "; ";
    ok = ok && v.verified;
  }
  const double t = seconds_since(t0);
  s << t << " s (limit 120 s)";
  return {ok && t < 120.0, s.str()};
}

Outcome independent_completion() {
  const auto t0 = Clock::now();
  Rng rng(6);
  const DillOrder order;
  std::size_t runs = 0, grew = 0, pairs = 0;
  for (std::size_t mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < 4; ++i) m.push_back(((mask >> i) & 1U) ? 2 : 1);
    const auto inst = sample::random_instance(rng, m, 5);
    const auto input = build_relations(inst).polys();
    const auto result = buchberger_complete(input, order);
    ++runs;
    pairs += result.pairs_considered;
    std::set<PMonomial> before, after;
    for (const auto& p : input) before.insert(leading_term(p, order).monomial);
    for (const auto& p : interreduce(result.basis, order)) after.insert(leading_term(p, order).monomial);
    grew += (!result.added().empty() || before != after) ? 1 : 0;
  }
  const double t = seconds_since(t0);
  std::ostringstream s;
  s << runs << " degree patterns, " << pairs << " pairs, " << grew << " gained leads, " << t << " s (limit 120 s)";
  return {grew == 0 && t < 120.0, s.str()};
}

Outcome basis_independence() {
  Rng rng(7);
  const auto inst = sample::random_instance(rng, {1, 2, 2}, 5);
  const auto v = independence_check(inst, 5);
  std::ostringstream s;
  s << v.word_count << " normal words, rank " << v.rank << ", leads distinct " << (v.leads_distinct ? "yes" : "no");
  return {v.ok(), s.str()};
}

Outcome constructive_generation() {
  const auto t0 = Clock::now();
  Rng rng(8);
  const auto inst = sample::random_instance(rng, {1, 2, 2}, 5);
  const auto table = build_generators(inst);
  const auto slice = kernel_dim_oracle(inst, 5);
  std::size_t failures = 0;
  for (const auto& g : slice.basis) {
    const auto h = rewrite_constant(table, g);
    bool ok = pi_substitute(table, h) == g;
    for (const auto& [m, c] : h) ok = ok && is_normal_word(inst, m);
    failures += ok ? 0 : 1;
  }
  const double t = seconds_since(t0);
  std::ostringstream s;
  s << slice.dimension << " kernel basis elements, " << failures << " failures, " << t << " s (limit 120 s)";
  return {failures == 0 && t < 120.0, s.str()};
}

Outcome random_round_trip() {
  Rng rng(9);
  std::size_t failures = 0;
  for (int n = 0; n < 100; ++n) {
    const auto d = static_cast<std::size_t>(sample::uniform(rng, 2, 5));
    const auto inst = sample::random_instance(rng, d, 4, 5);
    const auto table = build_generators(inst);
    const auto g = pi_substitute(table, sample::random_poly<PRing>(rng, d, 5, 3));
    failures += pi_substitute(table, rewrite_constant(table, g)) == g ? 0 : 1;
  }
  std::ostringstream s;
  s << "100 polynomials, " << failures << " failures";
  return {failures == 0, s.str()};
}

Outcome order_admissibility() {
  Rng rng(10);
  const DillOrder order(OrderVariant::corrected);
  std::size_t failures = 0;
  for (int n = 0; n < 10000; ++n) {
    const auto d = static_cast<std::size_t>(sample::uniform(rng, 2, 6));
    const auto a = sample::random_monomial<PRing>(rng, d, 4);
    const auto b = sample::random_monomial<PRing>(rng, d, 4);
    const auto c = sample::random_monomial<PRing>(rng, d, 4);
    const auto ab = order.compare(a, b), bc = order.compare(b, c), ac = order.compare(a, c);
    bool ok = (ab == 0) == (a == b) && order.compare(b, a) == (0 <=> ab);
    if (ab < 0 && bc < 0) ok = ok && ac < 0;
    if (ab > 0 && bc > 0) ok = ok && ac > 0;
    ok = ok && order.compare(a * c, b * c) == ab;
    ok = ok && order.compare(PMonomial(d), a) <= 0;
    failures += ok ? 0 : 1;
  }
  std::ostringstream s;
  s << "10000 triples, " << failures << " failures";
  return {failures == 0, s.str()};
}

Outcome f_adic() {
  Rng rng(11);
  std::size_t failures = 0;
  for (int n = 0; n < 200; ++n) {
    const auto fdeg = static_cast<std::size_t>(sample::uniform(rng, 1, 5));
    const auto inst = sample::random_instance(rng, std::vector<std::size_t>{fdeg}, 5);
    const auto g = sample::random_univariate(rng, 1, 1, 12);
    const auto q = f_adic_expand(inst, 1, g);
    APoly sum(1), fpow = APoly::constant(1, 1);
    bool ok = true;
    for (const auto& qn : q) {
      ok = ok && (qn.is_zero() || qn.total_degree() < fdeg);
      sum = sum + qn * fpow;
      fpow = fpow * inst.f_in_a(1);
    }
    failures += (ok && sum == g) ? 0 : 1;
  }
  std::ostringstream s;
  s << "200 expansions, " << failures << " failures";
  return {failures == 0, s.str()};
}

Outcome degenerate_rejection() {
  const auto dir = std::filesystem::temp_directory_path();
  const std::vector<std::string> bodies = {
      R"({"d": 2, "f": [[0, 1], [5]]})",
      R"({"d": 2, "f": [[0, 1], [0]]})",
      R"({"d": 3, "f": [[0, 0, 0], [1, 1], [0, 1]]})",
      R"({"d": 1, "f": [[]]})",
  };
  std::size_t rejected = 0;
  for (std::size_t n = 0; n < bodies.size(); ++n) {
    const auto path = dir / ("constalg_acceptance_degenerate_" + std::to_string(n) + ".json");
    std::ofstream(path) << bodies[n];
    std::string p = path.string();
    for (const char* sub : {"relations", "verify-gb"}) {
      std::vector<std::string> args = {"constalg", sub, "--instance", p};
      std::vector<char*> argv;
      for (auto& a : args) argv.push_back(a.data());
      std::ostringstream out, err;
      rejected += cli::run(static_cast<int>(argv.size()), argv.data(), out, err) == 2 ? 1 : 0;
    }
    std::filesystem::remove(path);
  }
  std::ostringstream s;
  s << rejected << "/" << 2 * bodies.size() << " runs exited with status 2";
  return {rejected == 2 * bodies.size(), s.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"relation vanishing", relation_vanishing},
      {"lead conformance", lead_conformance},
      {"groebner verification", groebner_verification},
      {"independent completion", independent_completion},
      {"basis independence", basis_independence},
      {"constructive generation", constructive_generation},
      {"random round trip", random_round_trip},
      {"order admissibility", order_admissibility},
      {"f-adic expansion", f_adic},
      {"degenerate input", degenerate_rejection},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2zu %-24s %s\n", o.pass ? "PASS" : "FAIL", n + 1, criteria[n].first, o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
