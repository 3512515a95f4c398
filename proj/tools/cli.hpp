#pragma once

// Command-line driver. Exit codes: 0 success, 1 negative verdict (not a
// constant, verification failed), 2 usage, parse or instance errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "constalg/constalg.hpp"
#include "constalg/json_io.hpp"

namespace constalg::cli {

namespace detail {

struct Options {
  std::string instance;
  std::string poly;
  std::string variant = "corrected";
  std::string certificate;
  std::string out;
  std::size_t max_deg = 0;
  std::size_t budget = 5000;
  unsigned jobs = 1;
  bool count_only = false;
  bool basis = false;
};

/// A negative verdict reported after the human-readable output.
struct Verdict {
  int code;
  std::string message;
};

inline void write_json(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

inline std::optional<Verdict> cmd_relations(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o.instance);
  const auto rels = build_relations(inst);
  json list = json::array();
  for (const auto& rel : rels.all()) {
    out << rel.label() << ": " << format_poly(rel.poly) << '\n';
    list.push_back({{"relation", rel.label()}, {"poly", format_poly(rel.poly)}});
  }
  if (!o.out.empty()) write_json(o.out, {{"instance", instance_to_json(inst)}, {"relations", list}});
  return std::nullopt;
}

inline std::optional<Verdict> cmd_verify_gb(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o.instance);
  const auto variant = parse_variant(o.variant);
  const auto started = std::chrono::system_clock::now();
  const auto v = verify_groebner(inst, variant, o.jobs);
  const auto finished = std::chrono::system_clock::now();
  if (!o.certificate.empty()) write_json(o.certificate, certificate_json(inst, v, started, finished));

  const auto violations = v.conformance.violations();
  out << "variant: " << to_string(variant) << '\n';
  out << "relations: " << v.basis.size() << '\n';
  out << "lead conformance: " << v.conformance.checks.size() - violations.size() << "/" << v.conformance.checks.size()
      << '\n';
  if (!violations.empty()) {
    const auto& c = violations.front();
    return Verdict{1, "lead conformance failed: " + c.label + ": expected " + format_monomial(c.expected) + ", got " +
                          format_monomial(c.actual)};
  }
  std::size_t zero = 0, coprime_count = 0;
  for (const auto& p : v.pairs) {
    zero += p.reduces_to_zero ? 1 : 0;
    coprime_count += p.coprime_leads ? 1 : 0;
  }
  out << "s-pairs: " << v.pairs.size() << " checked, " << zero << " reduce to zero, " << coprime_count
      << " with coprime leads\n";
  out << "reduced: " << (v.reducedness.ok() ? "yes" : "no") << '\n';
  if (auto fail = v.first_failing_pair())
    return Verdict{1, "first failing pair: " + fail->first_label + ", " + fail->second_label +
                          " remainder: " + format_poly(fail->remainder)};
  if (!v.reducedness.ok()) return Verdict{1, "not reduced: " + v.reducedness.violations.front()};
  out << "verified: reduced Groebner basis\n";
  return std::nullopt;
}

inline std::optional<Verdict> cmd_normal_words(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o.instance);
  const auto words = enumerate_normal_words(inst, o.max_deg, DillOrder(parse_variant(o.variant)));
  if (o.count_only) {
    out << words.size() << '\n';
  } else {
    for (const auto& w : words) out << format_monomial(w.monomial()) << '\n';
  }
  if (!o.out.empty()) {
    json list = json::array();
    for (const auto& w : words) list.push_back(format_monomial(w.monomial()));
    write_json(o.out, {{"instance", instance_to_json(inst)}, {"max_image_degree", o.max_deg}, {"words", list}});
  }
  return std::nullopt;
}

inline std::optional<Verdict> cmd_check(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o.instance);
  const auto g = parse_a_poly(o.poly, inst.dim());
  if (is_constant(inst, g)) {
    out << "constant\n";
    return std::nullopt;
  }
  out << "not a constant\n";
  return Verdict{1, ""};
}

inline std::optional<Verdict> cmd_rewrite(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o.instance);
  const auto g = parse_a_poly(o.poly, inst.dim());
  out << format_poly(rewrite_constant(inst, g)) << '\n';
  return std::nullopt;
}

inline std::optional<Verdict> cmd_kernel_dim(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o.instance);
  const auto slice = kernel_dim_oracle(inst, o.max_deg, o.budget);
  out << "max degree: " << slice.max_degree << '\n';
  out << "dimension: " << slice.dimension << '\n';
  out << "normal words with image degree <= " << o.max_deg << ": " << enumerate_normal_words(inst, o.max_deg).size()
      << '\n';
  if (o.basis)
    for (const auto& g : slice.basis) out << format_poly(g) << '\n';
  if (!o.out.empty()) {
    json list = json::array();
    for (const auto& g : slice.basis) list.push_back(format_poly(g));
    write_json(o.out, {{"instance", instance_to_json(inst)},
                       {"max_degree", slice.max_degree},
                       {"dimension", slice.dimension},
                       {"basis", list}});
  }
  return std::nullopt;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Constants of the derivation sum_i f_i(x_i) d/dy_i: presentation, Groebner verification, normal words"};
  app.require_subcommand(1);

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance, "instance JSON file")->required();
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", o.variant, "DILL order variant")->check(CLI::IsMember({"corrected", "paper"}));
  };

  auto* relations = app.add_subcommand("relations", "print the defining relations R and S");
  add_instance(relations);
  relations->add_option("--out", o.out, "also write the relations as JSON");

  auto* verify = app.add_subcommand("verify-gb", "verify that R u S is a reduced Groebner basis");
  add_instance(verify);
  add_variant(verify);
  verify->add_option("--certificate", o.certificate, "write per-pair outcomes as JSON");
  verify->add_option("--jobs", o.jobs, "threads for S-pair reduction")->check(CLI::PositiveNumber);

  auto* words = app.add_subcommand("normal-words", "list normal words by image degree");
  add_instance(words);
  add_variant(words);
  words->add_option("--max-deg", o.max_deg, "maximal degree of pi(v)")->required();
  words->add_flag("--count-only", o.count_only, "print only the number of words");
  words->add_option("--out", o.out, "also write the words as JSON");

  auto* check = app.add_subcommand("check", "exit 0 if the polynomial is a constant, 1 otherwise");
  add_instance(check);
  check->add_option("--poly", o.poly, "polynomial in x_i, y_i")->required();

  auto* rewrite = app.add_subcommand("rewrite", "express a constant in normal words of x_i, u_jk");
  add_instance(rewrite);
  rewrite->add_option("--poly", o.poly, "polynomial in x_i, y_i")->required();

  auto* kernel = app.add_subcommand("kernel-dim", "dimension of the constants of degree <= N by exact linear algebra");
  add_instance(kernel);
  kernel->add_option("--max-deg", o.max_deg, "degree bound N")->required();
  kernel->add_flag("--basis", o.basis, "print the basis");
  kernel->add_option("--budget", o.budget, "maximal number of monomials");
  kernel->add_option("--out", o.out, "also write the basis as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    std::optional<detail::Verdict> verdict;
    if (*relations) verdict = detail::cmd_relations(o, out);
    if (*verify) verdict = detail::cmd_verify_gb(o, out);
    if (*words) verdict = detail::cmd_normal_words(o, out);
    if (*check) verdict = detail::cmd_check(o, out);
    if (*rewrite) verdict = detail::cmd_rewrite(o, out);
    if (*kernel) verdict = detail::cmd_kernel_dim(o, out);
    if (verdict) {
      if (!verdict->message.empty()) err << "error: " << verdict->message << '\n';
      return verdict->code;
    }
    return 0;
  } catch (const NotConstant& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateInstance& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace constalg::cli
