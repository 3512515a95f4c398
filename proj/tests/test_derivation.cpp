#include <gtest/gtest.h>

#include "constalg/constalg.hpp"
#include "support/random.hpp"

using namespace constalg;
using constalg::sample::Rng;

namespace {

/// sum_n q_n f^n, computed independently of the division routine.
APoly reassemble(const std::vector<APoly>& qs, const APoly& f) {
  APoly acc(f.dim());
  APoly fn = APoly::constant(f.dim(), 1);
  for (const auto& q : qs) {
    acc += q * fn;
    fn = fn * f;
  }
  return acc;
}

std::uint64_t degree_in(const APoly& p) { return p.is_zero() ? 0 : p.total_degree(); }

}  // namespace

TEST(Instance, RejectsDegenerateF) {
  EXPECT_THROW(ProblemInstance({{0, 1}, {5}}), DegenerateInstance);
  EXPECT_THROW(ProblemInstance({{0, 1}, {0, 0}}), DegenerateInstance);
  EXPECT_THROW(ProblemInstance({{0, 1}, {}}), DegenerateInstance);
  EXPECT_THROW(ProblemInstance({}), DegenerateInstance);
  EXPECT_NO_THROW(ProblemInstance({{0, 1}, {3, 0, 2, 0, 0}}));
}

TEST(Instance, DegreesAndLeadingCoefficients) {
  ProblemInstance inst({{0, 1}, {1, 0, 1}, {0, 0, 0, 2, 0}});
  EXPECT_EQ(inst.degrees(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(inst.lc(3), Rational(2));
  EXPECT_EQ(inst.max_degree(), 3U);
  EXPECT_EQ(format_poly(inst.f_in_a(2)), "x2^2 + 1");
}

TEST(ApplyDelta, Examples) {
  ProblemInstance inst({{0, 0, 1}, {0, 1}});
  EXPECT_EQ(apply_delta(inst, parse_a_poly("y1", 2)), parse_a_poly("x1^2", 2));
  EXPECT_TRUE(apply_delta(inst, parse_a_poly("x1^3", 2)).is_zero());

  ProblemInstance inst2({{0, 1}, {0, 0, 1}});
  EXPECT_TRUE(apply_delta(inst2, parse_a_poly("x1*y2 - x2^2*y1", 2)).is_zero());
  EXPECT_EQ(apply_delta(inst2, parse_a_poly("y2^3", 2)), parse_a_poly("3*x2^2*y2^2", 2));
  EXPECT_THROW(apply_delta(inst2, parse_a_poly("y1", 3)), DimensionMismatch);
}

TEST(IsConstant, Examples) {
  ProblemInstance inst = ProblemInstance::monomial({1, 2, 1, 3});
  EXPECT_TRUE(is_constant(inst, parse_a_poly("x1^4*x3 - 7*x2 + 1", 4)));
  EXPECT_FALSE(is_constant(inst, parse_a_poly("y1", 4)));
  const GeneratorTable table(inst);
  EXPECT_TRUE(is_constant(inst, pi_substitute(table, parse_p_poly("u1_2*u3_4", 4))));
}

TEST(ApplyDelta, LeibnizAndLinearity) {
  Rng rng(21);
  for (int n = 0; n < 1000; ++n) {
    const auto d = static_cast<std::size_t>(sample::uniform(rng, 1, 4));
    const auto inst = sample::random_instance(rng, d, 3);
    const auto g = sample::random_poly<ARing>(rng, d, 4, 4);
    const auto h = sample::random_poly<ARing>(rng, d, 4, 4);
    ASSERT_EQ(apply_delta(inst, g * h), apply_delta(inst, g) * h + g * apply_delta(inst, h));
    const Rational a = sample::small_rational(rng), b = sample::small_rational(rng);
    ASSERT_EQ(apply_delta(inst, g * a + h * b), apply_delta(inst, g) * a + apply_delta(inst, h) * b);
  }
}

TEST(FAdic, Examples) {
  // f = x^2 + 1, g = x^3: x^3 = -x + x (x^2 + 1).
  ProblemInstance inst({{1, 0, 1}});
  const auto qs = f_adic_expand(inst, 1, parse_a_poly("x1^3", 1));
  ASSERT_EQ(qs.size(), 2U);
  EXPECT_EQ(qs[0], parse_a_poly("-x1", 1));
  EXPECT_EQ(qs[1], parse_a_poly("x1", 1));
  EXPECT_EQ(reassemble(qs, inst.f_in_a(1)), parse_a_poly("x1^3", 1));

  const auto c = f_adic_expand(inst, 1, parse_a_poly("7/2", 1));
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0], parse_a_poly("7/2", 1));

  const auto self = f_adic_expand(inst, 1, inst.f_in_a(1));
  ASSERT_EQ(self.size(), 2U);
  EXPECT_TRUE(self[0].is_zero());
  EXPECT_EQ(self[1], APoly::constant(1, 1));
}

TEST(FAdic, RejectsOtherVariables) {
  ProblemInstance inst = ProblemInstance::monomial({2, 2});
  EXPECT_THROW(f_adic_expand(inst, 1, parse_a_poly("x1*x2", 2)), Error);
  EXPECT_THROW(f_adic_expand(inst, 2, parse_a_poly("y2", 2)), Error);
  EXPECT_THROW(f_adic_expand(inst, 3, parse_a_poly("x1", 2)), Error);
}

TEST(FAdic, RoundTripProperty) {
  Rng rng(5);
  for (int n = 0; n < 300; ++n) {
    const auto inst = sample::random_instance(rng, 2, 5);
    const std::size_t i = static_cast<std::size_t>(sample::uniform(rng, 1, 2));
    const APoly g = sample::random_univariate(rng, 2, i, 12);
    const auto qs = f_adic_expand(inst, i, g);
    ASSERT_EQ(reassemble(qs, inst.f_in_a(i)), g);
    for (const auto& q : qs) ASSERT_LT(degree_in(q), inst.degree(i)) << format_poly(q);
  }
}
