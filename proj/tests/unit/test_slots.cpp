#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "minkpot/errors.hpp"
#include "minkpot/slots.hpp"

using namespace minkpot;

namespace {

TEST(Polynomial, EvaluatesMonomials) {
  // 2 + 3 a^2 b - c
  const Polynomial p{3, {{{0, 0, 0}, 2.0}, {{2, 1, 0}, 3.0}, {{0, 0, 1}, -1.0}}};
  const std::array<double, 3> x = {2.0, -1.0, 5.0};
  EXPECT_DOUBLE_EQ(p.evaluate(x), 2.0 - 12.0 - 5.0);
  EXPECT_EQ(p.degree(), 3);
}

TEST(Polynomial, DerivativeAndAntiderivative) {
  const Polynomial p{1, {{{0, 0, 0}, 1.0}, {{3, 0, 0}, 2.0}}}; // 1 + 2t^3
  const Polynomial d = p.derivative(0);                      // 6t^2
  const Polynomial i = p.antiderivative();                   // t + t^4/2
  for (double t : {-1.5, 0.0, 0.7, 2.0}) {
    const std::array<double, 1> a = {t};
    EXPECT_NEAR(d.evaluate(a), 6 * t * t, 1e-14);
    EXPECT_NEAR(i.evaluate(a), t + 0.5 * t * t * t * t, 1e-14);
    EXPECT_NEAR(i.derivative(0).evaluate(a), p.evaluate(a), 1e-14);
  }
}

TEST(Polynomial, ArithmeticMatchesPointwise) {
  std::mt19937_64 rng(3);
  const Polynomial a = random_polynomial(2, 3, rng), b = random_polynomial(2, 3, rng);
  const Polynomial s = a + b, m = a * b, k = 2.5 * a;
  for (double u : {-1.0, 0.3}) {
    for (double v : {-0.4, 1.2}) {
      const std::array<double, 2> x = {u, v};
      EXPECT_NEAR(s.evaluate(x), a.evaluate(x) + b.evaluate(x), 1e-13);
      EXPECT_NEAR(m.evaluate(x), a.evaluate(x) * b.evaluate(x), 1e-13);
      EXPECT_NEAR(k.evaluate(x), 2.5 * a.evaluate(x), 1e-13);
    }
  }
}

TEST(Polynomial, JetEvaluationCarriesDerivatives) {
  std::mt19937_64 rng(4);
  const Polynomial p = random_polynomial(2, 3, rng);
  const std::array<Jet2, 2> args = {Jet2::variable(0.4, 0), Jet2::variable(-0.9, 1)};
  const Jet2 j = p(args);
  const std::array<double, 2> x = {0.4, -0.9};
  EXPECT_NEAR(j.value(), p.evaluate(x), 1e-14);
  EXPECT_NEAR(j.grad(0), p.derivative(0).evaluate(x), 1e-13);
  EXPECT_NEAR(j.grad(1), p.derivative(1).evaluate(x), 1e-13);
  EXPECT_NEAR(j.hess(0, 1), p.derivative(0).derivative(1).evaluate(x), 1e-13);
}

TEST(RandomPolynomial, DegreeBoundAndCoefficientRange) {
  std::mt19937_64 rng(5);
  for (int arity = 1; arity <= 3; ++arity) {
    const Polynomial p = random_polynomial(arity, 3, rng);
    EXPECT_LE(p.degree(), 3);
    for (const auto& t : p.terms) {
      EXPECT_LE(std::fabs(t.coef), 1.0);
      for (int k = arity; k < 3; ++k) EXPECT_EQ(t.exps[k], 0);
    }
  }
}

TEST(FunctionSlot, ArityIsEnforced) {
  const FunctionSlot s = polynomial_slot("f", Polynomial{2, {{{1, 1, 0}, 1.0}}});
  EXPECT_EQ(s.arity(), 2);
  EXPECT_THROW(s(Jet2(1.0)), ArityMismatch);
  EXPECT_DOUBLE_EQ(s(Jet2(2.0), Jet2(3.0)).value(), 6.0);
}

TEST(FunctionSlot, ElementarySlotsAreSmooth) {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 10; ++n) {
    const FunctionSlot s = random_elementary_slot("g", 1, rng);
    const Jet2 j = s(Jet2::variable(0.3, 0));
    const double h = 1e-6;
    const double fd = (s(Jet2(0.3 + h)).value() - s(Jet2(0.3 - h)).value()) / (2 * h);
    EXPECT_NEAR(j.grad(0), fd, 1e-7 * (1 + std::fabs(fd)));
  }
}

TEST(FunctionSlot, SameSeedSameSlot) {
  std::mt19937_64 a(9), b(9);
  const FunctionSlot s = random_slot("h", 2, SlotFamily::Polynomial, a);
  const FunctionSlot t = random_slot("h", 2, SlotFamily::Polynomial, b);
  EXPECT_EQ(s(Jet2(0.2), Jet2(0.7)).value(), t(Jet2(0.2), Jet2(0.7)).value());
}

} // namespace
