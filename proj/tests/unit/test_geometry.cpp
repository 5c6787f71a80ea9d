#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "minkpot/geometry.hpp"

using namespace minkpot;
using namespace minkpot::gen;

namespace {

constexpr Mat4 kEta = {{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}}};

PoincareGenerator random_generator(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Coefficients c;
  for (double& v : c) v = u(rng);
  return PoincareGenerator::from_coefficients(c);
}

SpacetimePoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

// Quadratic-plus-trig potential with every second derivative nonzero.
CovectorField sample_potential() {
  return CovectorField([](const JetPoint& x) {
    return std::array<Jet2, 4>{x[1] * x[2] + sin(x[3]), x[0] * x[0] - x[3] * x[2], exp(0.3 * x[0]) * x[1],
                               cos(x[1]) + x[0] * x[2] * x[3]};
  });
}

Mat4 mat_exp_taylor(const Mat4& m, double t) {
  // I + tM + t^2 M^2/2 + t^3 M^3/6, enough for |t| = 1e-4.
  Mat4 r{}, p{};
  for (int i = 0; i < 4; ++i) r[i][i] = p[i][i] = 1.0;
  double f = 1.0;
  for (int n = 1; n <= 3; ++n) {
    Mat4 q{};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) q[i][k] += p[i][j] * m[j][k];
    p = q;
    f *= t / n;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) r[i][k] += f * p[i][k];
  }
  return r;
}

// (phi_t^* A)_i(x) = A_j(phi_t x) d_i phi_t^j, phi_t the flow of a + Mx to third order.
Covector pulled_back(const CovectorField& a, const PoincareGenerator& g, const SpacetimePoint& x, double t) {
  const Mat4 m = generator_jacobian(g);
  const Mat4 e = mat_exp_taylor(m, t);
  const Vec4 xi = generator_value(g, x);
  SpacetimePoint y = x;
  Vec4 mxi{}, mmxi{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mxi[i] += m[i][j] * xi[j];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mmxi[i] += m[i][j] * mxi[j];
  for (int i = 0; i < 4; ++i) y[i] += t * xi[i] + 0.5 * t * t * mxi[i] + t * t * t / 6.0 * mmxi[i];
  const Covector ay = a.value_unchecked(y);
  Covector out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += ay[j] * e[j][i];
  return out;
}

TEST(Generators, ValueOfRotation) {
  const Vec4 v = generator_value(e12, {1.0, 2.0, 3.0, 4.0});
  EXPECT_EQ(v, (Vec4{-2.0, 1.0, 0.0, 0.0}));
  const Vec4 b = generator_value(e14, {1.0, 2.0, 3.0, 4.0});
  EXPECT_EQ(b, (Vec4{4.0, 0.0, 0.0, 1.0}));
  const Vec4 t = generator_value(e3 + 2.0 * e2, {5.0, 5.0, 5.0, 5.0});
  EXPECT_EQ(t, (Vec4{0.0, 2.0, 1.0, 0.0}));
}

TEST(Generators, JacobianIsALorentzAlgebraElement) {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 50; ++n) {
    const Mat4 m = generator_jacobian(random_generator(rng));
    // eta M is antisymmetric
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) EXPECT_NEAR(kEta[i][i] * m[i][j], -kEta[j][j] * m[j][i], 1e-15);
  }
}

TEST(Generators, KillingEquationForEveryBasisElement) {
  // d_i xi_j + d_j xi_i = 0 with lowered index xi_j = eta_jj xi^j.
  for (int k = 0; k < 10; ++k) {
    const Mat4 m = generator_jacobian(PoincareGenerator::basis(k));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) EXPECT_EQ(kEta[j][j] * m[j][i] + kEta[i][i] * m[i][j], 0.0);
  }
}

TEST(Generators, Labels) {
  EXPECT_EQ(label(e12 - e14), "e12-e14");
  EXPECT_EQ(label(e23 + e34), "e23+e34");
  EXPECT_EQ(label(e13 + 2.0 * e24), "e13+2e24");
  EXPECT_EQ(label(e2 - e4), "e2-e4");
  EXPECT_EQ(label(PoincareGenerator{}), "0");
}

TEST(Bracket, MatchesVectorFieldCommutator) {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 30; ++n) {
    const auto g = random_generator(rng), h = random_generator(rng);
    const auto b = bracket(g, h);
    const Mat4 m = generator_jacobian(g), k = generator_jacobian(h);
    const SpacetimePoint x = random_point(rng);
    const Vec4 xi = generator_value(g, x), eta = generator_value(h, x), got = generator_value(b, x);
    for (int i = 0; i < 4; ++i) {
      double want = 0.0;
      for (int j = 0; j < 4; ++j) want += xi[j] * k[i][j] - eta[j] * m[i][j];
      EXPECT_NEAR(got[i], want, 1e-13);
    }
  }
}

TEST(Bracket, StructureConstantsSample) {
  EXPECT_EQ(bracket(e1, e12), e2);
  EXPECT_EQ(bracket(e12, e1), -1.0 * e2);
  EXPECT_EQ(bracket(e12 - e14, e23 + e34), PoincareGenerator{});
}

TEST(Bracket, AntisymmetricAndJacobiExactOnBasis) {
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b) {
      const auto ea = PoincareGenerator::basis(a), eb = PoincareGenerator::basis(b);
      EXPECT_EQ(bracket(ea, eb), -1.0 * bracket(eb, ea));
      for (int c = 0; c < 10; ++c) {
        const auto ec = PoincareGenerator::basis(c);
        const auto s = bracket(ea, bracket(eb, ec)) + bracket(eb, bracket(ec, ea)) + bracket(ec, bracket(ea, eb));
        EXPECT_EQ(s, PoincareGenerator{});
      }
    }
}

TEST(ExteriorDerivative, ConstantAndLinearExamples) {
  const CovectorField c([](const JetPoint&) { return std::array<Jet2, 4>{1.0, -2.0, 3.0, 0.5}; });
  EXPECT_EQ(max_abs(exterior_derivative(c, {0.1, 0.2, 0.3, 0.4})), 0.0);
  const CovectorField a([](const JetPoint& x) { return std::array<Jet2, 4>{0.0, x[0], 0.0, 0.0}; });
  const TwoForm f = exterior_derivative(a, {0.1, 0.2, 0.3, 0.4});
  EXPECT_EQ(f.comp, (std::array<double, 6>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(f(1, 0), -1.0);
}

TEST(ExteriorDerivative, DdIsZero) {
  const auto a = sample_potential();
  std::mt19937_64 rng(3);
  for (int n = 0; n < 50; ++n) {
    const auto x = random_point(rng);
    EXPECT_LE(max_abs(closedness_residual(a, x)), 1e-14);
    const auto f = TwoFormField::exterior_derivative_of(a);
    EXPECT_LE(max_abs(closedness_residual(f.eval(x))), 1e-14);
  }
}

TEST(LieDerivative, TranslationsKillConstants) {
  const CovectorField c([](const JetPoint&) { return std::array<Jet2, 4>{1.0, -2.0, 3.0, 0.5}; });
  for (int k = 0; k < 4; ++k)
    EXPECT_EQ(max_abs(lie_derivative_covector(c, PoincareGenerator::basis(k), {0.3, 0.1, -0.2, 0.9})), 0.0);
}

TEST(LieDerivative, CovectorMatchesFlowDerivative) {
  const auto a = sample_potential();
  std::mt19937_64 rng(4);
  const double t = 1e-4;
  for (int n = 0; n < 30; ++n) {
    const auto g = random_generator(rng);
    const auto x = random_point(rng);
    const Covector got = lie_derivative_covector(a, g, x);
    const Covector p = pulled_back(a, g, x, t), m = pulled_back(a, g, x, -t);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(got[i], (p[i] - m[i]) / (2 * t), 1e-6 * (1 + std::fabs(got[i])));
  }
}

TEST(LieDerivative, CommutesWithExteriorDerivative) {
  // L_g dA computed on F equals d(L_g A), the latter by central differences of L_g A.
  const auto a = sample_potential();
  const auto f = TwoFormField::exterior_derivative_of(a);
  std::mt19937_64 rng(5);
  const double h = 1e-5;
  for (int n = 0; n < 20; ++n) {
    const auto g = random_generator(rng);
    const auto x = random_point(rng);
    const TwoForm lf = lie_derivative_twoform(f, g, x);
    Mat4 dl{}; // dl[i][j] = d_j (L_g A)_i
    for (int j = 0; j < 4; ++j) {
      SpacetimePoint p = x, m = x;
      p[j] += h;
      m[j] -= h;
      const Covector lp = lie_derivative_covector(a, g, p), lm = lie_derivative_covector(a, g, m);
      for (int i = 0; i < 4; ++i) dl[i][j] = (lp[i] - lm[i]) / (2 * h);
    }
    for (int c = 0; c < 6; ++c) {
      const auto [i, j] = kPairs[c];
      const double want = dl[j][i] - dl[i][j];
      EXPECT_NEAR(lf.comp[c], want, 1e-6 * (1 + std::fabs(want)));
    }
  }
}

TEST(LieDerivative, BracketRepresentation) {
  // L_[g,h] A = L_g L_h A - L_h L_g A; check on a linear potential where L_h A is again linear.
  const Mat4 c = {{{0.3, -1.0, 0.2, 0.5}, {0.7, 0.1, -0.4, 0.0}, {0.0, 0.6, 0.9, -0.2}, {-0.5, 0.3, 0.0, 0.8}}};
  const CovectorField a([c](const JetPoint& x) {
    std::array<Jet2, 4> r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i] += c[i][j] * x[j];
    return r;
  });
  std::mt19937_64 rng(6);
  for (int n = 0; n < 20; ++n) {
    const auto g = random_generator(rng), h = random_generator(rng);
    auto lie_of = [](const CovectorField& f, const PoincareGenerator& k) {
      return CovectorField([f, k](const JetPoint& x) {
        // (L_k A)_i = xi^j d_j A_i + A_j M[j][i], evaluated on jets.
        const Mat4 m = generator_jacobian(k);
        std::array<Jet2, 4> xi{};
        for (int i = 0; i < 4; ++i) {
          xi[i] = k.a[i];
          for (int j = 0; j < 4; ++j) xi[i] += m[i][j] * x[j];
        }
        SpacetimePoint p{};
        for (int i = 0; i < 4; ++i) p[i] = x[i].value();
        const auto s = f.eval(p);
        std::array<Jet2, 4> out{};
        for (int i = 0; i < 4; ++i) {
          // linear A: d_j A_i is constant, A_j is linear in x
          for (int j = 0; j < 4; ++j) {
            Jet2 aj = 0.0;
            for (int l = 0; l < 4; ++l) aj += s.da[j][l] * x[l];
            out[i] += xi[j] * s.da[i][j] + aj * m[j][i];
          }
        }
        return out;
      });
    };
    const auto x = random_point(rng);
    const Covector gh = lie_derivative_covector(lie_of(a, h), g, x);
    const Covector hg = lie_derivative_covector(lie_of(a, g), h, x);
    const Covector b = lie_derivative_covector(a, bracket(g, h), x);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(gh[i] - hg[i], b[i], 1e-12);
  }
}

} // namespace
