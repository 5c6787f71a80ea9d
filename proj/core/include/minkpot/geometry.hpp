#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>

#include "minkpot/jet.hpp"
#include "minkpot/types.hpp"

namespace minkpot {

struct Metric {
  static constexpr Vec4 diagonal{-1.0, -1.0, -1.0, 1.0};
  static constexpr double g(int i, int j) { return i == j ? diagonal[i] : 0.0; }
};

// Basis order used for the 10 coefficients everywhere:
// e1 e2 e3 e4 e12 e13 e23 e14 e24 e34.
inline constexpr std::array<std::string_view, 10> kBasisLabels = {
    "e1", "e2", "e3", "e4", "e12", "e13", "e23", "e14", "e24", "e34"};

using Coefficients = std::array<double, 10>;

struct PoincareGenerator {
  Vec4 a{};                  // e1..e4
  std::array<double, 6> w{}; // e12 e13 e23 e14 e24 e34

  static constexpr PoincareGenerator from_coefficients(const Coefficients& c) {
    PoincareGenerator g;
    for (int i = 0; i < 4; ++i) g.a[i] = c[i];
    for (int i = 0; i < 6; ++i) g.w[i] = c[4 + i];
    return g;
  }
  static constexpr PoincareGenerator basis(int k) {
    Coefficients c{};
    c[k] = 1.0;
    return from_coefficients(c);
  }
  constexpr Coefficients coefficients() const {
    Coefficients c{};
    for (int i = 0; i < 4; ++i) c[i] = a[i];
    for (int i = 0; i < 6; ++i) c[4 + i] = w[i];
    return c;
  }

  friend constexpr PoincareGenerator operator+(const PoincareGenerator& x,
                                               const PoincareGenerator& y) {
    Coefficients c = x.coefficients();
    const Coefficients d = y.coefficients();
    for (int i = 0; i < 10; ++i) c[i] += d[i];
    return from_coefficients(c);
  }
  friend constexpr PoincareGenerator operator*(double k, const PoincareGenerator& x) {
    Coefficients c = x.coefficients();
    for (double& v : c) v *= k;
    return from_coefficients(c);
  }
  friend constexpr PoincareGenerator operator-(const PoincareGenerator& x,
                                               const PoincareGenerator& y) {
    return x + (-1.0) * y;
  }
  friend bool operator==(const PoincareGenerator&, const PoincareGenerator&) = default;
};

// Named basis elements, e.g. gen::e13 + 2.0 * gen::e2.
namespace gen {
inline constexpr PoincareGenerator e1 = PoincareGenerator::basis(0);
inline constexpr PoincareGenerator e2 = PoincareGenerator::basis(1);
inline constexpr PoincareGenerator e3 = PoincareGenerator::basis(2);
inline constexpr PoincareGenerator e4 = PoincareGenerator::basis(3);
inline constexpr PoincareGenerator e12 = PoincareGenerator::basis(4);
inline constexpr PoincareGenerator e13 = PoincareGenerator::basis(5);
inline constexpr PoincareGenerator e23 = PoincareGenerator::basis(6);
inline constexpr PoincareGenerator e14 = PoincareGenerator::basis(7);
inline constexpr PoincareGenerator e24 = PoincareGenerator::basis(8);
inline constexpr PoincareGenerator e34 = PoincareGenerator::basis(9);
} // namespace gen

std::string label(const PoincareGenerator& g);

Vec4 generator_value(const PoincareGenerator& g, const SpacetimePoint& x);

// M with xi(x) = a + M x, M[i][j] = d xi^i / d x^j.
Mat4 generator_jacobian(const PoincareGenerator& g);

PoincareGenerator bracket(const PoincareGenerator& g1, const PoincareGenerator& g2);

using Covector = Vec4;

// Components ordered F12 F13 F14 F23 F24 F34.
struct TwoForm {
  std::array<double, 6> comp{};

  static constexpr int index(int i, int j) {
    // i < j assumed
    constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[i][j];
  }
  double operator()(int i, int j) const {
    if (i == j) return 0.0;
    return i < j ? comp[index(i, j)] : -comp[index(j, i)];
  }
};

inline constexpr std::array<std::array<int, 2>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

using JetPoint = std::array<Jet2, 4>;
using Domain = std::function<bool(const SpacetimePoint&)>;

// A evaluated at one point: value, da[i][j] = d_j A_i, d2a[i][j][k] = d_j d_k A_i.
struct CovectorSample {
  Covector a{};
  Mat4 da{};
  std::array<Mat4, 4> d2a{};
};

class CovectorField {
public:
  using Components = std::function<std::array<Jet2, 4>(const JetPoint&)>;

  CovectorField() = default;
  CovectorField(Components components, Domain domain = {});

  bool contains(const SpacetimePoint& x) const { return !domain_ || domain_(x); }
  const Domain& domain() const { return domain_; }

  std::array<Jet2, 4> jets(const SpacetimePoint& x) const;
  CovectorSample eval(const SpacetimePoint& x) const;
  // Values only; skips the domain check so finite-difference stencils may
  // straddle the sampling margin.
  Covector value_unchecked(const SpacetimePoint& x) const;

  CovectorField scaled(double c) const;

private:
  Components components_;
  Domain domain_;
};

// F at one point with df[c][k] = d_k of component c.
struct TwoFormSample {
  TwoForm f;
  std::array<Vec4, 6> df{};
};

class TwoFormField {
public:
  using Components = std::function<std::array<Jet2, 6>(const JetPoint&)>;
  using Evaluator = std::function<TwoFormSample(const SpacetimePoint&)>;

  TwoFormField() = default;
  static TwoFormField from_components(Components components, Domain domain = {});
  static TwoFormField from_evaluator(Evaluator evaluator, Domain domain = {});
  // dA, with its first derivatives taken from the second jets of A.
  static TwoFormField exterior_derivative_of(const CovectorField& a);

  bool contains(const SpacetimePoint& x) const { return !domain_ || domain_(x); }
  const Domain& domain() const { return domain_; }
  TwoFormSample eval(const SpacetimePoint& x) const;

private:
  Evaluator eval_;
  Domain domain_;
};

Covector lie_derivative_covector(const CovectorSample& s, const PoincareGenerator& g,
                                 const SpacetimePoint& x);
Covector lie_derivative_covector(const CovectorField& a, const PoincareGenerator& g,
                                 const SpacetimePoint& x);

TwoForm exterior_derivative(const CovectorSample& s);
TwoForm exterior_derivative(const CovectorField& a, const SpacetimePoint& x);

// Cyclic sums d_i F_jk + d_j F_ki + d_k F_ij for (123), (124), (134), (234).
Vec4 closedness_residual(const CovectorSample& s);
Vec4 closedness_residual(const TwoFormSample& s);
Vec4 closedness_residual(const CovectorField& a, const SpacetimePoint& x);

TwoForm lie_derivative_twoform(const TwoFormSample& s, const PoincareGenerator& g,
                               const SpacetimePoint& x);
TwoForm lie_derivative_twoform(const TwoFormField& f, const PoincareGenerator& g,
                               const SpacetimePoint& x);

// 1 + max|A_i| + max|d_j A_i| (1 + max|x^k|), and the analogue for F.
double residual_scale(const CovectorSample& s, const SpacetimePoint& x);
double residual_scale(const TwoFormSample& s, const SpacetimePoint& x);

double max_abs(const Vec4& v);
double max_abs(const TwoForm& f);

} // namespace minkpot
