#include "minkpot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace minkpot {

namespace {

std::string format_coefficient(double c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

} // namespace

std::string label(const PoincareGenerator& g) {
  const Coefficients c = g.coefficients();
  // Rotations and boosts first, then translations.
  static constexpr int order[10] = {4, 5, 6, 7, 8, 9, 0, 1, 2, 3};
  std::string out;
  for (int k : order) {
    const double v = c[k];
    if (v == 0.0) continue;
    const bool first = out.empty();
    if (v < 0.0)
      out += "-";
    else if (!first)
      out += "+";
    const double m = std::fabs(v);
    if (m != 1.0) out += format_coefficient(m);
    out += kBasisLabels[k];
  }
  return out.empty() ? "0" : out;
}

Mat4 generator_jacobian(const PoincareGenerator& g) {
  Mat4 m{};
  const auto& w = g.w;
  m[0][1] -= w[0]; // e12 = (-x2, x1, 0, 0)
  m[1][0] += w[0];
  m[0][2] += w[1]; // e13 = (x3, 0, -x1, 0)
  m[2][0] -= w[1];
  m[1][2] -= w[2]; // e23 = (0, -x3, x2, 0)
  m[2][1] += w[2];
  m[0][3] += w[3]; // e14 = (x4, 0, 0, x1)
  m[3][0] += w[3];
  m[1][3] += w[4]; // e24 = (0, x4, 0, x2)
  m[3][1] += w[4];
  m[2][3] += w[5]; // e34 = (0, 0, x4, x3)
  m[3][2] += w[5];
  return m;
}

Vec4 generator_value(const PoincareGenerator& g, const SpacetimePoint& x) {
  const Mat4 m = generator_jacobian(g);
  Vec4 v = g.a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v[i] += m[i][j] * x[j];
  return v;
}

PoincareGenerator bracket(const PoincareGenerator& g1, const PoincareGenerator& g2) {
  // xi = a + M x, eta = b + N x  =>  [xi, eta] = (N a - M b) + (N M - M N) x
  const Mat4 m = generator_jacobian(g1);
  const Mat4 n = generator_jacobian(g2);
  PoincareGenerator r;
  for (int i = 0; i < 4; ++i) {
    double t = 0.0;
    for (int j = 0; j < 4; ++j) t += n[i][j] * g1.a[j] - m[i][j] * g2.a[j];
    r.a[i] = t;
  }
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      double t = 0.0;
      for (int j = 0; j < 4; ++j) t += n[i][j] * m[j][k] - m[i][j] * n[j][k];
      c[i][k] = t;
    }
  r.w = {c[1][0], c[0][2], c[2][1], c[0][3], c[1][3], c[2][3]};
  return r;
}

CovectorField::CovectorField(Components components, Domain domain)
    : components_(std::move(components)), domain_(std::move(domain)) {}

std::array<Jet2, 4> CovectorField::jets(const SpacetimePoint& x) const {
  if (!contains(x)) throw OutOfDomain("point outside the field domain");
  return components_(seed_coordinates(x));
}

CovectorSample CovectorField::eval(const SpacetimePoint& x) const {
  const auto j = jets(x);
  CovectorSample s;
  for (int i = 0; i < 4; ++i) {
    s.a[i] = j[i].value();
    s.da[i] = j[i].gradient();
    s.d2a[i] = j[i].hessian();
  }
  return s;
}

Covector CovectorField::value_unchecked(const SpacetimePoint& x) const {
  JetPoint p{Jet2(x[0]), Jet2(x[1]), Jet2(x[2]), Jet2(x[3])};
  const auto j = components_(p);
  return {j[0].value(), j[1].value(), j[2].value(), j[3].value()};
}

CovectorField CovectorField::scaled(double c) const {
  auto inner = components_;
  return CovectorField(
      [inner, c](const JetPoint& x) {
        auto a = inner(x);
        for (auto& v : a) v *= c;
        return a;
      },
      domain_);
}

TwoFormField TwoFormField::from_components(Components components, Domain domain) {
  TwoFormField f;
  f.domain_ = std::move(domain);
  f.eval_ = [components = std::move(components)](const SpacetimePoint& x) {
    const auto j = components(seed_coordinates(x));
    TwoFormSample s;
    for (int c = 0; c < 6; ++c) {
      s.f.comp[c] = j[c].value();
      s.df[c] = j[c].gradient();
    }
    return s;
  };
  return f;
}

TwoFormField TwoFormField::from_evaluator(Evaluator evaluator, Domain domain) {
  TwoFormField f;
  f.eval_ = std::move(evaluator);
  f.domain_ = std::move(domain);
  return f;
}

TwoFormField TwoFormField::exterior_derivative_of(const CovectorField& a) {
  return from_evaluator(
      [a](const SpacetimePoint& x) {
        const CovectorSample s = a.eval(x);
        TwoFormSample t;
        t.f = exterior_derivative(s);
        for (int c = 0; c < 6; ++c) {
          const int i = kPairs[c][0], j = kPairs[c][1];
          for (int k = 0; k < 4; ++k) t.df[c][k] = s.d2a[j][k][i] - s.d2a[i][k][j];
        }
        return t;
      },
      a.domain());
}

TwoFormSample TwoFormField::eval(const SpacetimePoint& x) const {
  if (!contains(x)) throw OutOfDomain("point outside the field domain");
  return eval_(x);
}

Covector lie_derivative_covector(const CovectorSample& s, const PoincareGenerator& g,
                                 const SpacetimePoint& x) {
  const Vec4 xi = generator_value(g, x);
  const Mat4 m = generator_jacobian(g);
  Covector r{};
  for (int i = 0; i < 4; ++i) {
    double t = 0.0;
    for (int j = 0; j < 4; ++j) t += xi[j] * s.da[i][j];
    for (int j = 0; j < 4; ++j) t += s.a[j] * m[j][i];
    r[i] = t;
  }
  return r;
}

Covector lie_derivative_covector(const CovectorField& a, const PoincareGenerator& g,
                                 const SpacetimePoint& x) {
  return lie_derivative_covector(a.eval(x), g, x);
}

TwoForm exterior_derivative(const CovectorSample& s) {
  TwoForm f;
  for (int c = 0; c < 6; ++c) {
    const int i = kPairs[c][0], j = kPairs[c][1];
    f.comp[c] = s.da[j][i] - s.da[i][j];
  }
  return f;
}

TwoForm exterior_derivative(const CovectorField& a, const SpacetimePoint& x) {
  return exterior_derivative(a.eval(x));
}

namespace {

constexpr std::array<std::array<int, 3>, 4> kTriples = {{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

// dF(k, i, j) = d_k F_ij with antisymmetry in (i, j).
template <class DF>
Vec4 cyclic_sums(DF dF) {
  Vec4 r{};
  for (int t = 0; t < 4; ++t) {
    const int i = kTriples[t][0], j = kTriples[t][1], k = kTriples[t][2];
    r[t] = dF(i, j, k) + dF(j, k, i) + dF(k, i, j);
  }
  return r;
}

} // namespace

Vec4 closedness_residual(const CovectorSample& s) {
  return cyclic_sums([&](int k, int i, int j) { return s.d2a[j][k][i] - s.d2a[i][k][j]; });
}

Vec4 closedness_residual(const TwoFormSample& s) {
  return cyclic_sums([&](int k, int i, int j) {
    if (i < j) return s.df[TwoForm::index(i, j)][k];
    return -s.df[TwoForm::index(j, i)][k];
  });
}

Vec4 closedness_residual(const CovectorField& a, const SpacetimePoint& x) {
  return closedness_residual(a.eval(x));
}

TwoForm lie_derivative_twoform(const TwoFormSample& s, const PoincareGenerator& g,
                               const SpacetimePoint& x) {
  const Vec4 xi = generator_value(g, x);
  const Mat4 m = generator_jacobian(g); // d_i xi^k = m[k][i]
  TwoForm r;
  for (int c = 0; c < 6; ++c) {
    const int i = kPairs[c][0], j = kPairs[c][1];
    double t = 0.0;
    for (int k = 0; k < 4; ++k) t += xi[k] * s.df[c][k];
    for (int k = 0; k < 4; ++k) t += s.f(k, j) * m[k][i] + s.f(i, k) * m[k][j];
    r.comp[c] = t;
  }
  return r;
}

TwoForm lie_derivative_twoform(const TwoFormField& f, const PoincareGenerator& g,
                               const SpacetimePoint& x) {
  return lie_derivative_twoform(f.eval(x), g, x);
}

double max_abs(const Vec4& v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::fabs(e));
  return m;
}

double max_abs(const TwoForm& f) {
  double m = 0.0;
  for (double e : f.comp) m = std::max(m, std::fabs(e));
  return m;
}

double residual_scale(const CovectorSample& s, const SpacetimePoint& x) {
  double d = 0.0;
  for (const auto& row : s.da) d = std::max(d, max_abs(row));
  return 1.0 + max_abs(s.a) + d * (1.0 + max_abs(x));
}

double residual_scale(const TwoFormSample& s, const SpacetimePoint& x) {
  double d = 0.0;
  for (const auto& row : s.df) d = std::max(d, max_abs(row));
  return 1.0 + max_abs(s.f) + d * (1.0 + max_abs(x));
}

} // namespace minkpot
