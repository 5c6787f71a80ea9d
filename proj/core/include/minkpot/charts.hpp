#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "minkpot/geometry.hpp"
#include "minkpot/jet.hpp"

namespace minkpot {

// Singular surfaces (x2 + x4 = 0, r = 0, branch cuts, ...) are excluded
// with this margin.
inline constexpr double kDomainMargin = 1e-3;

enum class ChartKind {
  Isotropic,         // (x1, x2+x4, x3, x2-x4)
  Elliptic,          // (r, x2~, phi, x4~), x1 = r sin phi, x3 = r cos phi
  Hyperbolic,        // (x1~, r, x3, phi), x2 = r ch phi, x4 = r sh phi, x1 = lambda phi + x1~
  HyperbolicShift3,  // as Hyperbolic with the shift on x3
  ParabolicA,        // null rotation e12 - e14
  ParabolicB,        // null rotation e12 - e14 + mu e3
  ParabolicC,        // null rotation e12 - e14 + lambda e2
  Birotation,        // (r, rho, theta, phi) for e13 + lambda e24
  NullRotationPair,  // e12 - e14 and e23 + e34 simultaneously
  ParabolicPairB,    // ParabolicB followed by (u, v) for the second generator
  ParabolicLog,      // ParabolicA followed by u = x3~ - lambda ln x1~, v = x4~ - x1~^2/2
  ParabolicLogShift, // ParabolicA followed by v = ln x1~, u = x3~ - mu ln x1~
  Helix,             // (u, phi, psi, x2 - x4) with a 2x2 linear solve in (x1, x3)
};

std::string_view chart_name(ChartKind kind);

// xi(x) = a + m x, not necessarily a Poincare generator.
struct AffineField {
  Vec4 a{};
  Mat4 m{};

  static AffineField of(const PoincareGenerator& g) { return {g.a, generator_jacobian(g)}; }
  Vec4 operator()(const SpacetimePoint& x) const {
    Vec4 v = a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) v[i] += m[i][j] * x[j];
    return v;
  }
};

// xi = factor * d/du_coord in adapted coordinates.
struct Rectification {
  std::string field_label;
  AffineField field;
  int coord = 0;
  double factor = 1.0;
};

struct AdaptedBox {
  Vec4 lo{};
  Vec4 hi{};
};

namespace detail {

template <class T> T ch(const T& v) {
  using std::cosh;
  return cosh(v);
}
template <class T> T sh(const T& v) {
  using std::sinh;
  return sinh(v);
}
// atanh(x4 / x2) for x2 > |x4|, written through ln so it needs no extra jet rule.
template <class T> T rapidity(const T& x2, const T& x4) {
  using std::log;
  return 0.5 * (log(x2 + x4) - log(x2 - x4));
}

} // namespace detail

class Chart {
public:
  explicit Chart(ChartKind kind, double p0 = 0.0, double p1 = 0.0, double p2 = 0.0);

  ChartKind kind() const { return kind_; }
  std::string_view name() const { return chart_name(kind_); }
  const std::array<double, 3>& params() const { return p_; }
  std::array<std::string_view, 4> coordinate_names() const;

  bool domain(const SpacetimePoint& x) const;
  bool adapted_domain(const Vec4& u) const;
  AdaptedBox adapted_box() const;

  // Throw OutOfDomain outside the respective domains.
  SpacetimePoint forward(const Vec4& u) const;
  Vec4 inverse(const SpacetimePoint& x) const;

  std::vector<Rectification> rectifications() const;

  template <class T> std::array<T, 4> forward_t(const std::array<T, 4>& u) const;
  template <class T> std::array<T, 4> inverse_t(const std::array<T, 4>& x) const;

private:
  bool adapted_basic(const Vec4& u) const;

  ChartKind kind_;
  std::array<double, 3> p_;
};

template <class T> std::array<T, 4> Chart::inverse_t(const std::array<T, 4>& x) const {
  using std::atan2;
  using std::log;
  using std::sqrt;
  using detail::rapidity;
  const double l = p_[0], m = p_[1], n = p_[2];
  switch (kind_) {
  case ChartKind::Isotropic:
    return {x[0], x[1] + x[3], x[2], x[1] - x[3]};
  case ChartKind::Elliptic: {
    const T phi = atan2(x[0], x[2]);
    return {sqrt(x[0] * x[0] + x[2] * x[2]), x[1] - l * phi, phi, x[3] - m * phi};
  }
  case ChartKind::Hyperbolic: {
    const T phi = rapidity(x[1], x[3]);
    return {x[0] - l * phi, sqrt(x[1] * x[1] - x[3] * x[3]), x[2], phi};
  }
  case ChartKind::HyperbolicShift3: {
    const T phi = rapidity(x[1], x[3]);
    return {x[0], sqrt(x[1] * x[1] - x[3] * x[3]), x[2] - l * phi, phi};
  }
  case ChartKind::ParabolicA:
  case ChartKind::ParabolicB:
  case ChartKind::ParabolicPairB:
  case ChartKind::ParabolicLog:
  case ChartKind::ParabolicLogShift: {
    const T s = x[1] + x[3];
    const double mu = kind_ == ChartKind::ParabolicB || kind_ == ChartKind::ParabolicPairB ? m : 0.0;
    const T t1 = s;
    const T t2 = -x[0] / s;
    const T t3 = x[2] + mu * x[0] / s;
    const T t4 = 0.5 * x[0] * x[0] + x[1] * s;
    if (kind_ == ChartKind::ParabolicA || kind_ == ChartKind::ParabolicB) return {t1, t2, t3, t4};
    if (kind_ == ChartKind::ParabolicPairB) {
      const T q = t1 * t1 - m * m;
      const T p = t1 * t3;
      return {t1, t2, p / q, 0.5 * p * p + t4 * q};
    }
    if (kind_ == ChartKind::ParabolicLog) return {t1, t2, t3 - l * log(t1), t4 - 0.5 * t1 * t1};
    const T v = log(t1);
    return {v, t2, t3 - m * v, t4};
  }
  case ChartKind::ParabolicC: {
    const T s = x[1] + x[3];
    return {2.0 * l * x[0] + s * s, s / l, x[2], l * x[3] + x[0] * s + s * s * s / (3.0 * l)};
  }
  case ChartKind::Birotation: {
    const T phi = rapidity(x[1], x[3]) / l;
    return {sqrt(x[0] * x[0] + x[2] * x[2]), sqrt(x[1] * x[1] - x[3] * x[3]),
            atan2(x[2], x[0]) + phi, phi};
  }
  case ChartKind::NullRotationPair: {
    const T s = x[1] + x[3];
    return {s, -x[0] / s, x[2] / s, x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[3] * x[3]};
  }
  case ChartKind::Helix: {
    const T u = x[1] + x[3];
    const T d = u * u - l * l + m * n;
    return {u, (m * x[0] + (u - l) * x[2]) / d, (n * x[2] - (u + l) * x[0]) / d, x[1] - x[3]};
  }
  }
  return x;
}

template <class T> std::array<T, 4> Chart::forward_t(const std::array<T, 4>& u) const {
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using detail::ch;
  using detail::sh;
  const double l = p_[0], m = p_[1], n = p_[2];
  // Galilean point from the null-rotation coordinates (x1~, x2~, x3~, x4~).
  auto parabolic = [](const T& t1, const T& t2, const T& t3, const T& t4, double mu) {
    const T x1 = -t2 * t1;
    const T x2 = (t4 - 0.5 * x1 * x1) / t1;
    return std::array<T, 4>{x1, x2, t3 - mu * x1 / t1, t1 - x2};
  };
  switch (kind_) {
  case ChartKind::Isotropic:
    return {u[0], 0.5 * (u[1] + u[3]), u[2], 0.5 * (u[1] - u[3])};
  case ChartKind::Elliptic:
    return {u[0] * sin(u[2]), l * u[2] + u[1], u[0] * cos(u[2]), m * u[2] + u[3]};
  case ChartKind::Hyperbolic:
    return {l * u[3] + u[0], u[1] * ch(u[3]), u[2], u[1] * sh(u[3])};
  case ChartKind::HyperbolicShift3:
    return {u[0], u[1] * ch(u[3]), l * u[3] + u[2], u[1] * sh(u[3])};
  case ChartKind::ParabolicA:
    return parabolic(u[0], u[1], u[2], u[3], 0.0);
  case ChartKind::ParabolicB:
    return parabolic(u[0], u[1], u[2], u[3], m);
  case ChartKind::ParabolicPairB: {
    const T q = u[0] * u[0] - m * m;
    const T t3 = u[2] * q / u[0];
    const T p = u[0] * t3;
    return parabolic(u[0], u[1], t3, (u[3] - 0.5 * p * p) / q, m);
  }
  case ChartKind::ParabolicLog:
    return parabolic(u[0], u[1], u[2] + l * log(u[0]), u[3] + 0.5 * u[0] * u[0], 0.0);
  case ChartKind::ParabolicLogShift:
    return parabolic(exp(u[0]), u[1], u[2] + m * u[0], u[3], 0.0);
  case ChartKind::ParabolicC: {
    const T s = l * u[1];
    const T x1 = (u[0] - s * s) / (2.0 * l);
    const T x4 = (u[3] - x1 * s - s * s * s / (3.0 * l)) / l;
    return {x1, s - x4, u[2], x4};
  }
  case ChartKind::Birotation: {
    const T a = u[2] - u[3];
    return {u[0] * cos(a), u[1] * ch(l * u[3]), u[0] * sin(a), u[1] * sh(l * u[3])};
  }
  case ChartKind::NullRotationPair: {
    const T x1 = -u[1] * u[0];
    const T x3 = u[2] * u[0];
    const T d = (u[3] - x1 * x1 - x3 * x3) / u[0];
    return {x1, 0.5 * (u[0] + d), x3, 0.5 * (u[0] - d)};
  }
  case ChartKind::Helix:
    return {n * u[1] - (u[0] - l) * u[2], 0.5 * (u[0] + u[3]), (u[0] + l) * u[1] + m * u[2],
            0.5 * (u[0] - u[3])};
  }
  return u;
}

} // namespace minkpot
