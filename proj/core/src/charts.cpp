#include "minkpot/charts.hpp"

#include <cmath>
#include <numbers>

namespace minkpot {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kM = kDomainMargin;

bool finite4(const Vec4& v) {
  for (double e : v)
    if (!std::isfinite(e)) return false;
  return true;
}

} // namespace

std::string_view chart_name(ChartKind kind) {
  switch (kind) {
  case ChartKind::Isotropic: return "isotropic";
  case ChartKind::Elliptic: return "elliptic";
  case ChartKind::Hyperbolic: return "hyperbolic";
  case ChartKind::HyperbolicShift3: return "hyperbolic-shift3";
  case ChartKind::ParabolicA: return "parabolic-a";
  case ChartKind::ParabolicB: return "parabolic-b";
  case ChartKind::ParabolicC: return "parabolic-c";
  case ChartKind::Birotation: return "birotation";
  case ChartKind::NullRotationPair: return "null-rotation-pair";
  case ChartKind::ParabolicPairB: return "parabolic-pair-b";
  case ChartKind::ParabolicLog: return "parabolic-log";
  case ChartKind::ParabolicLogShift: return "parabolic-log-shift";
  case ChartKind::Helix: return "helix";
  }
  return "?";
}

Chart::Chart(ChartKind kind, double p0, double p1, double p2) : kind_(kind), p_{p0, p1, p2} {
  if ((kind == ChartKind::ParabolicC || kind == ChartKind::Birotation) && std::fabs(p0) < 1e-6)
    throw ParamConstraint(std::string(chart_name(kind)) + " chart needs lambda != 0");
  if ((kind == ChartKind::ParabolicB || kind == ChartKind::ParabolicPairB) && std::fabs(p1) < 1e-6)
    throw ParamConstraint(std::string(chart_name(kind)) + " chart needs mu != 0");
}

std::array<std::string_view, 4> Chart::coordinate_names() const {
  switch (kind_) {
  case ChartKind::Isotropic: return {"x1", "v2", "x3", "v4"};
  case ChartKind::Elliptic: return {"r", "x2~", "phi", "x4~"};
  case ChartKind::Hyperbolic: return {"x1~", "r", "x3", "phi"};
  case ChartKind::HyperbolicShift3: return {"x1", "r", "x3~", "phi"};
  case ChartKind::ParabolicA:
  case ChartKind::ParabolicB:
  case ChartKind::ParabolicC:
  case ChartKind::NullRotationPair: return {"x1~", "x2~", "x3~", "x4~"};
  case ChartKind::Birotation: return {"r", "rho", "theta", "phi"};
  case ChartKind::ParabolicPairB: return {"x1~", "x2~", "u", "v"};
  case ChartKind::ParabolicLog: return {"x1~", "x2~", "u", "v"};
  case ChartKind::ParabolicLogShift: return {"v", "x2~", "u", "x4~"};
  case ChartKind::Helix: return {"u", "phi", "psi", "w"};
  }
  return {"", "", "", ""};
}

bool Chart::domain(const SpacetimePoint& x) const {
  if (!finite4(x)) return false;
  const double s = x[1] + x[3];
  const double l = p_[0], m = p_[1], n = p_[2];
  switch (kind_) {
  case ChartKind::Isotropic:
  case ChartKind::ParabolicC: return true;
  case ChartKind::Elliptic:
    // atan2(x1, x3) jumps on x1 = 0, x3 < 0
    return std::hypot(x[0], x[2]) >= kM && !(x[2] < 0.0 && std::fabs(x[0]) < kM);
  case ChartKind::Hyperbolic:
  case ChartKind::HyperbolicShift3: return x[1] - std::fabs(x[3]) >= kM;
  case ChartKind::ParabolicA:
  case ChartKind::ParabolicB:
  case ChartKind::ParabolicLog:
  case ChartKind::ParabolicLogShift:
  case ChartKind::NullRotationPair: return s >= kM;
  case ChartKind::ParabolicPairB: return s >= kM && std::fabs(s * s - m * m) >= kM;
  case ChartKind::Birotation:
    // atan2(x3, x1) jumps on x3 = 0, x1 < 0
    return x[1] - std::fabs(x[3]) >= kM && std::hypot(x[0], x[2]) >= kM &&
           !(x[0] < 0.0 && std::fabs(x[2]) < kM);
  case ChartKind::Helix: return std::fabs(s * s - l * l + m * n) >= kM;
  }
  return false;
}

bool Chart::adapted_basic(const Vec4& u) const {
  const double m = p_[1];
  switch (kind_) {
  case ChartKind::Isotropic:
  case ChartKind::ParabolicC:
  case ChartKind::ParabolicLogShift:
  case ChartKind::Helix: return true;
  case ChartKind::Elliptic: return u[0] > 0.0 && std::fabs(u[2]) < kPi;
  case ChartKind::Hyperbolic:
  case ChartKind::HyperbolicShift3: return u[1] > 0.0;
  case ChartKind::ParabolicA:
  case ChartKind::ParabolicB:
  case ChartKind::ParabolicLog:
  case ChartKind::NullRotationPair: return u[0] > 0.0;
  case ChartKind::ParabolicPairB: return u[0] > 0.0 && u[0] * u[0] != m * m;
  case ChartKind::Birotation:
    return u[0] > 0.0 && u[1] > 0.0 && std::fabs(u[2] - u[3]) < kPi;
  }
  return false;
}

bool Chart::adapted_domain(const Vec4& u) const {
  if (!finite4(u) || !adapted_basic(u)) return false;
  return domain(forward_t<double>(u));
}

AdaptedBox Chart::adapted_box() const {
  switch (kind_) {
  case ChartKind::Isotropic: return {{-2, -4, -2, -4}, {2, 4, 2, 4}};
  case ChartKind::Elliptic: return {{0.01, -2, -kPi, -2}, {3, 2, kPi, 2}};
  case ChartKind::Hyperbolic:
  case ChartKind::HyperbolicShift3: return {{-2, 0.01, -2, -2}, {2, 3, 2, 2}};
  case ChartKind::ParabolicA:
  case ChartKind::ParabolicB:
  case ChartKind::ParabolicC:
  case ChartKind::NullRotationPair:
  case ChartKind::ParabolicPairB:
  case ChartKind::ParabolicLog: return {{0.01, -3, -3, -3}, {4, 3, 3, 3}};
  case ChartKind::ParabolicLogShift: return {{-4, -3, -3, -3}, {1.5, 3, 3, 3}};
  case ChartKind::Birotation: return {{0.01, 0.01, -2 * kPi, -2}, {3, 3, 2 * kPi, 2}};
  case ChartKind::Helix: return {{-4, -3, -3, -4}, {4, 3, 3, 4}};
  }
  return {};
}

SpacetimePoint Chart::forward(const Vec4& u) const {
  if (!adapted_domain(u)) throw OutOfDomain(std::string(name()) + ": adapted point outside domain");
  return forward_t<double>(u);
}

Vec4 Chart::inverse(const SpacetimePoint& x) const {
  if (!domain(x)) throw OutOfDomain(std::string(name()) + ": point outside domain");
  return inverse_t<double>(x);
}

std::vector<Rectification> Chart::rectifications() const {
  using namespace gen;
  const double l = p_[0], m = p_[1], n = p_[2];
  auto of = [](const PoincareGenerator& g, int coord, double factor = 1.0) {
    return Rectification{label(g), AffineField::of(g), coord, factor};
  };
  switch (kind_) {
  case ChartKind::Isotropic: return {of(e2 + e4, 1, 2.0), of(e2 - e4, 3, 2.0), of(e1, 0), of(e3, 2)};
  case ChartKind::Elliptic: return {of(e13 + l * e2 + m * e4, 2), of(e2, 1), of(e4, 3)};
  case ChartKind::Hyperbolic: return {of(e24 + l * e1, 3), of(e3, 2)};
  case ChartKind::HyperbolicShift3: return {of(e24 + l * e3, 3), of(e1, 0)};
  case ChartKind::ParabolicA: return {of(e12 - e14, 1)};
  case ChartKind::ParabolicB: return {of(e12 - e14 + m * e3, 1)};
  case ChartKind::ParabolicC: return {of(e12 - e14 + l * e2, 1)};
  case ChartKind::Birotation: return {of(e13 + l * e24, 3)};
  case ChartKind::NullRotationPair: return {of(e12 - e14, 1), of(e23 + e34, 2)};
  case ChartKind::ParabolicPairB: return {of(e12 - e14 + m * e3, 1)};
  case ChartKind::ParabolicLog:
  case ChartKind::ParabolicLogShift: return {of(e12 - e14, 1)};
  case ChartKind::Helix: {
    // The two null-rotation generators with their e2 - e4 components dropped;
    // on functions of (x1, x2 + x4, x3) they act identically.
    AffineField x_red{{l, 0, m, 0}, {}};
    x_red.m[0][1] = -1.0;
    x_red.m[0][3] = -1.0;
    AffineField y_red{{n, 0, l, 0}, {}};
    y_red.m[2][1] = 1.0;
    y_red.m[2][3] = 1.0;
    return {Rectification{"(lambda-x2-x4, 0, mu, 0)", x_red, 2, 1.0},
            Rectification{"(nu, 0, lambda+x2+x4, 0)", y_red, 1, 1.0}, of(e2 - e4, 3, 2.0)};
  }
  }
  return {};
}

} // namespace minkpot
