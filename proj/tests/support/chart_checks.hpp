#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "minkpot/charts.hpp"

namespace minkpot::support {

inline constexpr ChartKind kAllCharts[] = {
    ChartKind::Isotropic,        ChartKind::Elliptic,       ChartKind::Hyperbolic,   ChartKind::HyperbolicShift3,
    ChartKind::ParabolicA,       ChartKind::ParabolicB,     ChartKind::ParabolicC,   ChartKind::Birotation,
    ChartKind::NullRotationPair, ChartKind::ParabolicPairB, ChartKind::ParabolicLog, ChartKind::ParabolicLogShift,
    ChartKind::Helix,
};

inline Chart test_chart(ChartKind k) { return Chart(k, 0.7, 0.4, 0.3); }

inline double rel_err(const Vec4& a, const Vec4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::fabs(a[i] - b[i]) / std::max(1.0, std::fabs(b[i])));
  return m;
}

inline std::vector<SpacetimePoint> chart_domain_points(const Chart& c, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  std::vector<SpacetimePoint> out;
  while (static_cast<int>(out.size()) < n) {
    const SpacetimePoint x = {box(rng), box(rng), box(rng), box(rng)};
    if (c.domain(x)) out.push_back(x);
  }
  return out;
}

inline std::vector<Vec4> chart_adapted_points(const Chart& c, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const AdaptedBox b = c.adapted_box();
  std::vector<Vec4> out;
  long tries = 0;
  while (static_cast<int>(out.size()) < n && ++tries < 1000000) {
    Vec4 u;
    for (int i = 0; i < 4; ++i) u[i] = std::uniform_real_distribution<double>(b.lo[i], b.hi[i])(rng);
    if (c.adapted_domain(u)) out.push_back(u);
  }
  return out;
}

inline double forward_inverse_error(const Chart& c, int n, std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& x : chart_domain_points(c, n, seed)) worst = std::max(worst, rel_err(c.forward(c.inverse(x)), x));
  return worst;
}

// Infinity when fewer than n adapted points could be drawn.
inline double inverse_forward_error(const Chart& c, int n, std::uint64_t seed) {
  const auto us = chart_adapted_points(c, n, seed);
  if (static_cast<int>(us.size()) < n) return INFINITY;
  double worst = 0.0;
  for (const auto& u : us) worst = std::max(worst, rel_err(c.inverse(c.forward(u)), u));
  return worst;
}

// Max over rectifications and points of |du^a/dx^i xi^i - factor delta(a, coord)|.
inline double rectification_error(const Chart& c, int n, std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& r : c.rectifications())
    for (const auto& x : chart_domain_points(c, n, seed)) {
      const auto u = c.inverse_t(seed_coordinates(x));
      const Vec4 xi = r.field(x);
      for (int a = 0; a < 4; ++a) {
        double d = 0.0;
        for (int i = 0; i < 4; ++i) d += u[a].grad(i) * xi[i];
        worst = std::max(worst, std::fabs(d - (a == r.coord ? r.factor : 0.0)));
      }
    }
  return worst;
}

} // namespace minkpot::support
