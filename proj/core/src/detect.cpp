#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "minkpot/errors.hpp"
#include "minkpot/verify.hpp"

namespace minkpot {

namespace {

Eigen::VectorXd vec(const PoincareGenerator& g) {
  Eigen::VectorXd v(10);
  const auto c = g.coefficients();
  for (int k = 0; k < 10; ++k) v(k) = c[static_cast<std::size_t>(k)];
  return v;
}

PoincareGenerator from_vec(const Eigen::VectorXd& v) {
  Coefficients c{};
  for (int k = 0; k < 10; ++k) c[static_cast<std::size_t>(k)] = v(k);
  return PoincareGenerator::from_coefficients(c);
}

SymmetryBasis nullspace(const Eigen::MatrixXd& m, double tol_sv) {
  SymmetryBasis out;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  for (int k = 0; k < 10; ++k) out.singular_values[static_cast<std::size_t>(k)] = k < sv.size() ? sv(k) : 0.0;
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const Eigen::MatrixXd& v = svd.matrixV();
  for (int k = 0; k < 10; ++k) {
    if (smax == 0.0 || out.singular_values[static_cast<std::size_t>(k)] <= tol_sv * smax)
      out.basis.push_back(from_vec(v.col(k)));
  }
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

template <class Field, class Sample, class Lie>
SymmetryBasis detect(const Field& f, const std::vector<SpacetimePoint>& points, double tol_sv, int rows_per,
                     Lie lie) {
  if (points.size() < 5) throw InsufficientPoints("symmetry detection needs at least 5 points");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()) * rows_per, 10);
  for (std::size_t p = 0; p < points.size(); ++p) {
    const Sample s = f.eval(points[p]);
    const double scale = residual_scale(s, points[p]);
    for (int k = 0; k < 10; ++k) {
      const auto l = lie(s, PoincareGenerator::basis(k), points[p]);
      for (int r = 0; r < rows_per; ++r)
        m(static_cast<Eigen::Index>(p) * rows_per + r, k) = l[static_cast<std::size_t>(r)] / scale;
    }
  }
  return nullspace(m, tol_sv);
}

// Parent instance and extending generator of an empty class.
struct Certificate {
  std::string parent;
  std::function<PoincareGenerator(std::mt19937_64&)> generator;
};

Certificate certificate_for(const ClassId& id) {
  using namespace gen;
  if (id == ClassId::parse("P5.2"))
    return {"P4.1", [](std::mt19937_64& rng) {
              std::uniform_real_distribution<double> mag(0.5, 2.0), coin(0.0, 1.0);
              const double l = (coin(rng) < 0.5 ? -1.0 : 1.0) * mag(rng);
              return e13 + l * e24;
            }};
  if (id == ClassId::parse("P6.1")) return {"P3.20", [](std::mt19937_64&) { return e24; }};
  if (id == ClassId::parse("P6.2")) return {"P5.1", [](std::mt19937_64&) { return e13; }};
  throw NotMarkedEmpty(id.str() + " has no emptiness certificate");
}

// Rescale free constants so the largest has magnitude one.
ParamMap unit_normalized(const ClassEntry& parent, ParamMap p) {
  double m = 0.0;
  for (const auto& spec : parent.params)
    if (spec.rule == ParamRule::Free) m = std::max(m, std::fabs(p.at(spec.name)));
  if (m > 0.0)
    for (const auto& spec : parent.params)
      if (spec.rule == ParamRule::Free) p[spec.name] /= m;
  return p;
}

} // namespace

SymmetryBasis detect_symmetry_algebra(const CovectorField& a, const std::vector<SpacetimePoint>& points,
                                      double tol_sv) {
  return detect<CovectorField, CovectorSample>(
      a, points, tol_sv, 4, [](const CovectorSample& s, const PoincareGenerator& g, const SpacetimePoint& x) {
        return lie_derivative_covector(s, g, x);
      });
}

SymmetryBasis detect_symmetry_algebra(const TwoFormField& f, const std::vector<SpacetimePoint>& points,
                                      double tol_sv) {
  return detect<TwoFormField, TwoFormSample>(
      f, points, tol_sv, 6, [](const TwoFormSample& s, const PoincareGenerator& g, const SpacetimePoint& x) {
        return lie_derivative_twoform(s, g, x).comp;
      });
}

double projection_residual(const SymmetryBasis& s, const PoincareGenerator& g) {
  Eigen::VectorXd v = vec(g);
  const double n = v.norm();
  if (n == 0.0) return 0.0;
  v /= n;
  Eigen::VectorXd r = v;
  for (const auto& b : s.basis) {
    const Eigen::VectorXd bv = vec(b);
    r -= bv.dot(v) * bv;
  }
  return r.norm();
}

double span_residual(const std::vector<PoincareGenerator>& gens, const PoincareGenerator& g) {
  const Eigen::VectorXd v = vec(g);
  if (gens.empty()) return v.norm() / (1.0 + v.norm());
  Eigen::MatrixXd m(10, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t k = 0; k < gens.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = vec(gens[k]);
  const Eigen::VectorXd c = m.colPivHouseholderQr().solve(v);
  return (v - m * c).norm() / (1.0 + v.norm());
}

double closure_residual(const std::vector<PoincareGenerator>& gens) {
  double worst = 0.0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      worst = std::max(worst, span_residual(gens, bracket(gens[i], gens[j])));
  return worst;
}

bool certify_emptiness(const ClassEntry& entry, int trials, std::uint64_t seed) {
  if (!entry.empty) throw NotMarkedEmpty(entry.id.str() + " is not marked empty");
  const Certificate cert = certificate_for(entry.id);
  const ClassEntry& parent = find_class(cert.parent);
  std::mt19937_64 rng(class_seed(seed, entry.id.str()));
  for (int t = 0; t < trials; ++t) {
    const ParamMap params = unit_normalized(parent, draw_params(parent, rng, 1));
    const SlotSet slots = default_slots(parent, params, rng, SlotFamily::Polynomial);
    const CovectorField a = instantiate_potential(parent, params, slots);
    const PoincareGenerator g = cert.generator(rng);
    const auto points = sample_domain(parent, params, kDetectionPoints, rng());
    double worst = 0.0;
    for (const auto& x : points) {
      const CovectorSample s = a.eval(x);
      worst = std::max(worst, max_abs(lie_derivative_covector(s, g, x)) / residual_scale(s, x));
    }
    if (!(worst > kEmptinessThreshold)) return false;
  }
  return true;
}

bool certify_emptiness(std::string_view id, int trials, std::uint64_t seed) {
  return certify_emptiness(find_class(id), trials, seed);
}

} // namespace minkpot
