#include <algorithm>
#include <cmath>
#include <cstdio>

#include "minkpot/errors.hpp"
#include "minkpot/verify.hpp"

namespace minkpot {

namespace {

constexpr int kCrosscheckPoints = 100;
constexpr double kC319Tolerance = 1e-9;
constexpr double kC416Tolerance = 1e-12;
constexpr double kC416K = 1.5;
constexpr double kC416Lambda = 0.75;

FunctionSlot identity_slot() { return polynomial_slot("phi", Polynomial{1, {{{1, 0, 0}, 1.0}}}); }
FunctionSlot constant_slot(double c) { return polynomial_slot("phi", Polynomial{1, {{{0, 0, 0}, c}}}); }

// Max over points of |F - G|_inf / |G|_inf, absolute where G vanishes.
double max_relative_deviation(const TwoFormField& f, const TwoFormField& g,
                              const std::vector<SpacetimePoint>& points) {
  double m = 0.0;
  for (const auto& x : points) {
    const TwoForm a = f.eval(x).f, b = g.eval(x).f;
    double diff = 0.0;
    for (int c = 0; c < 6; ++c) diff = std::max(diff, std::fabs(a.comp[c] - b.comp[c]));
    const double ref = max_abs(b);
    m = std::max(m, ref > 0.0 ? diff / ref : diff);
  }
  return m;
}

VerificationReport example_row(const std::string& id, const TwoFormField& field, const TwoFormField& closed,
                               const std::vector<PoincareGenerator>& gens, double tol, std::uint64_t seed) {
  VerificationReport rep;
  rep.class_id = id;
  rep.dim = static_cast<int>(gens.size());
  rep.seed = seed;
  const auto points = sample_points(closed.domain(), kCrosscheckPoints, seed);
  rep.n_points = static_cast<int>(points.size());
  const double dev = max_relative_deviation(field, closed, points);
  const auto inv = invariance_residual(closed, gens, points);
  rep.per_generator = inv.per_generator;
  rep.max_residual = inv.max_residual;
  rep.closedness_max = closedness_max(closed, points);
  const std::vector<SpacetimePoint> head(points.begin(), points.begin() + kDetectionPoints);
  rep.detected_dim = detect_symmetry_algebra(closed, head).dim;
  rep.pass = dev <= tol && rep.max_residual <= kVerifyTolerance && rep.closedness_max <= kVerifyTolerance &&
             *rep.detected_dim == rep.dim;
  rep.status = rep.pass ? "PASS" : "FAIL";
  char buf[96];
  std::snprintf(buf, sizeof buf, "max relative deviation %.3e (tol %.0e)", dev, tol);
  rep.note = buf;
  return rep;
}

} // namespace

int maxwell_expected_dim(const ClassId& id) {
  if (id.kind != ClassKind::Maxwell) throw UnknownClass(id.str() + " is not a Maxwell class");
  static const std::vector<ClassId> known = {
      ClassId::parse("C3.19"), ClassId::parse("C4.16"), ClassId::parse("C4.17"), ClassId::parse("C4.20"),
      ClassId::parse("C5.9"),  ClassId::parse("C6.5"),  ClassId::parse("C6.7")};
  if (std::find(known.begin(), known.end(), id) == known.end()) throw UnknownClass(id.str());
  return id.dim;
}

VerificationReport appendix_crosscheck(AppendixExample example, std::uint64_t seed) {
  if (example == AppendixExample::C319) {
    const double l = 1.0;
    const FunctionSlot phi = identity_slot();
    const TwoFormField da = TwoFormField::exterior_derivative_of(presets::p319_example(l, phi));
    const TwoFormField closed = presets::c319_example_closed_form(l, phi);
    return example_row("C3.19 example", da, closed, generators_of("C3.19", {{"lambda", l}}), kC319Tolerance,
                       class_seed(seed, "C3.19 example"));
  }
  const ParamMap params = {{"lambda", kC416Lambda}, {"K", kC416K}};
  const TwoFormField field = instantiate_maxwell("C4.16", params, presets::c416_example_slots());
  const TwoFormField closed = presets::c416_example_closed_form(kC416K, kC416Lambda);
  return example_row("C4.16 example", field, closed, generators_of("C4.16", params), kC416Tolerance,
                     class_seed(seed, "C4.16 example"));
}

std::vector<VerificationReport> appendix_reports(std::uint64_t seed) {
  std::vector<VerificationReport> out;
  out.push_back(appendix_crosscheck(AppendixExample::C319, seed));
  out.push_back(appendix_crosscheck(AppendixExample::C416, seed));

  VerifyOptions opt;
  opt.seed = seed;
  for (const auto& e : registry()) {
    if (e.id.kind != ClassKind::Maxwell) continue;
    VerificationReport rep = verify_class(e, opt);
    const int expected = maxwell_expected_dim(e.id);
    if (rep.pass && rep.detected_dim != expected) {
      rep.pass = false;
      rep.status = "FAIL";
      rep.note = "detected dimension " + std::to_string(rep.detected_dim.value_or(-1)) + ", expected " +
                 std::to_string(expected);
    }
    out.push_back(std::move(rep));
  }

  {
    const double l = 1.0;
    const TwoFormField da = TwoFormField::exterior_derivative_of(presets::p319_example(l, constant_slot(1.0)));
    const auto points = sample_points(da.domain(), kDetectionPoints, class_seed(seed, "C3.19 constant"));
    VerificationReport rep;
    rep.class_id = "C3.19 example, phi constant";
    rep.dim = 3;
    rep.seed = seed;
    rep.n_points = static_cast<int>(points.size());
    rep.detected_dim = detect_symmetry_algebra(da, points).dim;
    rep.status = "NOTE";
    rep.pass = *rep.detected_dim > 3;
    rep.note = "genericity φ′≠0 violated";
    out.push_back(std::move(rep));
  }
  {
    VerifyOptions o = opt;
    const ParamMap params = {{"lambda", 0.0}, {"C1", 1.0}, {"C2", 1.0}};
    VerificationReport rep = verify_instance(find_class("C6.5"), params, SlotSet{}, o);
    rep.class_id = "C6.5, lambda = 0";
    rep.status = "NOTE";
    rep.note = "ZERO-FIELD: the field vanishes on the λ = 0 branch";
    out.push_back(std::move(rep));
  }
  return out;
}

} // namespace minkpot
