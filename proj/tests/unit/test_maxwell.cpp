#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "minkpot/catalog.hpp"
#include "minkpot/errors.hpp"
#include "minkpot/verify.hpp"

using namespace minkpot;

namespace {

FunctionSlot poly1(const std::string& label, std::vector<double> c) {
  Polynomial p{1, {}};
  for (std::size_t k = 0; k < c.size(); ++k) p.terms.push_back({{static_cast<int>(k), 0, 0}, c[k]});
  return polynomial_slot(label, p);
}

TEST(WorkedExamples, C319PointValue) {
  const FunctionSlot phi = poly1("phi", {0.0, 1.0});
  const CovectorField a = presets::p319_example(1.0, phi);
  const TwoFormField closed = presets::c319_example_closed_form(1.0, phi);
  const SpacetimePoint x = {1.0, 1.0, 0.0, 1.0};
  const TwoForm da = exterior_derivative(a, x);
  const TwoForm f = closed.eval(x).f;
  for (int c = 0; c < 6; ++c)
    EXPECT_NEAR(da.comp[c], f.comp[c], 1e-10 * std::max(1.0, std::fabs(f.comp[c]))) << "component " << c;
}

TEST(WorkedExamples, Crosschecks) {
  const auto c319 = appendix_crosscheck(AppendixExample::C319);
  EXPECT_TRUE(c319.pass) << c319.note;
  EXPECT_EQ(c319.detected_dim, 3);
  const auto c416 = appendix_crosscheck(AppendixExample::C416);
  EXPECT_TRUE(c416.pass) << c416.note;
  EXPECT_EQ(c416.detected_dim, 4);
}

TEST(WorkedExamples, C319ExampleLiesInTheClass) {
  const TwoFormField f = presets::c319_example_closed_form(0.8, poly1("phi", {0.3, -1.0, 0.5}));
  const auto pts = sample_points(f.domain(), 100, 3);
  EXPECT_LE(invariance_residual(f, generators_of("C3.19", {{"lambda", 0.8}}), pts).max_residual, 1e-9);
  EXPECT_LE(closedness_max(f, pts), 1e-9);
}

TEST(WorkedExamples, ConstantPhiBreaksGenericity) {
  const auto pts = sample_points([](const SpacetimePoint& x) { return x[1] + x[3] >= 1e-3; }, 40, 4);
  const TwoFormField f = TwoFormField::exterior_derivative_of(presets::p319_example(1.0, poly1("phi", {2.0})));
  EXPECT_GT(detect_symmetry_algebra(f, pts).dim, 3);
}

TEST(MaxwellClasses, ExactDimensionsUnderGenericity) {
  for (const auto* e : list_classes(ClassKind::Maxwell)) {
    const auto r = verify_class(*e, VerifyOptions{});
    EXPECT_TRUE(r.pass) << e->id.str() << " " << r.note;
    EXPECT_EQ(r.detected_dim, maxwell_expected_dim(e->id)) << e->id.str();
  }
}

TEST(MaxwellClasses, ExpectedDimensionOnlyForMaxwellIds) {
  EXPECT_EQ(maxwell_expected_dim(ClassId::parse("C5.9")), 5);
  EXPECT_THROW(maxwell_expected_dim(ClassId::parse("P5.9")), UnknownClass);
  EXPECT_THROW(maxwell_expected_dim(ClassId::parse("C5.1")), UnknownClass);
}

// A class whose algebra contains another's is a subset of it.
TEST(MaxwellClasses, InclusionsFollowAlgebraContainment) {
  const double l = 0.6;
  struct Pair {
    const char* sub;
    ParamMap sub_params;
    const char* super;
    ParamMap super_params;
  };
  const Pair pairs[] = {
      {"C6.7", {{"lambda", l}, {"a1", 0.4}, {"a2", -1.1}}, "C4.17", {{"lambda", l}, {"A", 0}, {"B", 0}, {"C", 0}}},
      {"C5.9", {{"C", 0.7}}, "C4.17", {{"lambda", l}, {"A", 0}, {"B", 0}, {"C", 0}}},
      {"C5.9", {{"C", 0.7}}, "C4.20", {}},
  };
  for (const auto& p : pairs) {
    const TwoFormField f = instantiate_maxwell(p.sub, p.sub_params, {});
    const auto pts = sample_points(f.domain(), 100, 5);
    EXPECT_LE(invariance_residual(f, generators_of(p.super, p.super_params), pts).max_residual, 1e-9)
        << p.sub << " in " << p.super;
  }
}

TEST(MaxwellClasses, C65ZeroBranchIsZero) {
  const TwoFormField f = instantiate_maxwell("C6.5", {{"lambda", 0.0}, {"C1", 1.0}, {"C2", -2.0}}, {});
  for (const auto& x : sample_points({}, 20, 6)) EXPECT_EQ(max_abs(f.eval(x).f), 0.0);
}

TEST(MaxwellClasses, C416AntiderivativeSlotIsChecked) {
  SlotSet s;
  s.emplace("Phi2", poly1("Phi2", {1.0, 2.0}));
  s.emplace("Phi2int", poly1("Phi2int", {0.0, 1.0, 1.0})); // t + t^2, derivative 1 + 2t
  EXPECT_NO_THROW(instantiate_maxwell("C4.16", {{"lambda", 0.5}, {"K", 1.0}}, s));
  s["Phi2int"] = poly1("Phi2int", {0.0, 1.0, 2.0});
  EXPECT_THROW(instantiate_maxwell("C4.16", {{"lambda", 0.5}, {"K", 1.0}}, s), SlotRelationViolation);
}

TEST(MaxwellClasses, C319EverySlotDirectionIsInvariant) {
  const double l = -1.3;
  const char* labels[] = {"A", "D1", "D2"};
  for (const char* on : labels) {
    SlotSet s;
    for (const char* k : labels) s.emplace(k, poly1(k, std::string(k) == on ? std::vector<double>{0.2, -0.5, 0.3, 0.1}
                                                                            : std::vector<double>{}));
    const TwoFormField f = instantiate_maxwell("C3.19", {{"lambda", l}}, s);
    const auto pts = sample_points(f.domain(), 100, 8);
    EXPECT_LE(invariance_residual(f, generators_of("C3.19", {{"lambda", l}}), pts).max_residual, 1e-9) << on;
    EXPECT_LE(closedness_max(f, pts), 1e-9) << on;
  }
}

TEST(Appendix, NinePassRowsAndTwoNotes) {
  const auto rows = appendix_reports(42);
  int pass = 0, note = 0;
  for (const auto& r : rows) {
    if (r.status == "PASS") ++pass;
    if (r.status == "NOTE") ++note;
  }
  EXPECT_EQ(pass, 9);
  EXPECT_EQ(note, 2);
  EXPECT_EQ(rows.back().note.rfind("ZERO-FIELD", 0), 0u);
}

} // namespace
