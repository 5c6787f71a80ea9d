#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "minkpot/catalog.hpp"
#include "minkpot/errors.hpp"
#include "minkpot/verify.hpp"

using namespace minkpot;

namespace {

TEST(ClassIdGrammar, RoundTripsEveryRegistryId) {
  for (const auto& e : registry()) {
    const std::string s = e.id.str();
    EXPECT_EQ(ClassId::parse(s), e.id) << s;
    EXPECT_EQ(ClassId::parse(s).str(), s);
  }
}

TEST(ClassIdGrammar, RejectsMalformedIds) {
  for (const char* bad : {"", "P", "X1.1", "P1", "P1.", "P.1", "P1.1e", "C1.1a", "P1.1aa", "p1.1", "P1.-1"})
    EXPECT_THROW(ClassId::parse(bad), UnknownClass) << bad;
}

TEST(Registry, IdsAreUniqueAndSorted) {
  std::set<ClassId> seen;
  for (const auto& e : registry()) EXPECT_TRUE(seen.insert(e.id).second) << e.id.str();
}

TEST(Registry, Counts) {
  EXPECT_EQ(list_classes(ClassKind::Maxwell).size(), 7u);
  const auto p6 = list_classes(ClassKind::Potential, 6);
  EXPECT_EQ(p6.size(), 9u);
  EXPECT_EQ(std::count_if(p6.begin(), p6.end(), [](const ClassEntry* e) { return e->empty; }), 2);
  int empty = 0;
  for (const auto* e : list_classes(ClassKind::Potential)) empty += e->empty;
  EXPECT_EQ(empty, 3);
}

TEST(Registry, EntriesAreComplete) {
  for (const auto& e : registry()) {
    EXPECT_EQ(e.generator_labels.size(), static_cast<std::size_t>(e.dim())) << e.id.str();
    EXPECT_FALSE(e.summary.empty()) << e.id.str();
    if (e.empty) continue;
    if (e.id.kind == ClassKind::Maxwell) EXPECT_TRUE(static_cast<bool>(e.maxwell)) << e.id.str();
    else EXPECT_TRUE(static_cast<bool>(e.potential)) << e.id.str();
  }
}

TEST(Registry, GeneratorsAreIndependentAndClosed) {
  std::mt19937_64 rng(31);
  for (const auto& e : registry()) {
    for (int d = 0; d < 3; ++d) {
      const ParamMap p = draw_params(e, rng, d);
      const auto gens = generators_of(e, p);
      ASSERT_EQ(gens.size(), static_cast<std::size_t>(e.dim())) << e.id.str();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<PoincareGenerator> others = gens;
        others.erase(others.begin() + static_cast<long>(k));
        if (!others.empty()) EXPECT_GT(span_residual(others, gens[k]), 1e-6) << e.id.str() << " generator " << k;
      }
      EXPECT_LE(closure_residual(gens), 1e-12) << e.id.str();
    }
  }
}

TEST(Params, NullRotationFamilyConstraint) {
  try {
    resolve_class("P1.4", {{"lambda", 1.0}, {"mu", 1.0}});
    FAIL() << "expected ParamConstraint";
  } catch (const ParamConstraint& ex) {
    EXPECT_STREQ(ex.what(), "constraint λμ=0 violated");
  }
}

TEST(Params, FamilyResolution) {
  EXPECT_EQ(resolve_class("P1.4", {{"lambda", 0.0}, {"mu", 0.0}}).entry->id.str(), "P1.4a");
  EXPECT_EQ(resolve_class("P1.4", {{"lambda", 0.0}, {"mu", 2.0}}).entry->id.str(), "P1.4b");
  const auto c = resolve_class("P1.4", {{"lambda", 3.0}, {"mu", 0.0}});
  EXPECT_EQ(c.entry->id.str(), "P1.4c");
  EXPECT_EQ(c.params.count("mu"), 0u);
  EXPECT_EQ(resolve_class("P3.20", {}).entry->id.str(), "P3.20");
}

TEST(Params, ValidationErrors) {
  const auto& c417 = find_class("C4.17");
  EXPECT_THROW(validate_params(c417, {{"lambda", 0.0}, {"A", 1}, {"B", 1}, {"C", 1}}), ParamConstraint);
  EXPECT_THROW(validate_params(c417, {{"lambda", 1.0}, {"A", 1}, {"B", 1}}), ParamConstraint);
  EXPECT_THROW(validate_params(c417, {{"lambda", 1.0}, {"A", 1}, {"B", 1}, {"C", 1}, {"Z", 0}}),
               ParamConstraint);
  EXPECT_NO_THROW(validate_params(c417, {{"lambda", 1.0}, {"A", 1}, {"B", 1}, {"C", 1}}));
}

TEST(Params, DrawsRespectRules) {
  std::mt19937_64 rng(8);
  for (const auto& e : registry())
    for (int d = 0; d < 3; ++d) {
      const ParamMap p = draw_params(e, rng, d);
      EXPECT_NO_THROW(validate_params(e, p)) << e.id.str();
      if (!e.branch_param.empty()) EXPECT_EQ(p.at(e.branch_param) == 0.0, d == 0) << e.id.str();
    }
}

TEST(Instantiate, EmptyClassesRefuse) {
  for (const char* id : {"P5.2", "P6.1", "P6.2"}) {
    EXPECT_TRUE(find_class(id).empty);
    EXPECT_THROW(instantiate_potential(id, {}, {}), EmptyClass) << id;
  }
}

TEST(Instantiate, MissingOrWrongSlotsAreReported) {
  EXPECT_THROW(instantiate_potential("P3.20", {}, {}), ArityMismatch);
  const auto& e = find_class("P3.20");
  SlotSet bad;
  for (const auto& s : e.slots)
    bad.emplace(s.label, polynomial_slot(s.label, Polynomial{s.arity + 1, {}}));
  EXPECT_THROW(instantiate_potential(e, {}, bad), ArityMismatch);
}

TEST(Instantiate, UnknownIdThrows) {
  EXPECT_THROW(find_class("P9.1"), UnknownClass);
  EXPECT_THROW(find_class("C3.1"), UnknownClass);
}

// An instance of a subclass passes the invariance check of the superclass generators.
TEST(Subclasses, P21aInsideP11a) {
  const auto& sub = find_class("P2.1a");
  std::mt19937_64 rng(12);
  const SlotSet slots = default_slots(sub, {}, rng, SlotFamily::Polynomial);
  const CovectorField a = instantiate_potential(sub, {}, slots);
  const auto points = sample_domain(sub, {}, 100, 13);
  EXPECT_LE(invariance_residual(a, generators_of("P1.1a", {}), points).max_residual, 1e-9);
}

TEST(Branches, EachBranchPassesItsOwnContract) {
  VerifyOptions opt;
  opt.detect = false;
  int branch_classes = 0;
  for (const auto& e : registry()) {
    if (e.branch_param.empty() || e.empty) continue;
    ++branch_classes;
    std::mt19937_64 rng(class_seed(42, e.id.str()));
    for (int d = 0; d < 2; ++d) {
      const ParamMap p = draw_params(e, rng, d);
      const SlotSet s = default_slots(e, p, rng, SlotFamily::Polynomial);
      const auto r = verify_instance(e, p, s, opt);
      EXPECT_LE(r.max_residual, 1e-9) << e.id.str() << " branch " << d;
      EXPECT_LE(r.closedness_max, 1e-9) << e.id.str() << " branch " << d;
    }
  }
  EXPECT_GE(branch_classes, 10);
}

} // namespace
