#include <cmath>

#include <gtest/gtest.h>

#include "../support/chart_checks.hpp"
#include "minkpot/charts.hpp"
#include "minkpot/errors.hpp"

using namespace minkpot;
using namespace minkpot::support;

namespace {

class ChartSuite : public ::testing::TestWithParam<ChartKind> {};

TEST_P(ChartSuite, ForwardOfInverseIsIdentity) {
  const Chart c = test_chart(GetParam());
  EXPECT_LE(forward_inverse_error(c, 1000, 17), 1e-10);
}

TEST_P(ChartSuite, InverseOfForwardIsIdentity) {
  const Chart c = test_chart(GetParam());
  EXPECT_LE(inverse_forward_error(c, 1000, 18), 1e-10);
}

TEST_P(ChartSuite, RectifiedGeneratorIsACoordinateField) {
  const Chart c = test_chart(GetParam());
  ASSERT_FALSE(c.rectifications().empty());
  EXPECT_LE(rectification_error(c, 200, 19), 1e-9);
}

TEST_P(ChartSuite, JetInverseAgreesWithDoubleInverse) {
  const Chart c = test_chart(GetParam());
  for (const auto& x : chart_domain_points(c, 50, 20)) {
    const auto j = c.inverse_t(seed_coordinates(x));
    const Vec4 u = c.inverse(x);
    for (int a = 0; a < 4; ++a) EXPECT_NEAR(j[a].value(), u[a], 1e-14 * (1.0 + std::fabs(u[a])));
  }
}

INSTANTIATE_TEST_SUITE_P(AllCharts, ChartSuite, ::testing::ValuesIn(kAllCharts), [](const auto& info) {
  std::string s(chart_name(info.param));
  for (char& ch : s)
    if (ch == '-') ch = '_';
  return s;
});

TEST(Charts, NullRotationPairExample) {
  // x~1 = x2 + x4, x~4 = x1^2 + x2^2 + x3^2 - x4^2
  const Chart c(ChartKind::NullRotationPair);
  const Vec4 u = c.inverse({1.0, 1.0, 0.0, 1.0});
  EXPECT_DOUBLE_EQ(u[0], 2.0);
  EXPECT_DOUBLE_EQ(u[3], 1.0);
}

TEST(Charts, OutOfDomainThrows) {
  const Chart c(ChartKind::NullRotationPair);
  EXPECT_THROW(c.inverse({0.0, 1.0, 0.0, -1.0}), OutOfDomain);
}

TEST(Charts, ParameterConstraints) {
  EXPECT_THROW(Chart(ChartKind::Birotation, 0.0), ParamConstraint);
  EXPECT_THROW(Chart(ChartKind::ParabolicB, 0.5, 0.0), ParamConstraint);
  EXPECT_NO_THROW(Chart(ChartKind::Birotation, 0.5));
}

} // namespace
