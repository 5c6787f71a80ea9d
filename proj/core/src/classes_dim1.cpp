#include "catalog_build.hpp"

namespace minkpot::build {

namespace {

using namespace gen;

// Null rotation classes of the e12 - e14 + ... family on one of the three
// parabolic charts. Slots C1, C2, C3, A3 depend on (x1~, x3~, x4~).
ClassEntry null_rotation_1d(char variant) {
  ClassEntry e = potential_entry(1, 4, variant, "null rotation; components quadratic in x2~");
  const std::string args = "x1~, x3~, x4~";
  e.slots = {{"C1", 3, args}, {"C2", 3, args}, {"C3", 3, args}, {"A3", 3, args}};
  switch (variant) {
  case 'a':
    e.generator_labels = {"e12-e14"};
    e.chart = ChartKind::ParabolicA;
    e.generators = fixed({e12 - e14});
    e.domain = domain_of(s_positive);
    break;
  case 'b':
    e.generator_labels = {"e12-e14+μe3"};
    e.params = {mu_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicB;
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14 + p.at("mu") * e3}; };
    e.domain = domain_of(s_positive);
    break;
  default:
    e.generator_labels = {"e12-e14+λe2"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicC;
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14 + p.at("lambda") * e2}; };
    break;
  }
  e.potential = [variant](const ParamMap& p, const SlotSet& s) -> Components {
    const Chart c = variant == 'a'   ? Chart(ChartKind::ParabolicA)
                    : variant == 'b' ? Chart(ChartKind::ParabolicB, 0.0, p.at("mu"))
                                     : Chart(ChartKind::ParabolicC, p.at("lambda"));
    const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), c3 = s.at("C3"), a3 = s.at("A3");
    return [=](const JetPoint& x) {
      const auto u = c.inverse_t(x);
      return null_rotation_form(u[1], c1(u[0], u[2], u[3]), c2(u[0], u[2], u[3]),
                                c3(u[0], u[2], u[3]), a3(u[0], u[2], u[3]));
    };
  };
  return e;
}

} // namespace

void register_dim1(std::vector<ClassEntry>& out) {
  {
    ClassEntry e = potential_entry(1, 1, 'a', "A independent of x1");
    e.generator_labels = {"e1"};
    e.generators = fixed({e1});
    e.slots = four_slots(3, "x2, x3, x4");
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return free_components(s, [](const JetPoint& x) { return std::array<Jet2, 3>{x[1], x[2], x[3]}; });
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(1, 1, 'b', "A independent of x4");
    e.generator_labels = {"e4"};
    e.generators = fixed({e4});
    e.slots = four_slots(3, "x1, x2, x3");
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return free_components(s, [](const JetPoint& x) { return std::array<Jet2, 3>{x[0], x[1], x[2]}; });
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(1, 1, 'c', "A depends on x1, x3, x2-x4");
    e.generator_labels = {"e2+e4"};
    e.generators = fixed({e2 + e4});
    e.chart = ChartKind::Isotropic;
    e.slots = four_slots(3, "x1, x3, x2-x4");
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return free_components(s, [](const JetPoint& x) {
        return std::array<Jet2, 3>{x[0], x[2], x[1] - x[3]};
      });
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(1, 2, 0, "(A1, A3) rotate with phi on the elliptic chart");
    e.generator_labels = {"e13+λe2+μe4"};
    e.params = {lambda_p(), mu_p()};
    e.chart = ChartKind::Elliptic;
    const std::string args = "r, x2~, x4~";
    e.slots = {{"C1", 3, args}, {"C2", 3, args}, {"A2", 3, args}, {"A4", 3, args}};
    e.generators = [](const ParamMap& p) {
      return Gens{e13 + p.at("lambda") * e2 + p.at("mu") * e4};
    };
    e.domain = [](const ParamMap& p) {
      return chart_domain(Chart(ChartKind::Elliptic, p.at("lambda"), p.at("mu")));
    };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const Chart c(ChartKind::Elliptic, p.at("lambda"), p.at("mu"));
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), a2 = s.at("A2"), a4 = s.at("A4");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x); // r, x2~, phi, x4~
        const Jet2 k1 = c1(u[0], u[1], u[3]), k2 = c2(u[0], u[1], u[3]);
        const Jet2 cp = cos(u[2]), sp = sin(u[2]);
        return Comp{k1 * cp + k2 * sp, a2(u[0], u[1], u[3]), -k1 * sp + k2 * cp,
                    a4(u[0], u[1], u[3])};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(1, 3, 0, "(A2, A4) boost with phi on the hyperbolic chart");
    e.generator_labels = {"e24+λe1"};
    e.params = {lambda_p()};
    e.chart = ChartKind::Hyperbolic;
    const std::string args = "x1~, r, x3";
    e.slots = {{"A1", 3, args}, {"A3", 3, args}, {"C1", 3, args}, {"C2", 3, args}};
    e.generators = [](const ParamMap& p) { return Gens{e24 + p.at("lambda") * e1}; };
    e.domain = domain_of(timelike_sector);
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const Chart c(ChartKind::Hyperbolic, p.at("lambda"));
      const FunctionSlot a1 = s.at("A1"), a3 = s.at("A3"), c1 = s.at("C1"), c2 = s.at("C2");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x); // x1~, r, x3, phi
        const Jet2 k1 = c1(u[0], u[1], u[2]), k2 = c2(u[0], u[1], u[2]);
        const Jet2 chp = cosh(u[3]), shp = sinh(u[3]);
        return Comp{a1(u[0], u[1], u[2]), k1 * chp + k2 * shp, a3(u[0], u[1], u[2]),
                    -k1 * shp - k2 * chp};
      };
    };
    out.push_back(std::move(e));
  }
  out.push_back(null_rotation_1d('a'));
  out.push_back(null_rotation_1d('b'));
  out.push_back(null_rotation_1d('c'));
  {
    ClassEntry e = potential_entry(1, 5, 0, "birotation: rotation in (x1,x3) with boost in (x2,x4)");
    e.generator_labels = {"e13+λe24"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::Birotation;
    const std::string args = "rho, r, theta";
    e.slots = {{"C1", 3, args}, {"C2", 3, args}, {"C3", 3, args}, {"C4", 3, args}};
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e24}; };
    e.domain = [](const ParamMap& p) {
      return chart_domain(Chart(ChartKind::Birotation, p.at("lambda")));
    };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const Chart c(ChartKind::Birotation, l);
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), c3 = s.at("C3"), c4 = s.at("C4");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x); // r, rho, theta, phi
        const Jet2 k1 = c1(u[1], u[0], u[2]), k2 = c2(u[1], u[0], u[2]);
        const Jet2 k3 = c3(u[1], u[0], u[2]), k4 = c4(u[1], u[0], u[2]);
        const Jet2 cp = cos(u[3]), sp = sin(u[3]);
        const Jet2 chp = cosh(l * u[3]), shp = sinh(l * u[3]);
        return Comp{k1 * cp + k2 * sp, k3 * chp + k4 * shp, -k1 * sp + k2 * cp,
                    -k3 * shp - k4 * chp};
      };
    };
    out.push_back(std::move(e));
  }
}

} // namespace minkpot::build
