#include "catalog_build.hpp"

namespace minkpot::build {

namespace {

using namespace gen;

using A1Arg = std::array<Jet2, 1>;

ClassEntry translations_3d(char variant) {
  ClassEntry e = potential_entry(3, 1, variant, "");
  switch (variant) {
  case 'a':
    e.summary = "A depends on x4 only";
    e.generator_labels = {"e1", "e2", "e3"};
    e.generators = fixed({e1, e2, e3});
    e.slots = four_slots(1, "x4");
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return free_components(s, [](const JetPoint& x) { return A1Arg{x[3]}; });
    };
    break;
  case 'b':
    e.summary = "A depends on x3 only";
    e.generator_labels = {"e1", "e2", "e4"};
    e.generators = fixed({e1, e2, e4});
    e.slots = four_slots(1, "x3");
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return free_components(s, [](const JetPoint& x) { return A1Arg{x[2]}; });
    };
    break;
  default:
    e.summary = "A depends on x2-x4 only";
    e.generator_labels = {"e1", "e3", "e2+e4"};
    e.generators = fixed({e1, e3, e2 + e4});
    e.chart = ChartKind::Isotropic;
    e.slots = four_slots(1, "x2-x4");
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return free_components(s, [](const JetPoint& x) { return A1Arg{x[1] - x[3]}; });
    };
    break;
  }
  return e;
}

// Classes built on the pair e12 - e14, e23 + e34 and its chart.
template <class F>
Components null_pair(const SlotSet& s, std::vector<std::string> labels, F shape) {
  std::vector<FunctionSlot> f;
  for (const auto& l : labels) f.push_back(s.at(l));
  return [f = std::move(f), shape](const JetPoint& x) {
    const auto u = Chart(ChartKind::NullRotationPair).inverse_t(x);
    const auto [phi, psi, xi, theta] = shape(u, f);
    return null_pair_form(u[1], u[2], phi, psi, xi, theta);
  };
}

ClassEntry pair_entry(int index, char variant, std::string summary) {
  ClassEntry e = potential_entry(3, index, variant, std::move(summary));
  e.chart = ChartKind::NullRotationPair;
  e.domain = domain_of(s_positive);
  return e;
}

using Quad = std::array<Jet2, 4>;

} // namespace

void register_dim3(std::vector<ClassEntry>& out) {
  out.push_back(translations_3d('a'));
  out.push_back(translations_3d('b'));
  out.push_back(translations_3d('c'));
  {
    ClassEntry e = potential_entry(3, 2, 0, "elliptic helices plus translations in x1, x3");
    e.generator_labels = {"e13+λe2", "e1", "e3"};
    e.params = {lambda_p(ParamRule::Branch)};
    e.branch_param = "lambda";
    e.slots = {{"C1", 1, "x4", SlotBranch::NonZeroBranch},
               {"C2", 1, "x4", SlotBranch::NonZeroBranch},
               {"A2", 1, "x4", SlotBranch::NonZeroBranch},
               {"A4", 1, "x4", SlotBranch::NonZeroBranch},
               {"A2", 2, "x2, x4", SlotBranch::ZeroBranch},
               {"A4", 2, "x2, x4", SlotBranch::ZeroBranch}};
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e2, e1, e3}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const FunctionSlot a2 = s.at("A2"), a4 = s.at("A4");
      if (l == 0.0)
        return [=](const JetPoint& x) { return Comp{0.0, a2(x[1], x[3]), 0.0, a4(x[1], x[3])}; };
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2");
      return [=](const JetPoint& x) {
        return rotating_pair(c1(x[3]), c2(x[3]), a2(x[3]), a4(x[3]), x[1] / l);
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 3, 0, "elliptic helices with time-like axis plus translations");
    e.generator_labels = {"e13+μe4", "e1", "e3"};
    e.params = {mu_p(ParamRule::NonZero)};
    e.slots = c_slots(1, "x2", {"C1", "C2", "A2", "A4"});
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("mu") * e4, e1, e3}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double m = p.at("mu");
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), a2 = s.at("A2"), a4 = s.at("A4");
      return [=](const JetPoint& x) {
        return rotating_pair(c1(x[1]), c2(x[1]), a2(x[1]), a4(x[1]), x[3] / m);
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 4, 0, "elliptic helices with isotropic axis; u = x2+x4, v = x2-x4");
    e.generator_labels = {"e13+λ(e2+e4)", "e1", "e3"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::Isotropic;
    e.slots = c_slots(1, "v", {"C1", "C2", "A2", "A4"});
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * (e2 + e4), e1, e3}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), a2 = s.at("A2"), a4 = s.at("A4");
      return [=](const JetPoint& x) {
        const Jet2 u = x[1] + x[3], v = x[1] - x[3];
        return rotating_pair(c1(v), c2(v), a2(v), a4(v), u / (2.0 * l));
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 5, 0, "pseudo-rotations in x2, x4 plus translations in x1, x3");
    e.generator_labels = {"e24", "e1", "e3"};
    e.chart = ChartKind::Hyperbolic;
    e.slots = c_slots(1, "rho", {"A1", "C1", "C2", "A3"});
    e.generators = fixed({e24, e1, e3});
    e.domain = domain_of(timelike_sector);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot a1 = s.at("A1"), c1 = s.at("C1"), c2 = s.at("C2"), a3 = s.at("A3");
      return [=](const JetPoint& x) {
        const auto u = Chart(ChartKind::Hyperbolic).inverse_t(x); // x1, rho, x3, phi
        return boosted_pair(a1(u[1]), c1(u[1]), c2(u[1]), a3(u[1]), u[3]);
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 6, 0, "hyperbolic helices plus translations in x2, x4");
    e.generator_labels = {"e24+λe3", "e2", "e4"};
    e.params = {lambda_p(ParamRule::Branch)};
    e.branch_param = "lambda";
    e.slots = {{"A1", 1, "x1", SlotBranch::NonZeroBranch},
               {"C1", 1, "x1", SlotBranch::NonZeroBranch},
               {"C2", 1, "x1", SlotBranch::NonZeroBranch},
               {"A3", 1, "x1", SlotBranch::NonZeroBranch},
               {"A1", 2, "x1, x3", SlotBranch::ZeroBranch},
               {"A3", 2, "x1, x3", SlotBranch::ZeroBranch}};
    e.generators = [](const ParamMap& p) { return Gens{e24 + p.at("lambda") * e3, e2, e4}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const FunctionSlot a1 = s.at("A1"), a3 = s.at("A3");
      if (l == 0.0)
        return [=](const JetPoint& x) { return Comp{a1(x[0], x[2]), 0.0, a3(x[0], x[2]), 0.0}; };
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2");
      return [=](const JetPoint& x) {
        return boosted_pair(a1(x[0]), c1(x[0]), c2(x[0]), a3(x[0]), x[2] / l);
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 7, 0, "hyperbolic helices plus isotropic translations; u = x3~ - λ ln r");
    e.generator_labels = {"e24+λe3", "e1", "e2-e4"};
    e.params = {lambda_p()};
    e.chart = ChartKind::HyperbolicShift3;
    e.slots = c_slots(1, "u", {"A1", "A3", "a1", "a2"});
    e.generators = [](const ParamMap& p) { return Gens{e24 + p.at("lambda") * e3, e1, e2 - e4}; };
    e.domain = domain_of(timelike_sector);
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const Chart c(ChartKind::HyperbolicShift3, l);
      const FunctionSlot a1 = s.at("A1"), a3 = s.at("A3"), b1 = s.at("a1"), b2 = s.at("a2");
      return [=](const JetPoint& x) {
        const auto w = c.inverse_t(x); // x1, r, x3~, phi
        const Jet2 lr = log(w[1]);
        const Jet2 u = w[2] - l * lr;
        const Jet2 k1 = b1(u), k2 = b2(u);
        const Jet2 chl = cosh(lr), shl = sinh(lr);
        return boosted_pair(a1(u), k1 * chl + k2 * shl, k1 * shl + k2 * chl, a3(u), w[3]);
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 8, 0, "parabolic helices plus isotropic translations; slots of x1~");
    e.generator_labels = {"e12-e14+λe2", "e3", "e2-e4"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicC;
    e.slots = c_slots(1, "x1~", {"C1", "C2", "C3", "A3"});
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14 + p.at("lambda") * e2, e3, e2 - e4}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const Chart c(ChartKind::ParabolicC, p.at("lambda"));
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), c3 = s.at("C3"), a3 = s.at("A3");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x);
        return null_rotation_form(u[1], c1(u[0]), c2(u[0]), c3(u[0]), a3(u[0]));
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 9, 'a', "A1 = 0, A2 = A4; functions of x2+x4 and x3");
    e.generator_labels = {"e12-e14", "e1", "e2-e4"};
    e.slots = c_slots(2, "x2+x4, x3", {"C1", "A3"});
    e.generators = fixed({e12 - e14, e1, e2 - e4});
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot c1 = s.at("C1"), a3 = s.at("A3");
      return [=](const JetPoint& x) {
        const Jet2 c = c1(s_of(x), x[2]);
        return Comp{0.0, c, a3(s_of(x), x[2]), c};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 9, 'b', "parabolic chart b; C_k quadratic in x3~");
    e.generator_labels = {"e12-e14+μe3", "e1", "e2-e4"};
    e.params = {mu_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicB;
    e.slots = c_slots(1, "x1~", {"Phi", "Psi", "Xi", "A3"});
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14 + p.at("mu") * e3, e1, e2 - e4}; };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double m = p.at("mu");
      const Chart c(ChartKind::ParabolicB, 0.0, m);
      const FunctionSlot f = s.at("Phi"), g = s.at("Psi"), h = s.at("Xi"), a3 = s.at("A3");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x);
        const Jet2 phi = f(u[0]), psi = g(u[0]), xi = h(u[0]);
        const Jet2 q = u[2] / m;
        const Jet2 c1 = 0.5 * q * q * phi + q * psi + xi;
        return null_rotation_form(u[1], c1, phi, q * phi + psi, a3(u[0]));
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 9, 'c', "parabolic chart c; slots of x3");
    e.generator_labels = {"e12-e14+λe2", "e1", "e2-e4"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicC;
    e.slots = c_slots(1, "x3", {"C1", "C2", "C3", "A3"});
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14 + p.at("lambda") * e2, e1, e2 - e4}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), c3 = s.at("C3"), a3 = s.at("A3");
      return [=](const JetPoint& x) {
        const Jet2 t = s_of(x) / l;
        return null_rotation_form(t, c1(x[2]), c2(x[2]), c3(x[2]), a3(x[2]));
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 10, 'a', "parabolic chart c; slots of μ x1~ - 2λ x3");
    e.generator_labels = {"e12-e14+λe2", "e1+μe3", "e2-e4"};
    e.params = {lambda_p(ParamRule::NonZero), mu_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicC;
    e.slots = c_slots(1, "μx1~-2λx3~", {"C1", "C2", "C3", "A3"});
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14 + p.at("lambda") * e2, e1 + p.at("mu") * e3, e2 - e4};
    };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda"), m = p.at("mu");
      const Chart c(ChartKind::ParabolicC, l);
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), c3 = s.at("C3"), a3 = s.at("A3");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x);
        const Jet2 w = m * u[0] - 2.0 * l * u[2];
        return null_rotation_form(u[1], c1(w), c2(w), c3(w), a3(w));
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 10, 'b', "parabolic chart a; C_k quadratic in x3/(μ x1~)");
    e.generator_labels = {"e12-e14", "e1+μe3", "e2-e4"};
    e.params = {mu_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicA;
    e.slots = c_slots(1, "x1~", {"Phi", "Psi", "Xi", "A3"});
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14, e1 + p.at("mu") * e3, e2 - e4}; };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double m = p.at("mu");
      const FunctionSlot f = s.at("Phi"), g = s.at("Psi"), h = s.at("Xi"), a3 = s.at("A3");
      return [=](const JetPoint& x) {
        const auto u = Chart(ChartKind::ParabolicA).inverse_t(x);
        const Jet2 phi = f(u[0]), psi = g(u[0]), xi = h(u[0]);
        const Jet2 q = u[2] / (m * u[0]);
        const Jet2 c1 = 0.5 * q * q * phi + q * psi + xi;
        return null_rotation_form(u[1], c1, phi, q * phi + psi, a3(u[0]));
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 11, 0, "bi-rotations plus translations in x1, x3; slots of rho");
    e.generator_labels = {"e13+λe24", "e1", "e3"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::Birotation;
    e.slots = c_slots(1, "rho", {"C1", "C2", "C3", "C4"});
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e24, e1, e3}; };
    e.domain = domain_of(timelike_sector);
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), c3 = s.at("C3"), c4 = s.at("C4");
      return [=](const JetPoint& x) {
        const Jet2 rho = sqrt(x[1] * x[1] - x[3] * x[3]);
        const Jet2 lphi = 0.5 * (log(x[1] + x[3]) - log(x[1] - x[3])); // λ φ
        const Jet2 phi = lphi / l;
        const Jet2 k1 = c1(rho), k2 = c2(rho), k3 = c3(rho), k4 = c4(rho);
        const Jet2 cp = cos(phi), sp = sin(phi), ch = cosh(lphi), sh = sinh(lphi);
        return Comp{k1 * cp + k2 * sp, k3 * ch + k4 * sh, -k1 * sp + k2 * cp, -k3 * sh - k4 * ch};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 12, 0, "bi-rotations plus translations in x2, x4; slots of r");
    e.generator_labels = {"e13+λe24", "e2", "e4"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::Birotation;
    e.slots = c_slots(1, "r", {"a1", "a2", "a3", "a4"});
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e24, e2, e4}; };
    e.domain = domain_of([](const SpacetimePoint& x) {
      return r13_positive(x) && !(x[0] < 0.0 && std::fabs(x[2]) < kM);
    });
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const FunctionSlot f1 = s.at("a1"), f2 = s.at("a2"), f3 = s.at("a3"), f4 = s.at("a4");
      return [=](const JetPoint& x) {
        const Jet2 r = sqrt(x[0] * x[0] + x[2] * x[2]);
        const Jet2 a = atan2(x[2], x[0]); // theta - phi
        const Jet2 k1 = f1(r), k2 = f2(r), k3 = f3(r), k4 = f4(r);
        const Jet2 sa = sin(a), ca = cos(a), sh = sinh(l * a), ch = cosh(l * a);
        return Comp{k1 * sa + k2 * ca, k3 * sh + k4 * ch, -k1 * ca + k2 * sa, k3 * ch + k4 * sh};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 13, 0, "rotations, pseudo-rotations and an isotropic translation");
    e.generator_labels = {"e13", "e24", "e2-e4"};
    e.chart = ChartKind::Birotation;
    e.slots = c_slots(1, "r", {"t1", "t2", "C", "D"});
    e.generators = fixed({e13, e24, e2 - e4});
    e.domain = [](const ParamMap&) { return chart_domain(Chart(ChartKind::Birotation, 1.0)); };
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const Chart c(ChartKind::Birotation, 1.0);
      const FunctionSlot t1 = s.at("t1"), t2 = s.at("t2"), fc = s.at("C"), fd = s.at("D");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x); // r, rho, theta, phi
        const Jet2 a = u[2] - u[3];
        const Jet2 v1 = t1(u[0]), v2 = t2(u[0]);
        const Jet2 cp = u[1] * fc(u[0]) * exp(u[3]);
        const Jet2 dm = fd(u[0]) / u[1] * exp(-u[3]);
        const Jet2 ca = cos(a), sa = sin(a);
        return Comp{-v1 * sa + v2 * ca, cp + dm, v1 * ca + v2 * sa, -cp + dm};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 14, 0, "two parabolic helices and an isotropic translation");
    e.generator_labels = {"e12-e14+λe1+μe3", "e23+e34+νe1+λe3", "e2-e4"};
    e.params = {lambda_p(), mu_p(), nu_p()};
    e.chart = ChartKind::Helix;
    e.slots = c_slots(1, "u", {"C1", "C3"});
    e.generators = [](const ParamMap& p) {
      const double l = p.at("lambda"), m = p.at("mu"), n = p.at("nu");
      return Gens{e12 - e14 + l * e1 + m * e3, e23 + e34 + n * e1 + l * e3, e2 - e4};
    };
    e.domain = [](const ParamMap& p) {
      return chart_domain(Chart(ChartKind::Helix, p.at("lambda"), p.at("mu"), p.at("nu")));
    };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const Chart c(ChartKind::Helix, p.at("lambda"), p.at("mu"), p.at("nu"));
      const FunctionSlot c1 = s.at("C1"), c3 = s.at("C3");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x); // u, phi, psi, w
        const Jet2 k3 = c3(u[0]);
        const Jet2 a2 = u[2] * k3 + c1(u[0]);
        return Comp{k3, a2, 0.0, a2};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 15, 0, "parabolic rotations, pseudo-rotations and e3; slots of v");
    e.generator_labels = {"e12-e14", "e24", "e3"};
    e.chart = ChartKind::ParabolicLog;
    e.slots = c_slots(1, "v", {"Phi1", "Phi2", "Phi3", "Phi4"});
    e.generators = fixed({e12 - e14, e24, e3});
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot f1 = s.at("Phi1"), f2 = s.at("Phi2"), f3 = s.at("Phi3"), f4 = s.at("Phi4");
      return [=](const JetPoint& x) {
        const auto w = Chart(ChartKind::ParabolicLog, 0.0).inverse_t(x); // x1~, x2~, u, v
        const Jet2 p1 = f1(w[3]), p2 = f2(w[3]), p3 = f3(w[3]), p4 = f4(w[3]);
        const Jet2& t1 = w[0];
        const Jet2& t2 = w[1];
        const Jet2 common = t2 * p3 + p2 / t1;
        return Comp{t1 * t2 * p1 + p3, 0.5 * t1 * (t2 * t2 - 1.0) * p1 + common, p4,
                    0.5 * t1 * (t2 * t2 + 1.0) * p1 + common};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 16, 0, "parabolic rotations, hyperbolic helices, isotropic translation");
    e.generator_labels = {"e12-e14", "e24+λe1+μe3", "e2-e4"};
    e.params = {lambda_p(), mu_p()};
    e.chart = ChartKind::ParabolicLogShift;
    e.slots = c_slots(1, "u", {"Phi1", "Phi2", "Phi3", "Phi4"});
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e24 + p.at("lambda") * e1 + p.at("mu") * e3, e2 - e4};
    };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const Chart c(ChartKind::ParabolicLogShift, 0.0, p.at("mu"));
      const FunctionSlot f1 = s.at("Phi1"), f2 = s.at("Phi2"), f3 = s.at("Phi3"), f4 = s.at("Phi4");
      return [=](const JetPoint& x) {
        const auto w = c.inverse_t(x); // v, x2~, u, x4~
        const Jet2& v = w[0];
        const Jet2 p1 = f1(w[2]), p2 = f2(w[2]), p3 = f3(w[2]);
        const Jet2 ev = exp(v), emv = exp(-v);
        const Jet2 c1 = p3 * emv - 0.5 * p1 * ev + v * emv * (0.5 * l * l * v * p1 + l * p2);
        const Jet2 c2 = p1 * ev;
        const Jet2 c3 = l * v * p1 + p2;
        return null_rotation_form(w[1], c1, c2, c3, f4(w[2]));
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = pair_entry(17, 0, "two parabolic rotations and e24; slots of x4~");
    e.generator_labels = {"e12-e14", "e23+e34", "e24"};
    e.slots = c_slots(1, "x4~", {"C1", "C2", "C3", "C4"});
    e.generators = fixed({e12 - e14, e23 + e34, e24});
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return null_pair(s, {"C1", "C2", "C3", "C4"}, [](const auto& u, const auto& f) {
        const Jet2 k1 = f[0](u[3]);
        return Quad{u[0] * k1, f[1](u[3]), f[2](u[3]), 0.5 * u[0] * k1 + f[3](u[3]) / u[0]};
      });
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = pair_entry(18, 'a', "two parabolic rotations and an isotropic elliptic helix");
    e.generator_labels = {"e12-e14", "e23+e34", "e13+λ(e2-e4)"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.slots = c_slots(1, "x1~", {"C1", "C2", "C3", "C4"});
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e23 + e34, e13 + p.at("lambda") * (e2 - e4)};
    };
    e.potential = [](const ParamMap& p, const SlotSet& s) {
      const double l = p.at("lambda");
      return null_pair(s, {"C1", "C2", "C3", "C4"}, [l](const auto& u, const auto& f) {
        const Jet2 a = u[3] / (2.0 * l * u[0]);
        const Jet2 k1 = f[0](u[0]), k2 = f[1](u[0]);
        const Jet2 ca = cos(a), sa = sin(a);
        return Quad{f[2](u[0]), k1 * ca + k2 * sa, -k1 * sa + k2 * ca, f[3](u[0])};
      });
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = pair_entry(18, 'b', "two parabolic rotations and e13");
    e.generator_labels = {"e12-e14", "e23+e34", "e13"};
    e.slots = c_slots(2, "x1~, x4~", {"Phi", "Theta"});
    e.generators = fixed({e12 - e14, e23 + e34, e13});
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return null_pair(s, {"Phi", "Theta"}, [](const auto& u, const auto& f) {
        return Quad{f[0](u[0], u[3]), 0.0, 0.0, f[1](u[0], u[3])};
      });
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = pair_entry(19, 0, "two parabolic rotations and a bi-rotation");
    e.generator_labels = {"e12-e14", "e23+e34", "e13+λe24"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.slots = c_slots(1, "x4~", {"C1", "C2", "C3", "C4"});
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14, e23 + e34, e13 + p.at("lambda") * e24}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) {
      const double l = p.at("lambda");
      return null_pair(s, {"C1", "C2", "C3", "C4"}, [l](const auto& u, const auto& f) {
        const Jet2 k1 = f[0](u[3]), k2 = f[1](u[3]), k3 = f[2](u[3]), k4 = f[3](u[3]);
        const Jet2 a = log(u[0]) / l;
        const Jet2 ca = cos(a), sa = sin(a);
        return Quad{u[0] * k1, k3 * ca + k4 * sa, -k3 * sa + k4 * ca, 0.5 * u[0] * k1 + k2 / u[0]};
      });
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 20, 0, "SO(3) rotations; A = (0, 0, 0, A4(rho, x4))");
    e.generator_labels = {"e12", "e13", "e23"};
    e.slots = {{"A4", 2, "rho, x4"}};
    e.generators = fixed({e12, e13, e23});
    e.domain = domain_of(rho3_positive);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot a4 = s.at("A4");
      return [=](const JetPoint& x) {
        const Jet2 rho = sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        return Comp{0.0, 0.0, 0.0, a4(rho, x[3])};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(3, 21, 0, "rotations and pseudo-rotations; A = (0, 0, A3(u, x3), 0)");
    e.generator_labels = {"e12", "e14", "e24"};
    e.slots = {{"A3", 2, "u, x3"}};
    e.generators = fixed({e12, e14, e24});
    e.domain = domain_of(u124_positive);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot a3 = s.at("A3");
      return [=](const JetPoint& x) {
        const Jet2 u = sqrt(x[0] * x[0] + x[1] * x[1] - x[3] * x[3]);
        return Comp{0.0, 0.0, a3(u, x[2]), 0.0};
      };
    };
    out.push_back(std::move(e));
  }
}

} // namespace minkpot::build
