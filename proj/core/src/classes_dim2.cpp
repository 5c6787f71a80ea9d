#include "catalog_build.hpp"

namespace minkpot::build {

namespace {

using namespace gen;

ClassEntry translations_2d(char variant) {
  ClassEntry e = potential_entry(2, 1, variant, "");
  switch (variant) {
  case 'a':
    e.summary = "A depends on x3, x4";
    e.generator_labels = {"e1", "e2"};
    e.generators = fixed({e1, e2});
    e.slots = four_slots(2, "x3, x4");
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return free_components(s, [](const JetPoint& x) { return std::array<Jet2, 2>{x[2], x[3]}; });
    };
    break;
  case 'b':
    e.summary = "A depends on x1, x3";
    e.generator_labels = {"e2", "e4"};
    e.generators = fixed({e2, e4});
    e.slots = four_slots(2, "x1, x3");
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return free_components(s, [](const JetPoint& x) { return std::array<Jet2, 2>{x[0], x[2]}; });
    };
    break;
  default:
    e.summary = "A depends on x3, x2-x4";
    e.generator_labels = {"e1", "e2+e4"};
    e.generators = fixed({e1, e2 + e4});
    e.chart = ChartKind::Isotropic;
    e.slots = four_slots(2, "x3, x2-x4");
    e.potential = [](const ParamMap&, const SlotSet& s) {
      return free_components(s, [](const JetPoint& x) { return std::array<Jet2, 2>{x[2], x[1] - x[3]}; });
    };
    break;
  }
  return e;
}

// Elliptic chart classes: A1 = C1 cos phi + C2 sin phi, A3 = -C1 sin phi + C2 cos phi,
// with C1, C2, A2, A4 functions of one pair of invariants picked by `args`.
template <class Args>
Components elliptic_components(const Chart& c, const SlotSet& s, Args args) {
  const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), a2 = s.at("A2"), a4 = s.at("A4");
  return [=](const JetPoint& x) {
    const auto u = c.inverse_t(x); // r, x2~, phi, x4~
    const auto v = args(u);
    const Jet2 k1 = c1.call(v), k2 = c2.call(v);
    const Jet2 cp = cos(u[2]), sp = sin(u[2]);
    return Comp{k1 * cp + k2 * sp, a2.call(v), -k1 * sp + k2 * cp, a4.call(v)};
  };
}

std::vector<SlotSpec> elliptic_slots(const std::string& args) {
  return {{"C1", 2, args}, {"C2", 2, args}, {"A2", 2, args}, {"A4", 2, args}};
}

ClassEntry null_rotation_2d(char variant) {
  ClassEntry e = potential_entry(2, 7, variant, "null rotation with e2-e4; slots of (x1~, x3~)");
  const std::string args = "x1~, x3~";
  e.slots = {{"C1", 2, args}, {"C2", 2, args}, {"C3", 2, args}, {"A3", 2, args}};
  switch (variant) {
  case 'a':
    e.generator_labels = {"e12-e14", "e2-e4"};
    e.chart = ChartKind::ParabolicA;
    e.generators = fixed({e12 - e14, e2 - e4});
    e.domain = domain_of(s_positive);
    break;
  case 'b':
    e.generator_labels = {"e12-e14+μe3", "e2-e4"};
    e.params = {mu_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicB;
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14 + p.at("mu") * e3, e2 - e4}; };
    e.domain = domain_of(s_positive);
    break;
  default:
    e.generator_labels = {"e12-e14+λe2", "e2-e4"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicC;
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14 + p.at("lambda") * e2, e2 - e4}; };
    break;
  }
  e.potential = [variant](const ParamMap& p, const SlotSet& s) -> Components {
    const Chart c = variant == 'a'   ? Chart(ChartKind::ParabolicA)
                    : variant == 'b' ? Chart(ChartKind::ParabolicB, 0.0, p.at("mu"))
                                     : Chart(ChartKind::ParabolicC, p.at("lambda"));
    const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), c3 = s.at("C3"), a3 = s.at("A3");
    return [=](const JetPoint& x) {
      const auto u = c.inverse_t(x);
      return null_rotation_form(u[1], c1(u[0], u[2]), c2(u[0], u[2]), c3(u[0], u[2]), a3(u[0], u[2]));
    };
  };
  return e;
}

} // namespace

void register_dim2(std::vector<ClassEntry>& out) {
  out.push_back(translations_2d('a'));
  out.push_back(translations_2d('b'));
  out.push_back(translations_2d('c'));
  {
    ClassEntry e = potential_entry(2, 2, 0, "elliptic chart with lambda = 0; slots of (r, x4~)");
    e.generator_labels = {"e13+μe4", "e2"};
    e.params = {mu_p()};
    e.chart = ChartKind::Elliptic;
    e.slots = elliptic_slots("r, x4~");
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("mu") * e4, e2}; };
    e.domain = [](const ParamMap& p) { return chart_domain(Chart(ChartKind::Elliptic, 0.0, p.at("mu"))); };
    e.potential = [](const ParamMap& p, const SlotSet& s) {
      return elliptic_components(Chart(ChartKind::Elliptic, 0.0, p.at("mu")), s,
                                 [](const auto& u) { return std::array<Jet2, 2>{u[0], u[3]}; });
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(2, 3, 0, "elliptic chart with mu = 0; slots of (r, x2~)");
    e.generator_labels = {"e13+λe2", "e4"};
    e.params = {lambda_p()};
    e.chart = ChartKind::Elliptic;
    e.slots = elliptic_slots("r, x2~");
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e2, e4}; };
    e.domain = [](const ParamMap& p) { return chart_domain(Chart(ChartKind::Elliptic, p.at("lambda"))); };
    e.potential = [](const ParamMap& p, const SlotSet& s) {
      return elliptic_components(Chart(ChartKind::Elliptic, p.at("lambda")), s,
                                 [](const auto& u) { return std::array<Jet2, 2>{u[0], u[1]}; });
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(2, 4, 0, "elliptic chart with mu = 0; slots of (r, x2~-x4~)");
    e.generator_labels = {"e13+λe2", "e2+e4"};
    e.params = {lambda_p()};
    e.chart = ChartKind::Elliptic;
    e.slots = elliptic_slots("r, x2~-x4~");
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e2, e2 + e4}; };
    e.domain = [](const ParamMap& p) { return chart_domain(Chart(ChartKind::Elliptic, p.at("lambda"))); };
    e.potential = [](const ParamMap& p, const SlotSet& s) {
      return elliptic_components(Chart(ChartKind::Elliptic, p.at("lambda")), s,
                                 [](const auto& u) { return std::array<Jet2, 2>{u[0], u[1] - u[3]}; });
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(2, 5, 0, "hyperbolic chart shifted along x3; slots of (r, x3~)");
    e.generator_labels = {"e24+λe3", "e1"};
    e.params = {lambda_p()};
    e.chart = ChartKind::HyperbolicShift3;
    const std::string args = "r, x3~";
    e.slots = {{"A1", 2, args}, {"A3", 2, args}, {"C1", 2, args}, {"C2", 2, args}};
    e.generators = [](const ParamMap& p) { return Gens{e24 + p.at("lambda") * e3, e1}; };
    e.domain = domain_of(timelike_sector);
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const Chart c(ChartKind::HyperbolicShift3, p.at("lambda"));
      const FunctionSlot a1 = s.at("A1"), a3 = s.at("A3"), c1 = s.at("C1"), c2 = s.at("C2");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x); // x1, r, x3~, phi
        const Jet2 k1 = c1(u[1], u[2]), k2 = c2(u[1], u[2]);
        const Jet2 chp = cosh(u[3]), shp = sinh(u[3]);
        return Comp{a1(u[1], u[2]), k1 * chp + k2 * shp, a3(u[1], u[2]), -k1 * shp - k2 * chp};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(2, 6, 0, "hyperbolic chart shifted along x3; w = x3~ - λ ln r");
    e.generator_labels = {"e24+λe3", "e2-e4"};
    e.params = {lambda_p()};
    e.chart = ChartKind::HyperbolicShift3;
    const std::string args = "x1, w";
    e.slots = {{"A1", 2, args}, {"A3", 2, args}, {"a1", 2, args}, {"a2", 2, args}};
    e.generators = [](const ParamMap& p) { return Gens{e24 + p.at("lambda") * e3, e2 - e4}; };
    e.domain = domain_of(timelike_sector);
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const Chart c(ChartKind::HyperbolicShift3, l);
      const FunctionSlot a1 = s.at("A1"), a3 = s.at("A3"), b1 = s.at("a1"), b2 = s.at("a2");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x); // x1, r, x3~, phi
        const Jet2 lr = log(u[1]);
        const Jet2 w = u[2] - l * lr;
        const Jet2 k1v = b1(u[0], w), k2v = b2(u[0], w);
        const Jet2 chl = cosh(lr), shl = sinh(lr);
        const Jet2 c1 = k1v * chl + k2v * shl;
        const Jet2 c2 = k1v * shl + k2v * chl;
        const Jet2 chp = cosh(u[3]), shp = sinh(u[3]);
        return Comp{a1(u[0], w), c1 * chp + c2 * shp, a3(u[0], w), -c1 * shp - c2 * chp};
      };
    };
    out.push_back(std::move(e));
  }
  out.push_back(null_rotation_2d('a'));
  out.push_back(null_rotation_2d('b'));
  out.push_back(null_rotation_2d('c'));
  {
    ClassEntry e = potential_entry(2, 8, 0, "parabolic chart c; slots of (x1~, x4~)");
    e.generator_labels = {"e12-e14+λe2", "e3"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicC;
    const std::string args = "x1~, x4~";
    e.slots = {{"C1", 2, args}, {"C2", 2, args}, {"C3", 2, args}, {"A3", 2, args}};
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14 + p.at("lambda") * e2, e3}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const Chart c(ChartKind::ParabolicC, p.at("lambda"));
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2"), c3 = s.at("C3"), a3 = s.at("A3");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x);
        return null_rotation_form(u[1], c1(u[0], u[3]), c2(u[0], u[3]), c3(u[0], u[3]), a3(u[0], u[3]));
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(2, 9, 0, "birotation chart; slots of (r, λθ + ln rho)");
    e.generator_labels = {"e13+λe24", "e2-e4"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::Birotation;
    const std::string args = "r, λθ+ln rho";
    e.slots = {{"Phi1", 2, args}, {"Phi2", 2, args}, {"Phi3", 2, args}};
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e24, e2 - e4}; };
    e.domain = [](const ParamMap& p) { return chart_domain(Chart(ChartKind::Birotation, p.at("lambda"))); };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const Chart c(ChartKind::Birotation, l);
      const FunctionSlot f1 = s.at("Phi1"), f2 = s.at("Phi2"), f3 = s.at("Phi3");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x); // r, rho, theta, phi
        const Jet2 lrho = log(u[1]);
        const Jet2 z = l * u[2] + lrho;
        const Jet2 p1 = f1(u[0], z), p2 = f2(u[0], z), p3 = f3(u[0], z);
        const Jet2 cb = cos(lrho / l), sb = sin(lrho / l);
        const Jet2 c1 = p1 * cb + p2 * sb;
        const Jet2 c2 = -p1 * sb + p2 * cb;
        const Jet2 cp = cos(u[3]), sp = sin(u[3]);
        const Jet2 a2 = u[1] * p3 * exp(l * u[3]);
        return Comp{c1 * cp + c2 * sp, a2, -c1 * sp + c2 * cp, -a2};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(2, 10, 0, "birotation chart with lambda = 1; slots of (r, rho)");
    e.generator_labels = {"e13", "e24"};
    e.chart = ChartKind::Birotation;
    const std::string args = "r, rho";
    e.slots = {{"t1", 2, args}, {"t2", 2, args}, {"t3", 2, args}, {"t4", 2, args}};
    e.generators = fixed({e13, e24});
    e.domain = [](const ParamMap&) { return chart_domain(Chart(ChartKind::Birotation, 1.0)); };
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const Chart c(ChartKind::Birotation, 1.0);
      const FunctionSlot t1 = s.at("t1"), t2 = s.at("t2"), t3 = s.at("t3"), t4 = s.at("t4");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x);
        const Jet2 a = u[2] - u[3];
        const Jet2 v1 = t1(u[0], u[1]), v2 = t2(u[0], u[1]), v3 = t3(u[0], u[1]), v4 = t4(u[0], u[1]);
        const Jet2 ca = cos(a), sa = sin(a), ep = exp(u[3]), em = exp(-u[3]);
        return Comp{-v1 * sa + v2 * ca, v3 * ep + v4 * em, v1 * ca + v2 * sa, -v3 * ep + v4 * em};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(2, 11, 0, "parabolic chart b followed by (u, v); lambda = 0 branch");
    e.generator_labels = {"e12-e14+λe1+μe3", "e23+e34-μe1+λe3"};
    e.params = {lambda_p(ParamRule::Zero), mu_p(ParamRule::NonZero)};
    e.chart = ChartKind::ParabolicPairB;
    const std::string args = "x1~, v";
    e.slots = {{"Phi", 2, args}, {"C1", 2, args}, {"C2", 2, args}, {"C3", 2, args}};
    e.generators = [](const ParamMap& p) {
      const double l = p.at("lambda"), m = p.at("mu");
      return Gens{e12 - e14 + l * e1 + m * e3, e23 + e34 - m * e1 + l * e3};
    };
    e.domain = [](const ParamMap& p) {
      return chart_domain(Chart(ChartKind::ParabolicPairB, 0.0, p.at("mu")));
    };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double m = p.at("mu");
      const Chart c(ChartKind::ParabolicPairB, 0.0, m);
      const FunctionSlot fphi = s.at("Phi"), fc1 = s.at("C1"), fc2 = s.at("C2"), fc3 = s.at("C3");
      return [=](const JetPoint& x) {
        const auto w = c.inverse_t(x); // x1~, x2~, u, v
        const Jet2& t1 = w[0];
        const Jet2& t2 = w[1];
        const Jet2& uu = w[2];
        const Jet2 phi = fphi(t1, w[3]), c1 = fc1(t1, w[3]), c2 = fc2(t1, w[3]), c3 = fc3(t1, w[3]);
        const Jet2 psi = -(m * uu / t1) * phi + c1;
        const Jet2 ups = -phi * uu + c2;
        const Jet2 xi = ((m * m + t1 * t1) / (2.0 * t1 * t1)) * phi * uu * uu -
                        ((m * c1 + t1 * c2) / t1) * uu + c3;
        const Jet2 a2 = 0.5 * phi * t2 * t2 + psi * t2 + xi;
        return Comp{phi * t2 + psi, a2, ups, a2 + phi};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(2, 11, 'a', "pair of commuting null rotations; slots of (x1~, x4~)");
    e.generator_labels = {"e12-e14", "e23+e34"};
    e.chart = ChartKind::NullRotationPair;
    const std::string args = "x1~, x4~";
    e.slots = {{"Phi", 2, args}, {"Psi", 2, args}, {"Xi", 2, args}, {"Theta", 2, args}};
    e.generators = fixed({e12 - e14, e23 + e34});
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const Chart c(ChartKind::NullRotationPair);
      const FunctionSlot f = s.at("Phi"), g = s.at("Psi"), h = s.at("Xi"), k = s.at("Theta");
      return [=](const JetPoint& x) {
        const auto u = c.inverse_t(x);
        return null_pair_form(u[1], u[2], f(u[0], u[3]), g(u[0], u[3]), h(u[0], u[3]), k(u[0], u[3]));
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(2, 12, 0, "parabolic chart a followed by (u, v)");
    e.generator_labels = {"e12-e14", "e24+λe3"};
    e.params = {lambda_p()};
    e.chart = ChartKind::ParabolicLog;
    const std::string args = "u, v";
    e.slots = {{"Phi1", 2, args}, {"Phi2", 2, args}, {"Phi3", 2, args}, {"Phi4", 2, args}};
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14, e24 + p.at("lambda") * e3}; };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const Chart c(ChartKind::ParabolicLog, p.at("lambda"));
      const FunctionSlot f1 = s.at("Phi1"), f2 = s.at("Phi2"), f3 = s.at("Phi3"), f4 = s.at("Phi4");
      return [=](const JetPoint& x) {
        const auto w = c.inverse_t(x); // x1~, x2~, u, v
        const Jet2 p1 = f1(w[2], w[3]), p2 = f2(w[2], w[3]), p3 = f3(w[2], w[3]), p4 = f4(w[2], w[3]);
        const Jet2& t1 = w[0];
        const Jet2& t2 = w[1];
        const Jet2 common = t2 * p3 + p2 / t1;
        return Comp{t1 * t2 * p1 + p3, 0.5 * t1 * (t2 * t2 - 1.0) * p1 + common, p4,
                    0.5 * t1 * (t2 * t2 + 1.0) * p1 + common};
      };
    };
    out.push_back(std::move(e));
  }
}

} // namespace minkpot::build
