#include "catalog_build.hpp"

namespace minkpot::build {

namespace {

using namespace gen;

std::vector<ParamSpec> konsts(std::initializer_list<const char*> names) {
  std::vector<ParamSpec> out;
  for (const char* n : names) out.push_back(konst(n));
  return out;
}

std::array<double, 4> four(const ParamMap& p, const char* prefix) {
  const std::string s(prefix);
  return {p.at(s + "1"), p.at(s + "2"), p.at(s + "3"), p.at(s + "4")};
}

// Branch classes over e12 - e14 + λ(e2 or e3). For λ≠0 with t = x3/λ or
// (x2+x4)/λ: A1 = C2 t + C3, A2 = C2 t^2 / 2 + C3 t + C4, A3 = C1, A4 = A2 + C2.
ClassEntry branch_null_rotation(int index, std::vector<std::string> labels, PoincareGenerator t1,
                                PoincareGenerator t2, PoincareGenerator t3, bool along_s) {
  ClassEntry e = potential_entry(4, index, 0, "");
  const std::string arg = along_s ? "x2+x4" : "x3";
  e.summary = "parabolic helices; constants C1..C4 for λ≠0, Φ(" + arg + "), Ψ(" + arg + ") for λ=0";
  e.generator_labels = std::move(labels);
  e.params = {lambda_p(ParamRule::Branch)};
  for (auto& k : konsts({"C1", "C2", "C3", "C4"})) e.params.push_back(k);
  e.branch_param = "lambda";
  e.slots = {{"Phi", 1, arg, SlotBranch::ZeroBranch}, {"Psi", 1, arg, SlotBranch::ZeroBranch}};
  e.generators = [=](const ParamMap& p) {
    return Gens{e12 - e14 + p.at("lambda") * (along_s ? e2 : e3), t1, t2, t3};
  };
  e.potential = [=](const ParamMap& p, const SlotSet& s) -> Components {
    const double l = p.at("lambda");
    if (l == 0.0) {
      const FunctionSlot phi = s.at("Phi"), psi = s.at("Psi");
      return [=](const JetPoint& x) {
        const Jet2 a = along_s ? s_of(x) : x[2];
        const Jet2 f = phi(a);
        return Comp{0.0, f, psi(a), f};
      };
    }
    const auto c = four(p, "C");
    return [=](const JetPoint& x) {
      const Jet2 t = (along_s ? s_of(x) : x[2]) / l;
      const Jet2 a2 = 0.5 * c[1] * t * t + c[2] * t + c[3];
      return Comp{c[1] * t + c[2], a2, Jet2(c[0]), a2 + c[1]};
    };
  };
  return e;
}

} // namespace

void register_dim4(std::vector<ClassEntry>& out) {
  {
    ClassEntry e = potential_entry(4, 1, 0, "all translations; constant potential");
    e.generator_labels = {"e1", "e2", "e3", "e4"};
    e.params = konsts({"A1", "A2", "A3", "A4"});
    e.generators = fixed({e1, e2, e3, e4});
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const auto a = four(p, "A");
      return [=](const JetPoint&) { return Comp{a[0], a[1], a[2], a[3]}; };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 2, 0, "elliptic helices with time-like axis plus spatial translations");
    e.generator_labels = {"e13+μe4", "e1", "e2", "e3"};
    e.params = {mu_p(ParamRule::NonZero)};
    for (auto& k : konsts({"C1", "C2", "C3", "C4"})) e.params.push_back(k);
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("mu") * e4, e1, e2, e3}; };
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const double m = p.at("mu");
      const auto c = four(p, "C");
      return [=](const JetPoint& x) { return rotating_pair(c[0], c[1], c[2], c[3], x[3] / m); };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 3, 0, "elliptic helices along e2 plus translations in x1, x3, x4");
    e.generator_labels = {"e13+λe2", "e1", "e3", "e4"};
    e.params = {lambda_p(ParamRule::Branch)};
    for (auto& k : konsts({"C1", "C2", "C3", "C4"})) e.params.push_back(k);
    e.branch_param = "lambda";
    e.slots = {{"A2", 1, "x2", SlotBranch::ZeroBranch}, {"A4", 1, "x2", SlotBranch::ZeroBranch}};
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e2, e1, e3, e4}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      if (l == 0.0) {
        const FunctionSlot a2 = s.at("A2"), a4 = s.at("A4");
        return [=](const JetPoint& x) { return Comp{0.0, a2(x[1]), 0.0, a4(x[1])}; };
      }
      const auto c = four(p, "C");
      return [=](const JetPoint& x) { return rotating_pair(c[0], c[1], c[2], c[3], x[1] / l); };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 4, 0, "elliptic helices along e2 plus translations in x1, x3, x2+x4");
    e.generator_labels = {"e13+λe2", "e1", "e3", "e2+e4"};
    e.params = {lambda_p(ParamRule::Branch)};
    for (auto& k : konsts({"C1", "C2", "C3", "C4"})) e.params.push_back(k);
    e.branch_param = "lambda";
    e.slots = {{"A2", 1, "x2-x4", SlotBranch::ZeroBranch}, {"A4", 1, "x2-x4", SlotBranch::ZeroBranch}};
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e2, e1, e3, e2 + e4}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      if (l == 0.0) {
        const FunctionSlot a2 = s.at("A2"), a4 = s.at("A4");
        return [=](const JetPoint& x) {
          const Jet2 d = d_of(x);
          return Comp{0.0, a2(d), 0.0, a4(d)};
        };
      }
      const auto c = four(p, "C");
      return [=](const JetPoint& x) { return rotating_pair(c[0], c[1], c[2], c[3], d_of(x) / l); };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 5, 0, "pseudo-rotations plus translations in x1, x3, x2+x4; d = x2-x4");
    e.generator_labels = {"e24", "e1", "e3", "e2+e4"};
    e.params = konsts({"C1", "C2", "C3", "C4"});
    e.generators = fixed({e24, e1, e3, e2 + e4});
    e.domain = domain_of(d_nonzero);
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const auto c = four(p, "C");
      return [=](const JetPoint& x) {
        const Jet2 d = d_of(x);
        return Comp{c[0], c[1] * d + c[3] / d, c[2], c[1] * d - c[3] / d};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 6, 0, "hyperbolic helices along e3 plus translations in x1, x2, x4");
    e.generator_labels = {"e24+λe3", "e1", "e2", "e4"};
    e.params = {lambda_p(ParamRule::Branch)};
    for (auto& k : konsts({"C1", "C2", "C3", "C4"})) e.params.push_back(k);
    e.branch_param = "lambda";
    e.slots = {{"A1", 1, "x3", SlotBranch::ZeroBranch}, {"A3", 1, "x3", SlotBranch::ZeroBranch}};
    e.generators = [](const ParamMap& p) { return Gens{e24 + p.at("lambda") * e3, e1, e2, e4}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      if (l == 0.0) {
        const FunctionSlot a1 = s.at("A1"), a3 = s.at("A3");
        return [=](const JetPoint& x) { return Comp{a1(x[2]), 0.0, a3(x[2]), 0.0}; };
      }
      const auto c = four(p, "C");
      return [=](const JetPoint& x) { return boosted_pair(c[0], c[1], c[3], c[2], x[2] / l); };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 7, 0, "bi-rotations plus translations in x1, x3, x2+x4; d = x2-x4 > 0");
    e.generator_labels = {"e13+λe24", "e1", "e3", "e2+e4"};
    e.params = {lambda_p(ParamRule::NonZero)};
    for (auto& k : konsts({"C1", "C2", "C3", "C4"})) e.params.push_back(k);
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e24, e1, e3, e2 + e4}; };
    e.domain = domain_of(d_positive);
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const double l = p.at("lambda");
      const auto c = four(p, "C");
      return [=](const JetPoint& x) {
        const Jet2 d = d_of(x);
        const Jet2 a = log(d) / l;
        const Jet2 ca = cos(a), sa = sin(a);
        return Comp{c[0] * ca + c[2] * sa, c[1] * d + c[3] / d, c[0] * sa - c[2] * ca, c[1] * d - c[3] / d};
      };
    };
    out.push_back(std::move(e));
  }
  out.push_back(branch_null_rotation(8, {"e12-e14+λe3", "e1", "e2", "e4"}, e1, e2, e4, false));
  out.push_back(branch_null_rotation(9, {"e12-e14+λe2", "e1", "e3", "e2-e4"}, e1, e3, e2 - e4, true));
  {
    ClassEntry e = potential_entry(4, 10, 0, "rotations in x1, x3 and pseudo-rotations plus translations in x1, x3");
    e.generator_labels = {"e13", "e24", "e1", "e3"};
    e.chart = ChartKind::Hyperbolic;
    e.slots = c_slots(1, "rho", {"C1", "C2"});
    e.generators = fixed({e13, e24, e1, e3});
    e.domain = domain_of(timelike_sector);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2");
      return [=](const JetPoint& x) {
        const auto u = Chart(ChartKind::Hyperbolic).inverse_t(x); // x1, rho, x3, phi
        return boosted_pair(0.0, c1(u[1]), c2(u[1]), 0.0, u[3]);
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 11, 0, "rotations in x1, x3 and pseudo-rotations plus translations in x2, x4");
    e.generator_labels = {"e13", "e24", "e2", "e4"};
    e.slots = c_slots(1, "r", {"C1", "C2"});
    e.generators = fixed({e13, e24, e2, e4});
    e.domain = domain_of(r13_positive);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot c1 = s.at("C1"), c2 = s.at("C2");
      return [=](const JetPoint& x) {
        // sin phi = x1 / r, cos phi = x3 / r
        const Jet2 r = sqrt(x[0] * x[0] + x[2] * x[2]);
        const Jet2 sp = x[0] / r, cp = x[2] / r;
        const Jet2 k1 = c1(r), k2 = c2(r);
        return Comp{k1 * sp + k2 * cp, 0.0, k1 * cp - k2 * sp, 0.0};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 12, 'a', "two parabolic rotations, e1 and e2-e4; slots of x2+x4 > 0");
    e.generator_labels = {"e12-e14", "e23+e34", "e1", "e2-e4"};
    e.slots = c_slots(1, "x2+x4", {"Phi", "Psi"});
    e.generators = fixed({e12 - e14, e23 + e34, e1, e2 - e4});
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot phi = s.at("Phi"), psi = s.at("Psi");
      return [=](const JetPoint& x) {
        const Jet2 u = s_of(x);
        const Jet2 g = psi(u);
        const Jet2 a2 = phi(u) - x[2] * g / u;
        return Comp{0.0, a2, g, a2};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 12, 'b', "parabolic rotation and parabolic helix; u = x3 - (x2+x4)^2/(2ν)");
    e.generator_labels = {"e12-e14", "e23+e34+νe2", "e1", "e2-e4"};
    e.params = {nu_p(ParamRule::NonZero)};
    e.slots = c_slots(1, "u", {"Phi", "Psi"});
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14, e23 + e34 + p.at("nu") * e2, e1, e2 - e4}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double n = p.at("nu");
      const FunctionSlot phi = s.at("Phi"), psi = s.at("Psi");
      return [=](const JetPoint& x) {
        const Jet2 w = s_of(x);
        const Jet2 u = x[2] - w * w / (2.0 * n);
        const Jet2 g = psi(u);
        const Jet2 a2 = phi(u) - w * g / n;
        return Comp{0.0, a2, g, a2};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 12, 'c', "parabolic helix and parabolic rotation; slots of x2+x4");
    e.generator_labels = {"e12-e14+μe3", "e23+e34", "e1", "e2-e4"};
    e.params = {mu_p(ParamRule::NonZero)};
    e.slots = c_slots(1, "x2+x4", {"Phi", "Psi"});
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14 + p.at("mu") * e3, e23 + e34, e1, e2 - e4}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double m = p.at("mu");
      const FunctionSlot phi = s.at("Phi"), psi = s.at("Psi");
      return [=](const JetPoint& x) {
        const Jet2 u = s_of(x);
        const Jet2 f = phi(u);
        const Jet2 a2 = x[2] * f / m + psi(u);
        return Comp{f, a2, -u * f / m, a2};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 12, 'd', "two parabolic helices; A = (0, A, 0, A)");
    e.generator_labels = {"e12-e14+μe3", "e23+e34+νe2", "e1", "e2-e4"};
    e.params = {mu_p(ParamRule::NonZero), nu_p(ParamRule::NonZero), konst("A")};
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14 + p.at("mu") * e3, e23 + e34 + p.at("nu") * e2, e1, e2 - e4};
    };
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const double a = p.at("A");
      return [=](const JetPoint&) { return Comp{0.0, a, 0.0, a}; };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 13, 0, "parabolic rotations, hyperbolic helices along e1, e3 and e2-e4");
    e.generator_labels = {"e12-e14", "e24+λe1", "e3", "e2-e4"};
    e.params = {lambda_p()};
    for (auto& k : konsts({"K1", "K2", "K3", "K4"})) e.params.push_back(k);
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14, e24 + p.at("lambda") * e1, e3, e2 - e4}; };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const double l = p.at("lambda");
      const auto k = four(p, "K");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x), ls = log(s);
        const Jet2 c1 = k[0] * s;
        const Jet2 c2 = k[0] * l * ls + k[1];
        const Jet2 c3 = (k[0] * l * l * ls * ls + 2.0 * k[1] * l * ls) / (2.0 * s) - 0.5 * k[0] * s + k[2] / s;
        // The x1^2 term needs 2 s^2; with 2 s the e12 - e14 condition fails.
        const Jet2 a2 = x[0] * x[0] * c1 / (2.0 * s * s) - x[0] * c2 / s + c3;
        return Comp{-x[0] * c1 / s + c2, a2, Jet2(k[3]), a2 + c1};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 14, 'a', "parabolic rotations, hyperbolic helices, e1+νe3 and e2-e4; w = x3 - νx1");
    e.generator_labels = {"e12-e14", "e24+λe3", "e1+νe3", "e2-e4"};
    e.params = {lambda_p(), nu_p(ParamRule::NonZero)};
    for (auto& k : konsts({"K1", "K2", "K3", "K4"})) e.params.push_back(k);
    e.generators = [](const ParamMap& p) {
      const double n = p.at("nu");
      return Gens{e12 - e14, e24 + p.at("lambda") * e3, e1 + n * e3, e2 - e4};
    };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const double l = p.at("lambda"), n = p.at("nu");
      const auto k = four(p, "K");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x), ls = log(s);
        const Jet2 t = (x[2] - n * x[0]) / (n * s);
        const Jet2 c1 = k[0] * s;
        const Jet2 c2 = -k[0] * l * ls / n + k[1];
        const Jet2 c3 = (k[0] * l * l * ls * ls - 2.0 * k[1] * l * n * ls) / (2.0 * n * n * s) - 0.5 * k[0] * s +
                        k[2] / s;
        const Jet2 a2 = 0.5 * t * t * c1 + t * c2 + c3;
        return Comp{t * c1 + c2, a2, Jet2(k[3]), a2 + c1};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 14, 'b', "parabolic rotations, hyperbolic helices, e1 and e2-e4; u = x3 - λ ln(x2+x4)");
    e.generator_labels = {"e12-e14", "e24+λe3", "e1", "e2-e4"};
    e.params = {lambda_p()};
    e.slots = c_slots(1, "u", {"Phi", "Psi"});
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14, e24 + p.at("lambda") * e3, e1, e2 - e4}; };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      const FunctionSlot phi = s.at("Phi"), psi = s.at("Psi");
      return [=](const JetPoint& x) {
        const Jet2 w = s_of(x);
        const Jet2 u = x[2] - l * log(w);
        const Jet2 a2 = phi(u) / w;
        return Comp{0.0, a2, psi(u), a2};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 15, 0, "two parabolic rotations, hyperbolic helices along e1 and e2-e4");
    e.generator_labels = {"e12-e14", "e23+e34", "e24+λe1", "e2-e4"};
    e.params = {lambda_p()};
    for (auto& k : konsts({"K1", "K2", "K3", "K4"})) e.params.push_back(k);
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e23 + e34, e24 + p.at("lambda") * e1, e2 - e4};
    };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const double l = p.at("lambda");
      const auto k = four(p, "K");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x), ls = log(s);
        const Jet2 c1 = k[0] * s;
        const Jet2 c2 = -k[0] * l * ls + k[1];
        const Jet2 c3 = Jet2(k[2]);
        const Jet2 c4 = (-k[0] * l * l * ls * ls + 2.0 * k[1] * l * ls) / (2.0 * s) + 0.5 * k[0] * s + k[3] / s;
        const Jet2 a2 = -(x[0] * x[0] + x[2] * x[2]) * c1 / (2.0 * s * s) - (x[0] * c2 + x[2] * c3) / s + c4;
        return Comp{x[0] * c1 / s + c2, a2, x[2] * c1 / s + c3, a2 - c1};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 16, 0, "two parabolic helices, e13 and e2-e4; A = (0, Φ, 0, Φ)(x2+x4)");
    e.generator_labels = {"e12-e14+λe3", "e23+e34+λe1", "e13", "e2-e4"};
    e.params = {lambda_p()};
    e.slots = c_slots(1, "x2+x4", {"Phi"});
    e.generators = [](const ParamMap& p) {
      const double l = p.at("lambda");
      return Gens{e12 - e14 + l * e3, e23 + e34 + l * e1, e13, e2 - e4};
    };
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot phi = s.at("Phi");
      return [=](const JetPoint& x) {
        const Jet2 f = phi(s_of(x));
        return Comp{0.0, f, 0.0, f};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 17, 0, "two parabolic rotations, a bi-rotation and e2-e4");
    e.generator_labels = {"e12-e14", "e23+e34", "e13+λe24", "e2-e4"};
    e.params = {lambda_p(ParamRule::NonZero)};
    for (auto& k : konsts({"K1", "K2", "K3", "K4"})) e.params.push_back(k);
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e23 + e34, e13 + p.at("lambda") * e24, e2 - e4};
    };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const double l = p.at("lambda");
      const auto k = four(p, "K");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x);
        const Jet2 a = log(s) / l;
        const Jet2 ca = cos(a), sa = sin(a);
        const Jet2 psi = k[2] * ca + k[3] * sa;
        const Jet2 xi = -k[2] * sa + k[3] * ca;
        const Jet2 a2 = -k[0] * (x[0] * x[0] + x[2] * x[2]) / (2.0 * s) - (x[0] * psi + x[2] * xi) / s +
                        0.5 * k[0] * s + k[1] / s;
        return Comp{k[0] * x[0] + psi, a2, k[0] * x[2] + xi, a2 - k[0] * s};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 18, 0, "SO(3) rotations and time translations; A = (0, 0, 0, A4(rho))");
    e.generator_labels = {"e12", "e13", "e23", "e4"};
    e.slots = {{"A4", 1, "rho"}};
    e.generators = fixed({e12, e13, e23, e4});
    e.domain = domain_of(rho3_positive);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot a4 = s.at("A4");
      return [=](const JetPoint& x) {
        const Jet2 rho = sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        return Comp{0.0, 0.0, 0.0, a4(rho)};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 19, 0, "SO(2,1) in x1, x2, x4 and e3; A = (0, 0, C(u), 0)");
    e.generator_labels = {"e12", "e14", "e24", "e3"};
    e.slots = {{"C", 1, "u"}};
    e.generators = fixed({e12, e14, e24, e3});
    e.domain = domain_of(u124_positive);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot c = s.at("C");
      return [=](const JetPoint& x) {
        const Jet2 u = sqrt(x[0] * x[0] + x[1] * x[1] - x[3] * x[3]);
        return Comp{0.0, 0.0, c(u), 0.0};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(4, 20, 0, "two parabolic rotations, e13 and e24; slots of x4~ = x1^2+x2^2+x3^2-x4^2");
    e.generator_labels = {"e12-e14", "e23+e34", "e13", "e24"};
    e.slots = c_slots(1, "x4~", {"C", "D"});
    e.generators = fixed({e12 - e14, e23 + e34, e13, e24});
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot fc = s.at("C"), fd = s.at("D");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x);
        const Jet2 q = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[3] * x[3];
        const Jet2 c = fc(q);
        const Jet2 a2 = 0.5 * c * (s - (x[0] * x[0] + x[2] * x[2]) / s) + fd(q) / s;
        return Comp{x[0] * c, a2, x[2] * c, a2 - s * c};
      };
    };
    out.push_back(std::move(e));
  }
}

} // namespace minkpot::build
