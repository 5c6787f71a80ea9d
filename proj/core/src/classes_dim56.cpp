#include "catalog_build.hpp"

namespace minkpot::build {

namespace {

using namespace gen;

ClassEntry constant_entry(int dim, int index, std::string summary, std::vector<std::string> labels,
                          Gens gens, std::vector<std::string> names, std::function<Comp(const ParamMap&)> value) {
  ClassEntry e = potential_entry(dim, index, 0, std::move(summary));
  e.generator_labels = std::move(labels);
  for (const auto& n : names) e.params.push_back(konst(n));
  e.generators = fixed(std::move(gens));
  e.potential = [value](const ParamMap& p, const SlotSet&) -> Components {
    const Comp a = value(p);
    return [a](const JetPoint&) { return a; };
  };
  return e;
}

ClassEntry empty_entry(int dim, int index, std::string summary, std::vector<std::string> labels) {
  ClassEntry e = potential_entry(dim, index, 0, std::move(summary));
  e.generator_labels = std::move(labels);
  e.empty = true;
  return e;
}

// A = (0, Φ(x2+x4), 0, Φ(x2+x4)).
Components isotropic_phi(const SlotSet& s) {
  const FunctionSlot phi = s.at("Phi");
  return [=](const JetPoint& x) {
    const Jet2 f = phi(s_of(x));
    return Comp{0.0, f, 0.0, f};
  };
}

// A = (0, B/(x2+x4), C, B/(x2+x4)).
Components inverse_s(double b, double c) {
  return [=](const JetPoint& x) {
    const Jet2 a = b / s_of(x);
    return Comp{0.0, a, Jet2(c), a};
  };
}

} // namespace

void register_dim56(std::vector<ClassEntry>& out) {
  // (0, A, 0, B) as printed is not invariant under e24: that condition forces
  // A2 = A4 = 0.
  out.push_back(constant_entry(5, 1, "pseudo-rotations and all translations; A = (A, 0, B, 0)",
                               {"e24", "e1", "e2", "e3", "e4"}, {e24, e1, e2, e3, e4}, {"A", "B"},
                               [](const ParamMap& p) { return Comp{p.at("A"), 0.0, p.at("B"), 0.0}; }));
  {
    ClassEntry e = empty_entry(5, 2, "bi-rotations and all translations; empty", {"e13+λe24", "e1", "e2", "e3", "e4"});
    e.params = {lambda_p(ParamRule::NonZero)};
    e.generators = [](const ParamMap& p) { return Gens{e13 + p.at("lambda") * e24, e1, e2, e3, e4}; };
    out.push_back(std::move(e));
  }
  out.push_back(constant_entry(5, 3, "parabolic rotations and all translations; A = (0, A, B, A)",
                               {"e12-e14", "e1", "e2", "e3", "e4"}, {e12 - e14, e1, e2, e3, e4}, {"A", "B"},
                               [](const ParamMap& p) { return Comp{0.0, p.at("A"), p.at("B"), p.at("A")}; }));
  {
    ClassEntry e = potential_entry(5, 4, 0, "rotations, pseudo-rotations, e1, e3, e2+e4; d = x2-x4");
    e.generator_labels = {"e13", "e24", "e1", "e3", "e2+e4"};
    e.params = {konst("K1"), konst("K2")};
    e.generators = fixed({e13, e24, e1, e3, e2 + e4});
    e.domain = domain_of(d_nonzero);
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const double k1 = p.at("K1"), k2 = p.at("K2");
      return [=](const JetPoint& x) {
        const Jet2 d = d_of(x);
        return Comp{0.0, k1 * d + k2 / d, 0.0, k1 * d - k2 / d};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(5, 5, 0, "parabolic rotation and helix, e1, e3, e2-e4; Φ(x2+x4) for λ=0, constants K1, K2 for λ≠0");
    e.generator_labels = {"e12-e14", "e23+e34+λe2", "e1", "e3", "e2-e4"};
    e.params = {lambda_p(ParamRule::Branch), konst("K1"), konst("K2")};
    e.branch_param = "lambda";
    e.slots = {{"Phi", 1, "x2+x4", SlotBranch::ZeroBranch}};
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e23 + e34 + p.at("lambda") * e2, e1, e3, e2 - e4};
    };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      if (l == 0.0) return isotropic_phi(s);
      const double k1 = p.at("K1"), k2 = p.at("K2");
      return [=](const JetPoint& x) {
        const Jet2 a = -k1 / l * s_of(x) + k2;
        return Comp{0.0, a, Jet2(k1), a};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(5, 6, 0, "parabolic rotation, hyperbolic helix, e1, e2, e4; Φ(x3) for λ=0, constants K1, K2 for λ≠0");
    e.generator_labels = {"e12-e14", "e24+λe3", "e1", "e2", "e4"};
    e.params = {lambda_p(ParamRule::Branch), konst("K1"), konst("K2")};
    e.branch_param = "lambda";
    e.slots = {{"Phi", 1, "x3", SlotBranch::ZeroBranch}};
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14, e24 + p.at("lambda") * e3, e1, e2, e4}; };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      const double l = p.at("lambda");
      if (l == 0.0) {
        const FunctionSlot phi = s.at("Phi");
        return [=](const JetPoint& x) { return Comp{0.0, 0.0, phi(x[2]), 0.0}; };
      }
      const double k1 = p.at("K1"), k2 = p.at("K2");
      return [=](const JetPoint& x) {
        const Jet2 a = k1 * exp(-x[2] / l);
        return Comp{0.0, a, Jet2(k2), a};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(5, 7, 0, "parabolic rotation, pseudo-rotation, e1, e3, e2-e4; A = (0, B/s, C, B/s)");
    e.generator_labels = {"e12-e14", "e24", "e1", "e3", "e2-e4"};
    e.params = {konst("B"), konst("C")};
    e.generators = fixed({e12 - e14, e24, e1, e3, e2 - e4});
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet&) { return inverse_s(p.at("B"), p.at("C")); };
    out.push_back(std::move(e));
  }
  {
    // Extending the x2+x4 family with e24 + λe3 gives A3 = C and
    // (s A2)' = λC/s; an arbitrary Φ(x2+x4) fails the e24 + λe3 condition.
    ClassEntry e = potential_entry(5, 8, 0, "two parabolic rotations, hyperbolic helix, e1, e2-e4; A2 = A4 = (B + λC ln s - C x3)/s, A3 = C");
    e.generator_labels = {"e12-e14", "e23+e34", "e24+λe3", "e1", "e2-e4"};
    e.params = {lambda_p(), konst("B"), konst("C")};
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e23 + e34, e24 + p.at("lambda") * e3, e1, e2 - e4};
    };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const double l = p.at("lambda"), b = p.at("B"), c = p.at("C");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x);
        const Jet2 a2 = (b + l * c * log(s) - c * x[2]) / s;
        return Comp{0.0, a2, Jet2(c), a2};
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(5, 9, 0, "two parabolic rotations, e13, e24, e2-e4; constants C, D");
    e.generator_labels = {"e12-e14", "e23+e34", "e13", "e24", "e2-e4"};
    e.params = {konst("C"), konst("D")};
    e.generators = fixed({e12 - e14, e23 + e34, e13, e24, e2 - e4});
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet&) -> Components {
      const double c = p.at("C"), d = p.at("D");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x);
        const Jet2 a2 = 0.5 * c * (s - (x[0] * x[0] + x[2] * x[2]) / s) + d / s;
        return Comp{c * x[0], a2, c * x[2], a2 - c * s};
      };
    };
    out.push_back(std::move(e));
  }

  {
    ClassEntry e = empty_entry(6, 1, "Lorentz group; empty", {"e12", "e13", "e23", "e14", "e24", "e34"});
    e.generators = fixed({e12, e13, e23, e14, e24, e34});
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = empty_entry(6, 2, "rotations, pseudo-rotations and all translations; empty",
                               {"e13", "e24", "e1", "e2", "e3", "e4"});
    e.generators = fixed({e13, e24, e1, e2, e3, e4});
    out.push_back(std::move(e));
  }
  out.push_back(constant_entry(6, 3, "two parabolic rotations and all translations; A = (0, A, 0, A)",
                               {"e12-e14", "e23+e34", "e1", "e2", "e3", "e4"},
                               {e12 - e14, e23 + e34, e1, e2, e3, e4}, {"A"},
                               [](const ParamMap& p) { return Comp{0.0, p.at("A"), 0.0, p.at("A")}; }));
  // (0, A, 0, A) is not invariant under e24; the constants of P5.1 that
  // survive e12 - e14 are (0, 0, B, 0).
  out.push_back(constant_entry(6, 4, "parabolic rotation, pseudo-rotation and all translations; A = (0, 0, B, 0)",
                               {"e12-e14", "e24", "e1", "e2", "e3", "e4"}, {e12 - e14, e24, e1, e2, e3, e4},
                               {"B"}, [](const ParamMap& p) { return Comp{0.0, 0.0, p.at("B"), 0.0}; }));
  {
    ClassEntry e = potential_entry(6, 5, 0, "two parabolic rotations, elliptic helix, e1, e3, e2-e4; Φ(x2+x4) for λ=0, (0, A, 0, A) for λ≠0");
    e.generator_labels = {"e12-e14", "e23+e34", "e13+λe2", "e1", "e3", "e2-e4"};
    e.params = {lambda_p(ParamRule::Branch), konst("A")};
    e.branch_param = "lambda";
    e.slots = {{"Phi", 1, "x2+x4", SlotBranch::ZeroBranch}};
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e23 + e34, e13 + p.at("lambda") * e2, e1, e3, e2 - e4};
    };
    e.potential = [](const ParamMap& p, const SlotSet& s) -> Components {
      if (p.at("lambda") == 0.0) return isotropic_phi(s);
      const double a = p.at("A");
      return [=](const JetPoint&) { return Comp{0.0, a, 0.0, a}; };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(6, 6, 0, "two parabolic rotations, pseudo-rotation, e1, e3, e2-e4; A = (0, B/s, 0, B/s)");
    e.generator_labels = {"e12-e14", "e23+e34", "e24", "e1", "e3", "e2-e4"};
    e.params = {konst("B")};
    e.generators = fixed({e12 - e14, e23 + e34, e24, e1, e3, e2 - e4});
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet&) { return inverse_s(p.at("B"), 0.0); };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(6, 7, 0, "two parabolic rotations, bi-rotation, e1, e3, e2-e4; A = (0, B/s, 0, B/s)");
    e.generator_labels = {"e12-e14", "e23+e34", "e13+λe24", "e1", "e3", "e2-e4"};
    e.params = {lambda_p(ParamRule::NonZero), konst("B")};
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e23 + e34, e13 + p.at("lambda") * e24, e1, e3, e2 - e4};
    };
    e.domain = domain_of(s_positive);
    e.potential = [](const ParamMap& p, const SlotSet&) { return inverse_s(p.at("B"), 0.0); };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(6, 8, 0, "SO(3) rotations and spatial translations; A = (0, 0, 0, Φ(x4))");
    e.generator_labels = {"e12", "e13", "e23", "e1", "e2", "e3"};
    e.slots = {{"Phi", 1, "x4"}};
    e.generators = fixed({e12, e13, e23, e1, e2, e3});
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot phi = s.at("Phi");
      return [=](const JetPoint& x) { return Comp{0.0, 0.0, 0.0, phi(x[3])}; };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = potential_entry(6, 9, 0, "SO(2,1) in x1, x2, x4 and translations e1, e2, e4; A = (0, 0, Φ(x3), 0)");
    e.generator_labels = {"e12", "e14", "e24", "e1", "e2", "e4"};
    e.slots = {{"Phi", 1, "x3"}};
    e.generators = fixed({e12, e14, e24, e1, e2, e4});
    e.potential = [](const ParamMap&, const SlotSet& s) -> Components {
      const FunctionSlot phi = s.at("Phi");
      return [=](const JetPoint& x) { return Comp{0.0, 0.0, phi(x[2]), 0.0}; };
    };
    out.push_back(std::move(e));
  }
}

} // namespace minkpot::build
