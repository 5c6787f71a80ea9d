#include <cmath>

#include "catalog_build.hpp"
#include "minkpot/errors.hpp"

namespace minkpot {

namespace build {

namespace {

using namespace gen;

ClassEntry maxwell_entry(int dim, int index, std::string summary) {
  ClassEntry e;
  e.id = ClassId{ClassKind::Maxwell, dim, index, 0};
  e.summary = std::move(summary);
  return e;
}

// F12 = F14 = p, F23 = -F34 = q, F13 = f13, F24 = f24.
Comp6 null_pair_twoform(const Jet2& p, const Jet2& q, const Jet2& f13, const Jet2& f24) {
  return {p, f13, p, q, f24, -q};
}

// Value, first and second derivative of a univariate slot at t.
std::array<double, 3> slot_jet(const FunctionSlot& f, double t) {
  const Jet2 r = f(Jet2::variable(t, 0));
  return {r.value(), r.grad(0), r.hess(0, 0)};
}

// phi'(q) as a jet. Value and gradient are exact; the third derivative of phi
// is dropped from the hessian, which two-form fields never read.
Jet2 derivative_of(const FunctionSlot& phi, const Jet2& q) {
  const Jet2 r = phi(Jet2::variable(q.value(), 0));
  return q.chain(r.grad(0), r.hess(0, 0), 0.0);
}

inline constexpr std::array<double, 6> kRelationArgs = {-3.0, -1.0, 0.0, 0.5, 2.0, 5.0};
inline constexpr double kRelationTolerance = 1e-8;

// Phi2int must be an antiderivative of Phi2.
void check_c416_relation(const SlotSet& s) {
  const FunctionSlot f = s.at("Phi2"), g = s.at("Phi2int");
  for (double t : kRelationArgs) {
    const double v = slot_jet(f, t)[0], d = slot_jet(g, t)[1];
    if (std::fabs(d - v) > kRelationTolerance * (1.0 + std::fabs(v)))
      throw SlotRelationViolation("Phi2int' differs from Phi2 at u = " + std::to_string(t));
  }
}

SlotSet c416_default_slots(const ParamMap&, std::mt19937_64& rng, SlotFamily family) {
  SlotSet out;
  if (family == SlotFamily::Elementary) {
    std::uniform_real_distribution<double> amp(-1.0, 1.0), rate(0.2, 0.8);
    const double c = amp(rng), a = rate(rng);
    out.emplace("Phi2", FunctionSlot("Phi2", 1, [c, a](std::span<const Jet2> u) { return c * exp(a * u[0]); }));
    out.emplace("Phi2int",
                FunctionSlot("Phi2int", 1, [c, a](std::span<const Jet2> u) { return (c / a) * exp(a * u[0]); }));
    return out;
  }
  const Polynomial phi2 = random_polynomial(1, 3, rng);
  out.emplace("Phi2", polynomial_slot("Phi2", phi2));
  out.emplace("Phi2int", polynomial_slot("Phi2int", phi2.antiderivative()));
  return out;
}

bool c416_domain(double l, const SpacetimePoint& x) {
  const double u = x[1] + x[3];
  return u * u + l * l >= kM;
}

} // namespace

void register_maxwell(std::vector<ClassEntry>& out) {
  {
    // In y = (s, -x1/s, x3/s, x4~) the null pair acts as d/dy2, d/dy3. Invariance and
    // closedness leave G23 = 0, G14 = A/y1, G12 + iG13 = D e^{iL},
    // G24 + iG34 = -D' y1 e^{iL}/(1 + i/λ) with D = D1 + iD2, L = ln(y1)/λ.
    ClassEntry e = maxwell_entry(3, 19, "two parabolic rotations and a bi-rotation; A, D1, D2 of x4~");
    e.generator_labels = {"e12-e14", "e23+e34", "e13+λe24"};
    e.params = {lambda_p(ParamRule::NonZero)};
    e.chart = ChartKind::NullRotationPair;
    e.slots = c_slots(1, "x4~", {"A", "D1", "D2"});
    e.generators = [](const ParamMap& p) { return Gens{e12 - e14, e23 + e34, e13 + p.at("lambda") * e24}; };
    e.domain = domain_of(s_positive);
    e.maxwell = [](const ParamMap& p, const SlotSet& sl) -> TwoFormField::Components {
      const double l = p.at("lambda");
      const double kr = l * l / (l * l + 1.0), ki = -l / (l * l + 1.0);
      const FunctionSlot fa = sl.at("A"), f1 = sl.at("D1"), f2 = sl.at("D2");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x);
        const Jet2 q = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[3] * x[3];
        const Jet2 d1 = f1(q), d2 = f2(q), dd1 = derivative_of(f1, q), dd2 = derivative_of(f2, q);
        const Jet2 t = log(s) / l;
        const Jet2 c = cos(t), sn = sin(t);
        const Jet2 mr = -(dd1 * kr - dd2 * ki), mi = -(dd1 * ki + dd2 * kr);
        std::array<std::array<Jet2, 4>, 4> g{};
        g[0][1] = d1 * c - d2 * sn;
        g[0][2] = d1 * sn + d2 * c;
        g[0][3] = fa(q) / s;
        g[1][3] = s * (mr * c - mi * sn);
        g[2][3] = s * (mr * sn + mi * c);
        const Jet2 s2 = s * s;
        // dy[a][i] = d y^a / d x^i
        const std::array<std::array<Jet2, 4>, 4> dy = {{
            {0.0, 1.0, 0.0, 1.0},
            {-1.0 / s, x[0] / s2, 0.0, x[0] / s2},
            {0.0, -x[2] / s2, 1.0 / s, -x[2] / s2},
            {2.0 * x[0], 2.0 * x[1], 2.0 * x[2], -2.0 * x[3]},
        }};
        auto f = [&](int i, int j) {
          Jet2 r = 0.0;
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) r = r + g[a][b] * (dy[a][i] * dy[b][j] - dy[b][i] * dy[a][j]);
          return r;
        };
        return Comp6{f(0, 1), f(0, 2), f(0, 3), f(1, 2), f(1, 3), f(2, 3)};
      };
    };
    out.push_back(std::move(e));
  }
  {
    // Invariance under e13 needs F24 = -Phi2; closedness then gives
    // ((u^2+λ^2) Phi1)' = 2λ Phi2, so Phi1 = (K + 2λ Phi2int)/(u^2+λ^2).
    ClassEntry e = maxwell_entry(4, 16, "two parabolic helices, e13 and e2-e4; Phi2(u), Phi2int' = Phi2, u = x2+x4");
    e.generator_labels = {"e12-e14+λe3", "e23+e34+λe1", "e13", "e2-e4"};
    e.params = {lambda_p(), konst("K")};
    e.slots = {{"Phi2", 1, "u"}, {"Phi2int", 1, "u"}};
    e.generators = [](const ParamMap& p) {
      const double l = p.at("lambda");
      return Gens{e12 - e14 + l * e3, e23 + e34 + l * e1, e13, e2 - e4};
    };
    e.domain = [](const ParamMap& p) -> Domain {
      const double l = p.at("lambda");
      return [l](const SpacetimePoint& x) { return c416_domain(l, x); };
    };
    e.default_slots = c416_default_slots;
    e.maxwell = [](const ParamMap& p, const SlotSet& s) -> TwoFormField::Components {
      check_c416_relation(s);
      const double l = p.at("lambda"), k = p.at("K");
      const FunctionSlot phi2 = s.at("Phi2"), phi2int = s.at("Phi2int");
      return [=](const JetPoint& x) {
        const Jet2 u = s_of(x);
        const Jet2 den = u * u + l * l;
        const Jet2 phi = (l * x[0] + u * x[2]) / den;
        const Jet2 psi = (l * x[2] - x[0] * u) / den;
        const Jet2 p1 = (k + 2.0 * l * phi2int(u)) / den, p2 = phi2(u);
        return null_pair_twoform(-phi * p1 + psi * p2, phi * p2 + psi * p1, p1, -p2);
      };
    };
    out.push_back(std::move(e));
  }
  {
    // F23 = (A sin t - B cos t - C x3)/s. With B cos t - A sin t the field fails
    // e13 + λe24 and is disjoint from C6.7, whose algebra contains this one.
    ClassEntry e = maxwell_entry(4, 17, "two parabolic rotations, a bi-rotation and e2-e4; constants A, B, C");
    e.generator_labels = {"e12-e14", "e23+e34", "e13+λe24", "e2-e4"};
    e.params = {lambda_p(ParamRule::NonZero), konst("A"), konst("B"), konst("C")};
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e23 + e34, e13 + p.at("lambda") * e24, e2 - e4};
    };
    e.domain = domain_of(s_positive);
    e.maxwell = [](const ParamMap& p, const SlotSet&) -> TwoFormField::Components {
      const double l = p.at("lambda"), a = p.at("A"), b = p.at("B"), c = p.at("C");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x);
        const Jet2 t = log(s) / l;
        const Jet2 ct = cos(t), st = sin(t);
        return null_pair_twoform((a * ct + b * st + c * x[0]) / s, (a * st - b * ct - c * x[2]) / s, 0.0, c);
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = maxwell_entry(4, 20, "two parabolic rotations, e13 and e24; Phi of x4~ = x1^2+x2^2+x3^2-x4^2");
    e.generator_labels = {"e12-e14", "e23+e34", "e13", "e24"};
    e.slots = {{"Phi", 1, "x4~"}};
    e.generators = fixed({e12 - e14, e23 + e34, e13, e24});
    e.domain = domain_of(s_positive);
    e.maxwell = [](const ParamMap&, const SlotSet& sl) -> TwoFormField::Components {
      const FunctionSlot phi = sl.at("Phi");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x);
        const Jet2 f = phi(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[3] * x[3]);
        return null_pair_twoform(x[0] * f / s, -x[2] * f / s, 0.0, f);
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = maxwell_entry(5, 9, "two parabolic rotations, e13, e24 and e2-e4; constant C");
    e.generator_labels = {"e12-e14", "e23+e34", "e13", "e24", "e2-e4"};
    e.params = {konst("C")};
    e.generators = fixed({e12 - e14, e23 + e34, e13, e24, e2 - e4});
    e.domain = domain_of(s_positive);
    e.maxwell = [](const ParamMap& p, const SlotSet&) -> TwoFormField::Components {
      const double c = p.at("C");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x);
        return null_pair_twoform(c * x[0] / s, -c * x[2] / s, 0.0, c);
      };
    };
    out.push_back(std::move(e));
  }
  {
    // e13 + λe2 requires λ dF12/ds = -F23, so F23 = C2 sin - C1 cos.
    ClassEntry e = maxwell_entry(6, 5, "two parabolic rotations, elliptic helix, e1, e3, e2-e4; F = 0 for λ=0");
    e.generator_labels = {"e12-e14", "e23+e34", "e13+λe2", "e1", "e3", "e2-e4"};
    e.params = {lambda_p(ParamRule::Branch), konst("C1"), konst("C2")};
    e.branch_param = "lambda";
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e23 + e34, e13 + p.at("lambda") * e2, e1, e3, e2 - e4};
    };
    e.maxwell = [](const ParamMap& p, const SlotSet&) -> TwoFormField::Components {
      const double l = p.at("lambda"), c1 = p.at("C1"), c2 = p.at("C2");
      if (l == 0.0) return [](const JetPoint&) { return Comp6{}; };
      return [=](const JetPoint& x) {
        const Jet2 t = s_of(x) / l;
        const Jet2 ct = cos(t), st = sin(t);
        return null_pair_twoform(c1 * st + c2 * ct, c2 * st - c1 * ct, 0.0, 0.0);
      };
    };
    out.push_back(std::move(e));
  }
  {
    ClassEntry e = maxwell_entry(6, 7, "two parabolic rotations, bi-rotation, e1, e3, e2-e4; constants a1, a2");
    e.generator_labels = {"e12-e14", "e23+e34", "e13+λe24", "e1", "e3", "e2-e4"};
    e.params = {lambda_p(ParamRule::NonZero), konst("a1"), konst("a2")};
    e.generators = [](const ParamMap& p) {
      return Gens{e12 - e14, e23 + e34, e13 + p.at("lambda") * e24, e1, e3, e2 - e4};
    };
    e.domain = domain_of(s_positive);
    e.maxwell = [](const ParamMap& p, const SlotSet&) -> TwoFormField::Components {
      const double l = p.at("lambda"), a1 = p.at("a1"), a2 = p.at("a2");
      return [=](const JetPoint& x) {
        const Jet2 s = s_of(x);
        const Jet2 t = log(s) / l;
        const Jet2 ct = cos(t), st = sin(t);
        return null_pair_twoform((a1 * ct - a2 * st) / s, (a1 * st + a2 * ct) / s, 0.0, 0.0);
      };
    };
    out.push_back(std::move(e));
  }
}

} // namespace build

namespace presets {

namespace {

FunctionSlot zero_slot(const std::string& label) { return polynomial_slot(label, Polynomial{1, {}}); }


} // namespace

CovectorField p319_example(double lambda, const FunctionSlot& phi) {
  SlotSet s;
  s.emplace("C1", zero_slot("C1"));
  s.emplace("C2", zero_slot("C2"));
  s.emplace("C3", zero_slot("C3"));
  s.emplace("C4", FunctionSlot("C4", 1, [phi](std::span<const Jet2> a) { return phi.call(a); }));
  return instantiate_potential("P3.19", {{"lambda", lambda}}, s);
}

TwoFormField c319_example_closed_form(double lambda, const FunctionSlot& phi) {
  const double l = lambda;
  if (std::fabs(l) < kParamMargin) throw ParamConstraint("constraint λ≠0 violated");
  auto comps = [l, phi](const JetPoint& x) {
    const Jet2 s = build::s_of(x);
    const Jet2 q = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[3] * x[3];
    const Jet2 f = phi(q), d = build::derivative_of(phi, q);
    const Jet2 t = log(s) / l;
    const Jet2 st = sin(t), ct = cos(t);
    const Jet2 f12 = -((2.0 * x[0] * x[0] * d + f) / s + 2.0 * x[1] * d) * st -
                     (2.0 * l * x[0] * x[2] * d + f) / (l * s) * ct;
    const Jet2 f23 = ((2.0 * x[2] * x[2] * d + f) / s + 2.0 * x[1] * d) * ct +
                     (2.0 * l * x[0] * x[2] * d - f) / (l * s) * st;
    return build::Comp6{f12,
                        2.0 * d * (x[0] * ct - x[2] * st),
                        f12 + 2.0 * s * d * st,
                        f23,
                        -2.0 * d * (x[0] * st + x[2] * ct),
                        -f23 + 2.0 * s * d * ct};
  };
  return TwoFormField::from_components(comps, build::s_positive);
}

TwoFormField c416_example_closed_form(double k, double lambda) {
  const double l = lambda;
  auto comps = [k, l](const JetPoint& x) {
    const Jet2 u = build::s_of(x);
    const Jet2 den = u * u + l * l;
    const Jet2 den2 = den * den;
    const Jet2 p = -k * (l * x[0] + u * x[2]) / den2;
    const Jet2 q = k * (l * x[2] - x[0] * u) / den2;
    return build::Comp6{p, k / den, p, q, 0.0, -q};
  };
  return TwoFormField::from_components(comps, [l](const SpacetimePoint& x) { return build::c416_domain(l, x); });
}

SlotSet c416_example_slots() {
  SlotSet s;
  s.emplace("Phi2", zero_slot("Phi2"));
  s.emplace("Phi2int", zero_slot("Phi2int"));
  return s;
}

} // namespace presets

} // namespace minkpot
