#pragma once

// Helpers shared by the per-dimension class tables.

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "minkpot/catalog.hpp"

namespace minkpot::build {

using Comp = std::array<Jet2, 4>;
using Comp6 = std::array<Jet2, 6>;
using Gens = std::vector<PoincareGenerator>;
using Components = CovectorField::Components;

inline constexpr double kM = kDomainMargin;

inline ParamSpec lambda_p(ParamRule r = ParamRule::Free) { return {"lambda", "λ", r}; }
inline ParamSpec mu_p(ParamRule r = ParamRule::Free) { return {"mu", "μ", r}; }
inline ParamSpec nu_p(ParamRule r = ParamRule::Free) { return {"nu", "ν", r}; }
inline ParamSpec konst(const std::string& name) { return {name, name, ParamRule::Free}; }

inline ClassEntry potential_entry(int dim, int index, char variant, std::string summary) {
  ClassEntry e;
  e.id = ClassId{ClassKind::Potential, dim, index, variant};
  e.summary = std::move(summary);
  return e;
}

inline auto fixed(Gens g) {
  return [g = std::move(g)](const ParamMap&) { return g; };
}

inline Domain chart_domain(const Chart& c) {
  return [c](const SpacetimePoint& x) { return c.domain(x); };
}

template <class F> auto domain_of(F f) {
  return [f](const ParamMap&) -> Domain { return Domain(f); };
}

inline bool s_positive(const SpacetimePoint& x) { return x[1] + x[3] >= kM; }
inline bool d_positive(const SpacetimePoint& x) { return x[1] - x[3] >= kM; }
inline bool d_nonzero(const SpacetimePoint& x) { return std::fabs(x[1] - x[3]) >= kM; }
inline bool timelike_sector(const SpacetimePoint& x) { return x[1] - std::fabs(x[3]) >= kM; }
inline bool rho3_positive(const SpacetimePoint& x) {
  return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] >= kM * kM;
}
inline bool r13_positive(const SpacetimePoint& x) {
  return std::hypot(x[0], x[2]) >= kM;
}
inline bool u124_positive(const SpacetimePoint& x) {
  return x[0] * x[0] + x[1] * x[1] - x[3] * x[3] >= kM;
}

// A_i = A_i(invariants) with the invariants computed from x.
template <class Args> Components free_components(const SlotSet& s, Args args) {
  const FunctionSlot a1 = s.at("A1"), a2 = s.at("A2"), a3 = s.at("A3"), a4 = s.at("A4");
  return [=](const JetPoint& x) {
    const auto v = args(x);
    return Comp{a1.call(v), a2.call(v), a3.call(v), a4.call(v)};
  };
}

inline std::vector<SlotSpec> four_slots(int arity, const std::string& args,
                                        SlotBranch when = SlotBranch::Always) {
  return {{"A1", arity, args, when}, {"A2", arity, args, when}, {"A3", arity, args, when},
          {"A4", arity, args, when}};
}

inline Jet2 s_of(const JetPoint& x) { return x[1] + x[3]; }
inline Jet2 d_of(const JetPoint& x) { return x[1] - x[3]; }

// Shared shape of the null-rotation classes: with C1, C2, C3 and A3 functions
// of the invariants and t = x2~,
// A1 = C2 t + C3, A2 = C2 t^2 / 2 + C3 t + C1, A3, A4 = A2 + C2.
inline Comp null_rotation_form(const Jet2& t, const Jet2& c1, const Jet2& c2, const Jet2& c3,
                               const Jet2& a3) {
  const Jet2 a2 = 0.5 * c2 * t * t + c3 * t + c1;
  return {c2 * t + c3, a2, a3, a2 + c2};
}

// Shape shared by the classes built on the e12 - e14, e23 + e34 pair:
// A1 = -t2 Phi + Psi, A2 = -Phi (t2^2 + t3^2) / 2 + t2 Psi - t3 Xi + Theta,
// A3 = t3 Phi + Xi, A4 = A2 - Phi.
inline Comp null_pair_form(const Jet2& t2, const Jet2& t3, const Jet2& phi, const Jet2& psi,
                           const Jet2& xi, const Jet2& theta) {
  const Jet2 a2 = -0.5 * phi * (t2 * t2 + t3 * t3) + t2 * psi - t3 * xi + theta;
  return {-t2 * phi + psi, a2, t3 * phi + xi, a2 - phi};
}

// A1 = C1 sin a + C2 cos a, A3 = C1 cos a - C2 sin a with a computed from x.
inline Comp rotating_pair(const Jet2& c1, const Jet2& c2, const Jet2& a2, const Jet2& a4, const Jet2& a) {
  const Jet2 sa = sin(a), ca = cos(a);
  return {c1 * sa + c2 * ca, a2, c1 * ca - c2 * sa, a4};
}

// A2 = C1 ch a + C2 sh a, A4 = -C1 sh a - C2 ch a.
inline Comp boosted_pair(const Jet2& a1, const Jet2& c1, const Jet2& c2, const Jet2& a3, const Jet2& a) {
  const Jet2 ca = cosh(a), sa = sinh(a);
  return {a1, c1 * ca + c2 * sa, a3, -c1 * sa - c2 * ca};
}

inline std::vector<SlotSpec> c_slots(int arity, const std::string& args, std::vector<std::string> labels) {
  std::vector<SlotSpec> out;
  for (auto& l : labels) out.push_back({std::move(l), arity, args});
  return out;
}

void register_dim1(std::vector<ClassEntry>& out);
void register_dim2(std::vector<ClassEntry>& out);
void register_dim3(std::vector<ClassEntry>& out);
void register_dim4(std::vector<ClassEntry>& out);
void register_dim56(std::vector<ClassEntry>& out);
void register_maxwell(std::vector<ClassEntry>& out);

} // namespace minkpot::build
