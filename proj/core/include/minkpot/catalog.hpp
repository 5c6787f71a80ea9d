#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "minkpot/charts.hpp"
#include "minkpot/geometry.hpp"
#include "minkpot/slots.hpp"

namespace minkpot {

enum class ClassKind { Potential, Maxwell };

struct ClassId {
  ClassKind kind = ClassKind::Potential;
  int dim = 1;
  int index = 1;
  char variant = 0; // 0, 'a', 'b', 'c' or 'd'

  // Grammar: "P<dim>.<index>[variant]" or "C<dim>.<index>".
  static ClassId parse(std::string_view s);
  std::string str() const;

  auto operator<=>(const ClassId&) const = default;
};

using ParamMap = std::map<std::string, double>;

enum class ParamRule {
  Free,
  NonZero, // |v| >= 1e-6
  Branch,  // v == 0 selects the degenerate branch, otherwise |v| >= 1e-6
  Zero,    // only the zero value is implemented
};

inline constexpr double kParamMargin = 1e-6;

struct ParamSpec {
  std::string name;   // config key: lambda, mu, nu, C1, K, ...
  std::string symbol; // display: λ, μ, ν, C1, ...
  ParamRule rule = ParamRule::Free;
};

enum class SlotBranch { Always, ZeroBranch, NonZeroBranch };

struct SlotSpec {
  std::string label;
  int arity = 1;
  std::string args; // human readable argument list, e.g. "r, x2~, x4~"
  SlotBranch when = SlotBranch::Always;
};

struct ClassEntry {
  ClassId id;
  std::vector<std::string> generator_labels;
  std::vector<ParamSpec> params;
  std::vector<SlotSpec> slots;
  std::optional<ChartKind> chart;
  bool empty = false;
  std::string summary;
  std::string branch_param; // name of the Branch parameter, if any

  std::function<std::vector<PoincareGenerator>(const ParamMap&)> generators;
  std::function<Domain(const ParamMap&)> domain; // empty function: whole space
  std::function<void(const ParamMap&)> extra_check;
  // Component formulas; the domain is attached by instantiate_*.
  std::function<CovectorField::Components(const ParamMap&, const SlotSet&)> potential;
  std::function<TwoFormField::Components(const ParamMap&, const SlotSet&)> maxwell;
  // Overrides random slot generation when slots are coupled.
  std::function<SlotSet(const ParamMap&, std::mt19937_64&, SlotFamily)> default_slots;

  int dim() const { return id.dim; }
  std::vector<SlotSpec> active_slots(const ParamMap& params) const;
  Domain domain_for(const ParamMap& params) const;
  std::string constraint_text() const;
};

const std::vector<ClassEntry>& registry();

std::vector<const ClassEntry*> list_classes(std::optional<ClassKind> kind = std::nullopt,
                                            std::optional<int> dim = std::nullopt);

const ClassEntry& find_class(const ClassId& id);
const ClassEntry& find_class(std::string_view id);

struct ResolvedClass {
  const ClassEntry* entry = nullptr;
  ParamMap params; // selector parameters fixed by the variant are removed
};

// Resolves family ids without a variant letter whose variant is selected by
// parameter values (P1.4, P2.7, P3.9, P3.10, P3.18, P4.12, P4.14). Ids that
// name a registry entry directly pass through unchanged.
ResolvedClass resolve_class(std::string_view id, const ParamMap& params);

// Throws ParamConstraint on violation. Missing or unknown parameters are an
// error.
void validate_params(const ClassEntry& entry, const ParamMap& params);

std::vector<PoincareGenerator> generators_of(const ClassEntry& entry, const ParamMap& params);
std::vector<PoincareGenerator> generators_of(std::string_view id, const ParamMap& params);

CovectorField instantiate_potential(const ClassEntry& entry, const ParamMap& params,
                                    const SlotSet& slots);
CovectorField instantiate_potential(std::string_view id, const ParamMap& params,
                                    const SlotSet& slots);
TwoFormField instantiate_maxwell(const ClassEntry& entry, const ParamMap& params,
                                 const SlotSet& slots);
TwoFormField instantiate_maxwell(std::string_view id, const ParamMap& params,
                                 const SlotSet& slots);

// Admissible random parameters. For a branch parameter, draw 0 takes the
// zero branch and later draws the non-zero one.
ParamMap draw_params(const ClassEntry& entry, std::mt19937_64& rng, int draw);

SlotSet default_slots(const ClassEntry& entry, const ParamMap& params, std::mt19937_64& rng,
                      SlotFamily family);

// Named presets for the two worked examples.
namespace presets {

// Potential of class P3.19 with C1 = C2 = C3 = 0 and C4 = phi.
CovectorField p319_example(double lambda, const FunctionSlot& phi);
// Closed form of d of the potential above, written in Galilean coordinates.
TwoFormField c319_example_closed_form(double lambda, const FunctionSlot& phi);
// Closed form of the C4.16 field with Phi2 = 0.
TwoFormField c416_example_closed_form(double k, double lambda);
// C4.16 slots with Phi2 = 0.
SlotSet c416_example_slots();

} // namespace presets

} // namespace minkpot
