#include "minkpot/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "catalog_build.hpp"

namespace minkpot {

namespace {

bool is_structural(const std::string& name) {
  return name == "lambda" || name == "mu" || name == "nu";
}

} // namespace

ClassId ClassId::parse(std::string_view s) {
  auto fail = [&]() -> ClassId { throw UnknownClass("malformed class id '" + std::string(s) + "'"); };
  if (s.size() < 4) return fail();
  ClassId id;
  if (s[0] == 'P')
    id.kind = ClassKind::Potential;
  else if (s[0] == 'C')
    id.kind = ClassKind::Maxwell;
  else
    return fail();
  std::size_t i = 1;
  auto number = [&](int& out) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || i - start > 3) return false;
    out = std::stoi(std::string(s.substr(start, i - start)));
    return true;
  };
  if (!number(id.dim)) return fail();
  if (i >= s.size() || s[i] != '.') return fail();
  ++i;
  if (!number(id.index)) return fail();
  if (i < s.size()) {
    const char v = s[i];
    if (v < 'a' || v > 'd' || id.kind == ClassKind::Maxwell) return fail();
    id.variant = v;
    ++i;
  }
  if (i != s.size()) return fail();
  if (id.dim < 1 || id.dim > 6) throw UnknownClass("dimension out of range 1..6");
  return id;
}

std::string ClassId::str() const {
  std::string r(1, kind == ClassKind::Potential ? 'P' : 'C');
  r += std::to_string(dim) + "." + std::to_string(index);
  if (variant) r += variant;
  return r;
}

std::vector<SlotSpec> ClassEntry::active_slots(const ParamMap& params) const {
  std::vector<SlotSpec> out;
  bool zero = false;
  if (!branch_param.empty()) {
    auto it = params.find(branch_param);
    zero = it != params.end() && it->second == 0.0;
  }
  for (const auto& s : slots) {
    if (s.when == SlotBranch::ZeroBranch && !zero) continue;
    if (s.when == SlotBranch::NonZeroBranch && zero) continue;
    out.push_back(s);
  }
  return out;
}

Domain ClassEntry::domain_for(const ParamMap& params) const {
  if (!domain) return {};
  return domain(params);
}

std::string ClassEntry::constraint_text() const {
  std::string out;
  for (const auto& p : params) {
    std::string c;
    switch (p.rule) {
    case ParamRule::Free: break;
    case ParamRule::NonZero: c = p.symbol + "≠0"; break;
    case ParamRule::Branch: c = p.symbol + "=0 | " + p.symbol + "≠0"; break;
    case ParamRule::Zero: c = p.symbol + "=0"; break;
    }
    if (c.empty()) continue;
    if (!out.empty()) out += ", ";
    out += c;
  }
  return out;
}

const std::vector<ClassEntry>& registry() {
  static const std::vector<ClassEntry> entries = [] {
    std::vector<ClassEntry> v;
    build::register_dim1(v);
    build::register_dim2(v);
    build::register_dim3(v);
    build::register_dim4(v);
    build::register_dim56(v);
    build::register_maxwell(v);
    std::sort(v.begin(), v.end(),
              [](const ClassEntry& a, const ClassEntry& b) { return a.id < b.id; });
    std::set<ClassId> seen;
    for (const auto& e : v)
      if (!seen.insert(e.id).second) throw Error("duplicate registry entry " + e.id.str());
    return v;
  }();
  return entries;
}

std::vector<const ClassEntry*> list_classes(std::optional<ClassKind> kind, std::optional<int> dim) {
  std::vector<const ClassEntry*> out;
  for (const auto& e : registry()) {
    if (kind && e.id.kind != *kind) continue;
    if (dim && e.id.dim != *dim) continue;
    out.push_back(&e);
  }
  return out;
}

const ClassEntry& find_class(const ClassId& id) {
  const auto& r = registry();
  auto it = std::lower_bound(r.begin(), r.end(), id,
                             [](const ClassEntry& e, const ClassId& k) { return e.id < k; });
  if (it == r.end() || it->id != id) throw UnknownClass("unknown class " + id.str());
  return *it;
}

const ClassEntry& find_class(std::string_view id) { return find_class(ClassId::parse(id)); }

namespace {

double param_or_zero(const ParamMap& p, const char* k) {
  auto it = p.find(k);
  return it == p.end() ? 0.0 : it->second;
}

bool has(const ParamMap& p, const char* k) { return p.count(k) != 0; }

} // namespace

ResolvedClass resolve_class(std::string_view text, const ParamMap& params) {
  ClassId id = ClassId::parse(text);
  const auto& r = registry();
  const bool direct = std::any_of(r.begin(), r.end(), [&](const ClassEntry& e) { return e.id == id; });
  if (direct) return {&find_class(id), params};

  ParamMap rest = params;
  auto pick = [&](char v, std::initializer_list<const char*> drop) {
    for (const char* k : drop) rest.erase(k);
    id.variant = v;
    return ResolvedClass{&find_class(id), rest};
  };
  const double l = param_or_zero(params, "lambda");
  const double m = param_or_zero(params, "mu");
  const double n = param_or_zero(params, "nu");
  if (id.kind == ClassKind::Potential && id.variant == 0) {
    const bool null_rotation_family =
        (id.dim == 1 && id.index == 4) || (id.dim == 2 && id.index == 7) || (id.dim == 3 && id.index == 9);
    if (null_rotation_family) {
      if (!has(params, "lambda") || !has(params, "mu"))
        throw ParamConstraint("parameters λ and μ are required for " + id.str());
      if (l * m != 0.0) throw ParamConstraint("constraint λμ=0 violated");
      if (l == 0.0 && m == 0.0) return pick('a', {"lambda", "mu"});
      if (l == 0.0) return pick('b', {"lambda"});
      return pick('c', {"mu"});
    }
    if (id.dim == 3 && id.index == 10) {
      if (!has(params, "lambda")) throw ParamConstraint("parameter λ is required for P3.10");
      return l != 0.0 ? pick('a', {}) : pick('b', {"lambda"});
    }
    if (id.dim == 3 && id.index == 18) {
      if (!has(params, "lambda")) throw ParamConstraint("parameter λ is required for P3.18");
      return l != 0.0 ? pick('a', {}) : pick('b', {"lambda"});
    }
    if (id.dim == 4 && id.index == 12) {
      if (!has(params, "mu") || !has(params, "nu"))
        throw ParamConstraint("parameters μ and ν are required for P4.12");
      if (m == 0.0 && n == 0.0) return pick('a', {"mu", "nu"});
      if (m == 0.0) return pick('b', {"mu"});
      if (n == 0.0) return pick('c', {"nu"});
      return pick('d', {});
    }
    if (id.dim == 4 && id.index == 14) {
      if (!has(params, "nu")) throw ParamConstraint("parameter ν is required for P4.14");
      return n != 0.0 ? pick('a', {}) : pick('b', {"nu"});
    }
  }
  throw UnknownClass("unknown class " + id.str());
}

void validate_params(const ClassEntry& e, const ParamMap& params) {
  for (const auto& [name, value] : params) {
    const bool known = std::any_of(e.params.begin(), e.params.end(),
                                   [&](const ParamSpec& p) { return p.name == name; });
    if (!known) throw ParamConstraint("unknown parameter '" + name + "' for " + e.id.str());
    if (!std::isfinite(value)) throw ParamConstraint("parameter '" + name + "' is not finite");
  }
  for (const auto& p : e.params) {
    auto it = params.find(p.name);
    if (it == params.end()) throw ParamConstraint("missing parameter " + p.symbol + " for " + e.id.str());
    const double v = it->second;
    switch (p.rule) {
    case ParamRule::Free: break;
    case ParamRule::NonZero:
      if (std::fabs(v) < kParamMargin) throw ParamConstraint("constraint " + p.symbol + "≠0 violated");
      break;
    case ParamRule::Branch:
      if (v != 0.0 && std::fabs(v) < kParamMargin)
        throw ParamConstraint("constraint " + p.symbol + "=0 or |" + p.symbol + "|≥1e-6 violated");
      break;
    case ParamRule::Zero:
      if (v != 0.0)
        throw ParamConstraint("constraint " + p.symbol + "=0 violated (only the " + p.symbol +
                              "=0 branch is implemented)");
      break;
    }
  }
  if (e.extra_check) e.extra_check(params);
}

std::vector<PoincareGenerator> generators_of(const ClassEntry& e, const ParamMap& params) {
  validate_params(e, params);
  return e.generators(params);
}

std::vector<PoincareGenerator> generators_of(std::string_view id, const ParamMap& params) {
  const auto r = resolve_class(id, params);
  return generators_of(*r.entry, r.params);
}

namespace {

void check_slots(const ClassEntry& e, const ParamMap& params, const SlotSet& slots) {
  for (const auto& spec : e.active_slots(params)) {
    auto it = slots.find(spec.label);
    if (it == slots.end() || !it->second.valid())
      throw ArityMismatch("slot " + spec.label + " of " + e.id.str() + " is not supplied");
    if (it->second.arity() != spec.arity)
      throw ArityMismatch("slot " + spec.label + " of " + e.id.str() + " needs arity " +
                          std::to_string(spec.arity) + ", got " + std::to_string(it->second.arity()));
  }
}

} // namespace

CovectorField instantiate_potential(const ClassEntry& e, const ParamMap& params, const SlotSet& slots) {
  if (e.id.kind != ClassKind::Potential) throw UnknownClass(e.id.str() + " is not a potential class");
  if (e.empty) throw EmptyClass(e.id.str() + " is empty");
  validate_params(e, params);
  check_slots(e, params, slots);
  return CovectorField(e.potential(params, slots), e.domain_for(params));
}

CovectorField instantiate_potential(std::string_view id, const ParamMap& params, const SlotSet& slots) {
  const auto r = resolve_class(id, params);
  return instantiate_potential(*r.entry, r.params, slots);
}

TwoFormField instantiate_maxwell(const ClassEntry& e, const ParamMap& params, const SlotSet& slots) {
  if (e.id.kind != ClassKind::Maxwell) throw UnknownClass(e.id.str() + " is not a Maxwell class");
  validate_params(e, params);
  check_slots(e, params, slots);
  return TwoFormField::from_components(e.maxwell(params, slots), e.domain_for(params));
}

TwoFormField instantiate_maxwell(std::string_view id, const ParamMap& params, const SlotSet& slots) {
  const auto r = resolve_class(id, params);
  return instantiate_maxwell(*r.entry, r.params, slots);
}

ParamMap draw_params(const ClassEntry& e, std::mt19937_64& rng, int draw) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_real_distribution<double> wide(-2.0, 2.0);
  auto signed_mag = [&] { return (unit(rng) < 0.0 ? -1.0 : 1.0) * mag(rng); };
  ParamMap p;
  for (const auto& spec : e.params) {
    double v = 0.0;
    switch (spec.rule) {
    case ParamRule::Free: v = is_structural(spec.name) ? wide(rng) : unit(rng); break;
    case ParamRule::NonZero: v = signed_mag(); break;
    case ParamRule::Branch: v = draw == 0 ? 0.0 : signed_mag(); break;
    case ParamRule::Zero: v = 0.0; break;
    }
    p[spec.name] = v;
  }
  return p;
}

SlotSet default_slots(const ClassEntry& e, const ParamMap& params, std::mt19937_64& rng,
                      SlotFamily family) {
  if (e.default_slots) return e.default_slots(params, rng, family);
  SlotSet out;
  for (const auto& spec : e.active_slots(params))
    out.emplace(spec.label, random_slot(spec.label, spec.arity, family, rng));
  return out;
}

} // namespace minkpot
