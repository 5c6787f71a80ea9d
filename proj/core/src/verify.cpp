#include "minkpot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "minkpot/errors.hpp"

namespace minkpot {

namespace {

constexpr int kMaxProposals = 100000;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool is_zero_field(const CovectorField& a, const std::vector<SpacetimePoint>& points) {
  for (const auto& x : points) {
    const auto s = a.eval(x);
    if (max_abs(s.a) != 0.0) return false;
    for (const auto& row : s.da)
      for (double v : row)
        if (v != 0.0) return false;
  }
  return true;
}

bool is_zero_field(const TwoFormField& f, const std::vector<SpacetimePoint>& points) {
  for (const auto& x : points) {
    const auto s = f.eval(x);
    if (max_abs(s.f) != 0.0) return false;
    for (const auto& row : s.df)
      for (double v : row)
        if (v != 0.0) return false;
  }
  return true;
}

struct DrawResult {
  InvarianceResult inv;
  double closed = 0.0;
  std::optional<int> dim;
  bool zero = false;
};

template <class Field>
DrawResult run_draw(const Field& field, const std::vector<PoincareGenerator>& gens,
                    const std::vector<SpacetimePoint>& points, bool detect) {
  DrawResult r;
  r.inv = invariance_residual(field, gens, points);
  r.closed = closedness_max(field, points);
  r.zero = is_zero_field(field, points);
  if (detect) {
    const auto n = std::min<std::size_t>(points.size(), kDetectionPoints);
    const std::vector<SpacetimePoint> head(points.begin(), points.begin() + static_cast<long>(n));
    if (head.size() >= 5) r.dim = detect_symmetry_algebra(field, head).dim;
  }
  return r;
}

DrawResult run_instance(const ClassEntry& entry, const ParamMap& params, const SlotSet& slots,
                        const std::vector<SpacetimePoint>& points, bool detect) {
  const auto gens = generators_of(entry, params);
  if (entry.id.kind == ClassKind::Maxwell)
    return run_draw(instantiate_maxwell(entry, params, slots), gens, points, detect);
  return run_draw(instantiate_potential(entry, params, slots), gens, points, detect);
}

void merge(VerificationReport& rep, const DrawResult& d, const std::vector<std::string>& labels) {
  rep.max_residual = std::max(rep.max_residual, d.inv.max_residual);
  rep.closedness_max = std::max(rep.closedness_max, d.closed);
  if (rep.per_generator.empty()) {
    for (const auto& l : labels) rep.per_generator.push_back({l, 0.0});
  }
  for (std::size_t k = 0; k < d.inv.per_generator.size() && k < rep.per_generator.size(); ++k)
    rep.per_generator[k].max_residual =
        std::max(rep.per_generator[k].max_residual, d.inv.per_generator[k].max_residual);
  if (d.dim) rep.detected_dim = rep.detected_dim ? std::min(*rep.detected_dim, *d.dim) : *d.dim;
}

void finish(VerificationReport& rep, double tol) {
  rep.pass = rep.max_residual <= tol && rep.closedness_max <= tol;
  if (rep.status.empty()) rep.status = rep.pass ? "PASS" : "FAIL";
}

VerificationReport skeleton(const ClassEntry& entry, std::uint64_t seed) {
  VerificationReport rep;
  rep.class_id = entry.id.str();
  rep.dim = entry.dim();
  rep.seed = seed;
  return rep;
}

} // namespace

std::vector<SpacetimePoint> sample_points(const Domain& domain, int n, std::uint64_t seed) {
  if (n < 1) throw InsufficientPoints("sample_points needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  std::vector<SpacetimePoint> out;
  out.reserve(static_cast<std::size_t>(n));
  long proposals = 0;
  while (static_cast<int>(out.size()) < n) {
    SpacetimePoint x;
    for (double& c : x) c = box(rng);
    ++proposals;
    if (!domain || domain(x)) out.push_back(x);
    if (proposals >= kMaxProposals && static_cast<double>(out.size()) < 0.01 * static_cast<double>(proposals))
      throw DomainTooThin("acceptance rate below 1% after " + std::to_string(proposals) + " proposals");
  }
  return out;
}

std::vector<SpacetimePoint> sample_domain(const ClassEntry& entry, const ParamMap& params, int n,
                                          std::uint64_t seed) {
  return sample_points(entry.domain_for(params), n, seed);
}

InvarianceResult invariance_residual(const CovectorField& a, const std::vector<PoincareGenerator>& gens,
                                     const std::vector<SpacetimePoint>& points) {
  InvarianceResult r;
  for (const auto& g : gens) r.per_generator.push_back({label(g), 0.0});
  for (const auto& x : points) {
    const CovectorSample s = a.eval(x);
    const double scale = residual_scale(s, x);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const double v = max_abs(lie_derivative_covector(s, gens[k], x)) / scale;
      r.per_generator[k].max_residual = std::max(r.per_generator[k].max_residual, v);
      r.max_residual = std::max(r.max_residual, v);
    }
  }
  return r;
}

InvarianceResult invariance_residual(const TwoFormField& f, const std::vector<PoincareGenerator>& gens,
                                     const std::vector<SpacetimePoint>& points) {
  InvarianceResult r;
  for (const auto& g : gens) r.per_generator.push_back({label(g), 0.0});
  for (const auto& x : points) {
    const TwoFormSample s = f.eval(x);
    const double scale = residual_scale(s, x);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const double v = max_abs(lie_derivative_twoform(s, gens[k], x)) / scale;
      r.per_generator[k].max_residual = std::max(r.per_generator[k].max_residual, v);
      r.max_residual = std::max(r.max_residual, v);
    }
  }
  return r;
}

double closedness_max(const CovectorField& a, const std::vector<SpacetimePoint>& points) {
  double m = 0.0;
  for (const auto& x : points) {
    const CovectorSample s = a.eval(x);
    m = std::max(m, max_abs(closedness_residual(s)) / residual_scale(s, x));
  }
  return m;
}

double closedness_max(const TwoFormField& f, const std::vector<SpacetimePoint>& points) {
  double m = 0.0;
  for (const auto& x : points) {
    const TwoFormSample s = f.eval(x);
    m = std::max(m, max_abs(closedness_residual(s)) / residual_scale(s, x));
  }
  return m;
}

FiniteDifferenceResult finite_difference_oracle(const CovectorField& a, const SpacetimePoint& x, double h) {
  for (int k = 0; k < 4; ++k)
    for (double sgn : {-1.0, 1.0}) {
      SpacetimePoint y = x;
      y[k] += sgn * h;
      if (!a.contains(y)) throw OutOfDomain("finite difference stencil leaves the domain");
    }
  auto at = [&](int j, double dj, int k, double dk) {
    SpacetimePoint y = x;
    if (j >= 0) y[j] += dj;
    if (k >= 0) y[k] += dk;
    return a.value_unchecked(y);
  };
  FiniteDifferenceResult r;
  const Covector f0 = a.value_unchecked(x);
  for (int j = 0; j < 4; ++j) {
    const Covector fp = at(j, h, -1, 0.0), fm = at(j, -h, -1, 0.0);
    for (int i = 0; i < 4; ++i) {
      r.da[i][j] = (fp[i] - fm[i]) / (2.0 * h);
      r.d2a[i][j][j] = (fp[i] - 2.0 * f0[i] + fm[i]) / (h * h);
    }
  }
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k) {
      const Covector pp = at(j, h, k, h), pm = at(j, h, k, -h), mp = at(j, -h, k, h), mm = at(j, -h, k, -h);
      for (int i = 0; i < 4; ++i) {
        const double v = (pp[i] - pm[i] - mp[i] + mm[i]) / (4.0 * h * h);
        r.d2a[i][j][k] = v;
        r.d2a[i][k][j] = v;
      }
    }
  return r;
}

std::uint64_t class_seed(std::uint64_t seed, std::string_view id) { return seed ^ fnv1a(id); }

VerificationReport verify_class(const ClassEntry& entry, const VerifyOptions& options) {
  VerificationReport rep = skeleton(entry, options.seed);
  if (entry.empty) {
    rep.status = "SKIP(EMPTY)";
    rep.pass = true;
    return rep;
  }
  std::mt19937_64 rng(class_seed(options.seed, rep.class_id));
  const auto& labels = entry.generator_labels;
  bool all_zero = true;
  try {
    for (int d = 0; d < options.draws; ++d) {
      const ParamMap params = draw_params(entry, rng, d);
      const SlotFamily family = options.mixed_families && d == 2 ? SlotFamily::Elementary : options.family;
      const SlotSet slots = default_slots(entry, params, rng, family);
      const auto points = sample_domain(entry, params, options.points, rng());
      const DrawResult r = run_instance(entry, params, slots, points, options.detect);
      all_zero = all_zero && r.zero;
      merge(rep, r, labels);
      rep.n_points += static_cast<int>(points.size());
    }
  } catch (const std::exception& ex) {
    rep.status = "FAIL";
    rep.note = ex.what();
    rep.max_residual = std::numeric_limits<double>::infinity();
  }
  if (rep.status.empty() && all_zero && options.draws > 0) rep.note = "zero field in every draw";
  finish(rep, options.tol);
  return rep;
}

VerificationReport verify_instance(const ClassEntry& entry, const ParamMap& params, const SlotSet& slots,
                                   const VerifyOptions& options) {
  VerificationReport rep = skeleton(entry, options.seed);
  if (entry.empty) throw EmptyClass(rep.class_id + " is empty");
  const auto points = sample_domain(entry, params, options.points, class_seed(options.seed, rep.class_id));
  const DrawResult r = run_instance(entry, params, slots, points, options.detect);
  merge(rep, r, entry.generator_labels);
  rep.n_points = static_cast<int>(points.size());
  if (r.zero) {
    rep.status = "ZERO-FIELD";
    rep.note = "field is identically zero on the sample";
  }
  finish(rep, options.tol);
  return rep;
}

std::vector<VerificationReport> verify_all(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  for (const auto& e : registry()) out.push_back(verify_class(e, options));
  return out;
}

} // namespace minkpot
