// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../support/chart_checks.hpp"
#include "../support/random_expr.hpp"
#include "minkpot/catalog.hpp"
#include "minkpot/verify.hpp"

using namespace minkpot;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2e", v);
  return b;
}

// Criteria 1 and 2 share the run.
const std::vector<VerificationReport>& contract_run() {
  static const std::vector<VerificationReport> reports = verify_all(VerifyOptions{});
  return reports;
}

Outcome central_contract() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& reports = contract_run();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int checked = 0, skipped = 0;
  double worst = 0.0;
  std::string failed;
  for (const auto& r : reports) {
    if (r.class_id[0] != 'P') continue;
    if (r.status == "SKIP(EMPTY)") {
      ++skipped;
      continue;
    }
    ++checked;
    worst = std::max(worst, r.max_residual);
    if (!(r.max_residual <= 1e-9) || r.n_points != 300) failed += " " + r.class_id;
  }
  return {failed.empty() && checked > 0, std::to_string(checked) + " classes x 3 draws x 100 points, " +
                                             std::to_string(skipped) + " empty skipped, max residual " + sci(worst) +
                                             ", " + sci(secs) + " s" + (failed.empty() ? "" : "; failing:" + failed)};
}

Outcome closedness() {
  double worst = 0.0;
  std::string failed;
  for (const auto& r : contract_run()) {
    if (r.class_id[0] != 'P' || r.status == "SKIP(EMPTY)") continue;
    worst = std::max(worst, r.closedness_max);
    if (!(r.closedness_max <= 1e-9)) failed += " " + r.class_id;
  }
  return {failed.empty(), "max scaled closedness " + sci(worst) + (failed.empty() ? "" : "; failing:" + failed)};
}

Outcome ad_oracle() {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const auto e = support::random_expr(rng);
    const SpacetimePoint x = {box(rng), box(rng), box(rng), box(rng)};
    worst = std::max(worst, support::jet_vs_fd(e, x, 1e-5));
  }
  return {worst <= 1e-6, "100 compositions, h=1e-5, max relative deviation " + sci(worst)};
}

Outcome algebra_health() {
  int bad_jacobi = 0;
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b)
      for (int c = 0; c < 10; ++c) {
        const auto ea = PoincareGenerator::basis(a), eb = PoincareGenerator::basis(b), ec = PoincareGenerator::basis(c);
        const auto s = bracket(ea, bracket(eb, ec)) + bracket(eb, bracket(ec, ea)) + bracket(ec, bracket(ea, eb));
        if (!(s == PoincareGenerator{})) ++bad_jacobi;
      }
  double worst = 0.0;
  std::string failed;
  std::mt19937_64 rng(42);
  for (const auto& e : registry())
    for (int d = 0; d < 3; ++d) {
      const double r = closure_residual(generators_of(e, draw_params(e, rng, d)));
      worst = std::max(worst, r);
      if (!(r <= 1e-12)) failed += " " + e.id.str();
    }
  return {bad_jacobi == 0 && failed.empty(), "Jacobi violations " + std::to_string(bad_jacobi) +
                                                 " of 1000 triples; max closure residual " + sci(worst) +
                                                 (failed.empty() ? "" : "; failing:" + failed)};
}

Outcome chart_roundtrips() {
  double fi = 0.0, inf = 0.0, rect = 0.0;
  std::string failed;
  for (const auto k : support::kAllCharts) {
    const Chart c = support::test_chart(k);
    const double a = support::forward_inverse_error(c, 1000, 1);
    const double b = support::inverse_forward_error(c, 1000, 2);
    const double r = support::rectification_error(c, 1000, 3);
    fi = std::max(fi, a);
    inf = std::max(inf, b);
    rect = std::max(rect, r);
    if (!(a <= 1e-10 && b <= 1e-10 && r <= 1e-9)) failed += " " + std::string(c.name());
  }
  return {failed.empty(), "13 charts x 1000 points: forward(inverse) " + sci(fi) + ", inverse(forward) " + sci(inf) +
                              ", rectification " + sci(rect) + (failed.empty() ? "" : "; failing:" + failed)};
}

Outcome emptiness() {
  std::string detail;
  bool ok = true;
  for (const char* id : {"P5.2", "P6.1", "P6.2"}) {
    const bool c = certify_emptiness(id, 100, 42);
    ok = ok && c;
    detail += std::string(id) + (c ? " certified " : " NOT certified ");
  }
  return {ok, detail + "(100 trials each)"};
}

Outcome appendix() {
  std::string detail, failed;
  const auto rows = appendix_reports(42);
  for (const auto& r : rows) {
    if (r.status == "NOTE") continue;
    if (!r.pass) failed += " " + r.class_id;
    if (r.class_id.find("example") != std::string::npos) detail += r.class_id + ": " + r.note + "; ";
  }
  detail += "dims";
  for (const auto& r : rows)
    if (r.status != "NOTE" && r.class_id.find("example") == std::string::npos)
      detail += " " + r.class_id + "=" + (r.detected_dim ? std::to_string(*r.detected_dim) : "?");
  return {failed.empty(), detail + (failed.empty() ? "" : "; failing:" + failed)};
}

Outcome detector_sanity() {
  using namespace gen;
  const auto pts = sample_points({}, kDetectionPoints, 42);
  auto constant = [](Covector c) {
    return CovectorField([c](const JetPoint&) { return std::array<Jet2, 4>{c[0], c[1], c[2], c[3]}; });
  };
  const int zero = detect_symmetry_algebra(constant({0, 0, 0, 0}), pts).dim;
  const auto t = detect_symmetry_algebra(constant({0, 0, 0, 1}), pts);
  bool t_ok = t.dim == 7;
  for (const auto& g : {e1, e2, e3, e4, e12, e13, e23}) t_ok = t_ok && projection_residual(t, g) <= 1e-8;

  const auto& e = find_class("P3.20");
  std::mt19937_64 rng(class_seed(42, "P3.20"));
  const ParamMap p = draw_params(e, rng, 1);
  const auto a = instantiate_potential(e, p, default_slots(e, p, rng, SlotFamily::Polynomial));
  const auto s = detect_symmetry_algebra(a, sample_domain(e, p, kDetectionPoints, rng()));
  bool s_ok = s.dim >= 3;
  for (const auto& g : {e12, e13, e23}) s_ok = s_ok && projection_residual(s, g) <= 1e-6;
  return {zero == 10 && t_ok && s_ok, "zero field dim " + std::to_string(zero) + "; (0,0,0,1) dim " +
                                          std::to_string(t.dim) + (t_ok ? " with translations+SO(3)" : " WRONG BASIS") +
                                          "; P3.20 dim " + std::to_string(s.dim) + (s_ok ? " containing SO(3)" : "")};
}

std::string run_binary(const std::string& cmd) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  if (pclose(f) != 0) out += "\n<nonzero exit>";
  return out;
}

Outcome determinism() {
#ifdef MINKPOT_BINARY
  const std::string cmd = std::string("\"") + MINKPOT_BINARY + "\" verify --all --seed 42 --format json";
  const std::string a = run_binary(cmd), b = run_binary(cmd);
  const bool ok = !a.empty() && a == b && a.find("<nonzero exit>") == std::string::npos;
  return {ok, "two runs, " + std::to_string(a.size()) + " bytes, " + (a == b ? "byte-identical" : "DIFFERENT")};
#else
  return {false, "minkpot binary not built (MINKPOT_BUILD_TOOLS=OFF)"};
#endif
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"central contract: verify --all", central_contract},
      {"closedness", closedness},
      {"AD oracle", ad_oracle},
      {"algebra health", algebra_health},
      {"chart roundtrips and rectification", chart_roundtrips},
      {"emptiness certificates", emptiness},
      {"appendix cross-checks", appendix},
      {"detector sanity", detector_sanity},
      {"determinism", determinism},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    failures += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
