#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minkpot/catalog.hpp"

namespace minkpot {

inline constexpr double kVerifyTolerance = 1e-9;
inline constexpr double kSingularValueTolerance = 1e-8;
inline constexpr int kDetectionPoints = 40;
inline constexpr double kEmptinessThreshold = 1e-3;

// Rejection sampling from the box [-2, 2]^4. An empty domain function means
// the whole box. Throws DomainTooThin when fewer than 1% of the first 1e5
// proposals are accepted.
std::vector<SpacetimePoint> sample_points(const Domain& domain, int n, std::uint64_t seed);
std::vector<SpacetimePoint> sample_domain(const ClassEntry& entry, const ParamMap& params, int n,
                                          std::uint64_t seed);

struct GeneratorResidual {
  std::string label;
  double max_residual = 0.0;
};

struct InvarianceResult {
  double max_residual = 0.0;
  std::vector<GeneratorResidual> per_generator;
};

// Max over points and generators of |L_g A(x)|_inf / scale(x).
InvarianceResult invariance_residual(const CovectorField& a, const std::vector<PoincareGenerator>& gens,
                                     const std::vector<SpacetimePoint>& points);
InvarianceResult invariance_residual(const TwoFormField& f, const std::vector<PoincareGenerator>& gens,
                                     const std::vector<SpacetimePoint>& points);

// Max over points of the scaled cyclic sums of dA (or F).
double closedness_max(const CovectorField& a, const std::vector<SpacetimePoint>& points);
double closedness_max(const TwoFormField& f, const std::vector<SpacetimePoint>& points);

struct SymmetryBasis {
  int dim = 0;
  std::vector<PoincareGenerator> basis; // orthonormal coefficient vectors
  std::array<double, 10> singular_values{};
};

// Stacks L_e_k evaluated at every point, rows scaled by 1 / scale(x), and
// returns the right-singular subspace with sigma <= tol_sv * sigma_max.
// Throws InsufficientPoints for fewer than 5 points.
SymmetryBasis detect_symmetry_algebra(const CovectorField& a, const std::vector<SpacetimePoint>& points,
                                      double tol_sv = kSingularValueTolerance);
SymmetryBasis detect_symmetry_algebra(const TwoFormField& f, const std::vector<SpacetimePoint>& points,
                                      double tol_sv = kSingularValueTolerance);

// Distance of g / |g| from span(basis), all in the 10-coefficient Euclidean sense.
double projection_residual(const SymmetryBasis& s, const PoincareGenerator& g);

// Least-squares residual |g - G c| / (1 + |g|) of g against span(gens).
double span_residual(const std::vector<PoincareGenerator>& gens, const PoincareGenerator& g);

// Max span residual of all pairwise brackets of gens.
double closure_residual(const std::vector<PoincareGenerator>& gens);

// For P5.2, P6.1 and P6.2: true iff every random nonzero instance of the
// parent class violates the extending generator by more than 1e-3 * scale.
// Throws NotMarkedEmpty for other classes.
bool certify_emptiness(const ClassEntry& entry, int trials, std::uint64_t seed);
bool certify_emptiness(std::string_view id, int trials, std::uint64_t seed);

struct FiniteDifferenceResult {
  std::array<std::array<double, 4>, 4> da{};                    // da[i][j] = d_j A_i
  std::array<std::array<std::array<double, 4>, 4>, 4> d2a{};    // d2a[i][j][k]
};

// Central differences; off-diagonal second derivatives use the four-point
// stencil. Throws OutOfDomain when some x +- h e_k leaves the domain.
FiniteDifferenceResult finite_difference_oracle(const CovectorField& a, const SpacetimePoint& x,
                                                double h);

struct VerificationReport {
  std::string class_id;
  int dim = 0;
  int n_points = 0;
  double max_residual = 0.0;
  std::vector<GeneratorResidual> per_generator;
  double closedness_max = 0.0;
  std::optional<int> detected_dim;
  bool pass = false;
  std::uint64_t seed = 0;
  std::string status; // PASS, FAIL, SKIP(EMPTY), ZERO-FIELD
  std::string note;
};

struct VerifyOptions {
  int draws = 3;
  int points = 100;
  std::uint64_t seed = 42;
  double tol = kVerifyTolerance;
  bool detect = true;
  SlotFamily family = SlotFamily::Polynomial;
  bool mixed_families = true; // draw 2 uses elementary slots
};

// Per-class seed derived from the run seed and the class id.
std::uint64_t class_seed(std::uint64_t seed, std::string_view id);

// Random admissible draws with default slots. Empty classes give SKIP(EMPTY).
VerificationReport verify_class(const ClassEntry& entry, const VerifyOptions& options);

// One explicit instance.
VerificationReport verify_instance(const ClassEntry& entry, const ParamMap& params, const SlotSet& slots,
                                   const VerifyOptions& options);

// Every registry entry in registry order.
std::vector<VerificationReport> verify_all(const VerifyOptions& options);

enum class AppendixExample { C319, C416 };

// Max relative deviation between the worked example and its closed form.
VerificationReport appendix_crosscheck(AppendixExample example, std::uint64_t seed = 42);

// The two example rows, one property row per Maxwell class, and note rows.
// Note rows have status NOTE and do not count towards the exit code.
std::vector<VerificationReport> appendix_reports(std::uint64_t seed = 42);

// Expected exact dimension of each Maxwell class under genericity.
int maxwell_expected_dim(const ClassId& id);

} // namespace minkpot
