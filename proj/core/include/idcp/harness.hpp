#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "idcp/metrics.hpp"
#include "idcp/solver.hpp"

namespace idcp {

enum class WeightRegime {
    LowRange,     // eta in (-1, 1]
    NonNegative,  // eta in [0, +inf)
};

struct HarnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A hypothesis-satisfying random star instance: structure condition, regular
/// weight, both packings weighted Delaunay, all circles inside the disk
/// (certified at construction by rejection sampling).
struct StarInstance {
    Triangulation t;
    WeightAssignment eta;
    WeightRegime regime = WeightRegime::LowRange;
    RadiusAssignment r;      // hyperbolic
    RadiusAssignment r_bar;  // hyperbolic
    DiskLayout layout_r;     // fan layout, v0 at the origin
    DiskLayout layout_r_bar;
    std::uint64_t seed = 0;
};

StarInstance random_star_instance(int n, WeightRegime regime, std::uint64_t seed,
                                  int rejection_budget = 10000);

enum class TrialOutcome {
    Vacuous,            // hypothesis branch not satisfied
    Satisfied,          // hypothesis and strict conclusion hold
    NumericalBoundary,  // conclusion within 1e-12 of the strict boundary
    Violated,
};

struct TrialReport {
    long trials = 0;
    long non_vacuous = 0;
    long violations = 0;
    long numerical_boundary = 0;
    long skipped = 0;
    /// Smallest distance from the strict-inequality boundary over all
    /// non-vacuous trials.
    double worst_margin = std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> violation_seeds;

    bool pass() const { return violations == 0; }
    void record(TrialOutcome outcome, double margin, std::uint64_t seed);
    void merge(const TrialReport& other);
};

/// Hyperbolic curvature at the interior vertex v0 of a star packing.
double star_interior_curvature(const StarInstance& inst, const RadiusAssignment& radii);

/// Maximum principle for w = u_bar - u on a star instance.
TrialOutcome check_max_principle(const StarInstance& inst, double* margin = nullptr);
TrialReport run_max_principle_suite(int n, WeightRegime regime, int trials, std::uint64_t seed);

/// Discrete Schwarz-Ahlfors check on a compact triangulation with boundary.
/// Vacuous unless both packings are weighted Delaunay, the interior curvature
/// comparison holds one way and the boundary radius comparison the same way.
TrialOutcome check_schwarz_lemma(const Triangulation& t, const WeightAssignment& eta,
                                 const RadiusAssignment& r, const RadiusAssignment& r_bar,
                                 double* margin = nullptr);
/// Constructs comparison pairs via the solver (shrunken or enlarged boundary
/// radii, equal interior curvature targets) and checks the conclusion.
TrialReport run_schwarz_suite(int rings, WeightRegime regime, int trials, std::uint64_t seed);

/// Similarity-scaling inequalities: ratio monotonicity of tanh(r/2) under
/// z -> lambda z, and strict monotonicity of the hyperbolic radius in the
/// Euclidean radius.
TrialReport check_scaling_lemmas(std::uint64_t seed, int trials);

/// Generalized-radius version, including circles meeting the unit circle.
TrialReport check_generalized_scaling(std::uint64_t seed, int trials);

/// Generalized maximum principle: the r-circle set is scaled by mu > 1 so
/// some circles may leave the disk (each still meeting it); w uses
/// generalized-radius ratios.
TrialOutcome check_generalized_max_principle(const StarInstance& inst, double mu,
                                             double* margin = nullptr);
TrialReport run_generalized_max_principle_suite(int n, WeightRegime regime, int trials,
                                                std::uint64_t seed);

struct RigidityOptions {
    int rings = 3;
    /// Weight regime to sample; nullopt means the tangential case eta = 1.
    std::optional<WeightRegime> regime;
    int inits = 10;
    int trials = 1;
    double mu_probe = 1.05;
    double agreement_tol = 1e-8;
};

/// Solves K = 0 at all interior vertices from several random initializations
/// with fixed boundary radii; all converged label sets must agree. Also runs
/// the mu-scaling probe on the developed circle set.
TrialReport rigidity_experiment(const RigidityOptions& opts, std::uint64_t seed);

}  // namespace idcp
