#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "idcp/metrics.hpp"

namespace idcp {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Curvature as a function of labels: u -> radii -> edge lengths -> angles -> K.
CurvatureVector curvature_map(const Triangulation& t, const WeightAssignment& eta,
                              const LabelAssignment& u);

/// dK_interior / du_interior by central finite differences. Columns follow the
/// order of `interior`. On a degenerate probe the step shrinks once by 1e-2.
Eigen::MatrixXd curvature_jacobian(const Triangulation& t, const WeightAssignment& eta,
                                   const LabelAssignment& u,
                                   const std::vector<VertexId>& interior, double h_fd = 1e-6);

struct SolveConfig {
    std::map<VertexId, double> target_K;  // one entry per interior vertex
    int max_iterations = 50;
    double residual_tol = 1e-10;
    double step_damping = 1.0;  // in (0,1]
};

struct SolveReport {
    LabelAssignment u;  // full label set, boundary fixed
    std::vector<double> residual_history;
    bool converged = false;
    int iterations = 0;
    int degenerate_incidents = 0;
    double condition_estimate = 0.0;
    std::string message;
};

/// Damped Newton on the interior labels; boundary labels of `initial` are
/// held fixed (Dirichlet data).
SolveReport solve_prescribed_curvature(const Triangulation& t, const WeightAssignment& eta,
                                       const SolveConfig& config, const LabelAssignment& initial);

struct LayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DiskLayout {
    std::map<VertexId, Complex> position;

    Complex at(VertexId v) const;
};

inline constexpr double kHolonomyTol = 1e-6;

/// Develops a flat-interior PH metric into the Poincare disk: seed face with
/// one vertex at the origin and one edge on the positive real axis, then
/// breadth-first propagation across shared edges.
DiskLayout layout_in_disk(const Triangulation& t, const EdgeLengthTable& lengths,
                          int seed_face = 0);

}  // namespace idcp
