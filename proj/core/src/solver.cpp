#include "idcp/solver.hpp"

#include <cmath>
#include <queue>

namespace idcp {

CurvatureVector curvature_map(const Triangulation& t, const WeightAssignment& eta,
                              const LabelAssignment& u) {
    RadiusAssignment r = radii_from_labels(u);
    EdgeLengthTable len = edge_lengths(t, eta, r);
    return curvature(t, triangle_angle_table(t, len));
}

namespace {

Eigen::MatrixXd jacobian_at_step(const Triangulation& t, const WeightAssignment& eta,
                                 const LabelAssignment& u, const std::vector<VertexId>& interior,
                                 double h) {
    const int n = static_cast<int>(interior.size());
    Eigen::MatrixXd J(n, n);
    LabelAssignment probe = u;
    for (int j = 0; j < n; ++j) {
        double u0 = u.at(interior[j]);
        probe.u[interior[j]] = u0 + h;
        CurvatureVector kp = curvature_map(t, eta, probe);
        probe.u[interior[j]] = u0 - h;
        CurvatureVector km = curvature_map(t, eta, probe);
        probe.u[interior[j]] = u0;
        for (int i = 0; i < n; ++i)
            J(i, j) = (kp.at(interior[i]) - km.at(interior[i])) / (2.0 * h);
    }
    return J;
}

}  // namespace

Eigen::MatrixXd curvature_jacobian(const Triangulation& t, const WeightAssignment& eta,
                                   const LabelAssignment& u,
                                   const std::vector<VertexId>& interior, double h_fd) {
    // A probe can degenerate a triangle or push a label past zero; retry once
    // with a smaller step.
    try {
        return jacobian_at_step(t, eta, u, interior, h_fd);
    } catch (const DegenerateTriangleError&) {
        return jacobian_at_step(t, eta, u, interior, h_fd * 1e-2);
    } catch (const MeshError&) {
        return jacobian_at_step(t, eta, u, interior, h_fd * 1e-2);
    }
}

SolveReport solve_prescribed_curvature(const Triangulation& t, const WeightAssignment& eta,
                                       const SolveConfig& config, const LabelAssignment& initial) {
    const std::vector<VertexId> interior = t.interior_vertices();
    for (VertexId v : interior)
        if (config.target_K.find(v) == config.target_K.end())
            throw SolverError("missing curvature target for interior vertex " + std::to_string(v));
    if (!(config.residual_tol > 0.0)) throw SolverError("residual_tol must be positive");

    const int n = static_cast<int>(interior.size());
    SolveReport rep;
    rep.u = initial;

    auto residual_of = [&](const LabelAssignment& u, Eigen::VectorXd* out) {
        CurvatureVector k = curvature_map(t, eta, u);
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            double d = k.at(interior[i]) - config.target_K.at(interior[i]);
            if (out) (*out)(i) = d;
            worst = std::max(worst, std::abs(d));
        }
        return worst;
    };

    auto labels_valid = [&](const LabelAssignment& u) {
        if (u.geometry != Geometry::Hyperbolic) return true;
        for (VertexId v : interior)
            if (!(u.at(v) < 0.0)) return false;
        return true;
    };

    Eigen::VectorXd res(n);
    double residual;
    try {
        residual = residual_of(rep.u, &res);
    } catch (const DegenerateTriangleError& e) {
        throw SolverError(std::string("initial labels are degenerate: ") + e.what());
    }
    rep.residual_history.push_back(residual);

    for (int it = 0; it < config.max_iterations; ++it) {
        if (residual <= config.residual_tol) {
            rep.converged = true;
            rep.message = "converged";
            return rep;
        }
        Eigen::MatrixXd J;
        try {
            J = curvature_jacobian(t, eta, rep.u, interior);
        } catch (const std::exception& e) {
            rep.message = std::string("Jacobian evaluation failed: ") + e.what();
            return rep;
        }
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(J);
        rep.condition_estimate = 1.0 / std::max(lu.rcond(), 1e-300);
        if (lu.rcond() < 1e-14) {
            rep.message = "singular Jacobian (condition ~" +
                          std::to_string(rep.condition_estimate) + ")";
            return rep;
        }
        Eigen::VectorXd step = lu.solve(-res);

        double scale = config.step_damping;
        bool accepted = false;
        for (int halving = 0; halving <= 30; ++halving) {
            LabelAssignment trial = rep.u;
            for (int i = 0; i < n; ++i) trial.u[interior[i]] = rep.u.at(interior[i]) + scale * step(i);
            if (!labels_valid(trial)) {
                ++rep.degenerate_incidents;
                scale *= 0.5;
                continue;
            }
            Eigen::VectorXd res_try(n);
            double r_try;
            try {
                r_try = residual_of(trial, &res_try);
            } catch (const DegenerateTriangleError&) {
                ++rep.degenerate_incidents;
                scale *= 0.5;
                continue;
            }
            if (r_try < residual) {
                rep.u = trial;
                res = res_try;
                residual = r_try;
                accepted = true;
                break;
            }
            scale *= 0.5;
        }
        rep.iterations = it + 1;
        rep.residual_history.push_back(residual);
        if (!accepted) {
            rep.message = "line search stalled at residual " + std::to_string(residual);
            return rep;
        }
    }
    rep.converged = residual <= config.residual_tol;
    rep.message = rep.converged ? "converged" : "max iterations reached";
    return rep;
}

Complex DiskLayout::at(VertexId v) const {
    auto it = position.find(v);
    if (it == position.end()) throw LayoutError("no position for vertex " + std::to_string(v));
    return it->second;
}

DiskLayout layout_in_disk(const Triangulation& t, const EdgeLengthTable& lengths, int seed_face) {
    if (lengths.geometry != Geometry::Hyperbolic)
        throw LayoutError("layout_in_disk: PH metric required");
    if (seed_face < 0 || seed_face >= static_cast<int>(t.num_faces()))
        throw LayoutError("layout_in_disk: bad seed face");

    DiskLayout layout;
    auto placed = [&](VertexId v) { return layout.position.count(v) != 0; };

    // Seed face: a at the origin, b on the positive real axis, c above.
    {
        const auto& f = t.faces()[seed_face];
        double lab = lengths.at(f[0], f[1]);
        double lac = lengths.at(f[0], f[2]);
        double lbc = lengths.at(f[1], f[2]);
        double alpha = triangle_angles(lab, lac, lbc, Geometry::Hyperbolic, seed_face)[0];
        layout.position[f[0]] = Complex(0, 0);
        layout.position[f[1]] = Complex(std::tanh(lab / 2.0), 0);
        layout.position[f[2]] = std::polar(std::tanh(lac / 2.0), alpha);
    }

    std::vector<bool> visited(t.num_faces(), false);
    visited[seed_face] = true;
    std::queue<int> q;
    q.push(seed_face);

    while (!q.empty()) {
        int fi = q.front();
        q.pop();
        const auto& f = t.faces()[fi];
        for (int k = 0; k < 3; ++k) {
            VertexId a = f[k], b = f[(k + 1) % 3], y = f[(k + 2) % 3];
            EdgeKey e(a, b);
            for (int nb : t.incident_faces(e)) {
                if (visited[nb]) continue;
                visited[nb] = true;
                q.push(nb);
                const auto& g = t.faces()[nb];
                VertexId x = -1;
                for (VertexId v : g)
                    if (v != a && v != b) x = v;

                // Translate a to the origin; geodesics through the origin are
                // straight lines, so the new vertex sits at Euclidean radius
                // tanh(l/2) at an angle off the image of b, on the opposite
                // side of the shared edge from y.
                DiskMobius m = mobius_to_origin(layout.at(a));
                Complex bp = apply_mobius(m, layout.at(b));
                Complex yp = apply_mobius(m, layout.at(y));
                double lab = lengths.at(a, b);
                double lax = lengths.at(a, x);
                double lbx = lengths.at(b, x);
                double gamma = triangle_angles(lab, lax, lbx, Geometry::Hyperbolic, nb)[0];
                double phi = std::arg(bp);
                double side_y = std::imag(std::conj(bp) * yp);
                double sign = side_y > 0.0 ? -1.0 : 1.0;
                Complex xp = std::polar(std::tanh(lax / 2.0), phi + sign * gamma);
                Complex pos = apply_mobius_inverse(m, xp);
                if (!(std::abs(pos) < 1.0))
                    throw LayoutError("layout_in_disk: position escaped the disk");
                if (placed(x)) {
                    double mismatch = hyp_distance(layout.at(x), pos);
                    if (mismatch > kHolonomyTol)
                        throw LayoutError("layout_in_disk: holonomy mismatch " +
                                          std::to_string(mismatch) + " at vertex " +
                                          std::to_string(x));
                } else {
                    layout.position[x] = pos;
                }
            }
        }
    }

    if (layout.position.size() != t.num_vertices())
        throw LayoutError("layout_in_disk: triangulation not face-connected from seed");
    return layout;
}

}  // namespace idcp
