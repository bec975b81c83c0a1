#include "idcp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace idcp {

namespace {

constexpr double kStrictBoundary = 1e-12;
constexpr double kHypothesisTol = 1e-8;   // solver-constructed curvature equality
constexpr double kConclusionSlack = 1e-10;

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(Rng& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

bool face_structure_ok(const Triangulation& t, const WeightAssignment& eta, int face_index) {
    const auto& f = t.faces()[face_index];
    double e01 = eta.at(f[0], f[1]);
    double e02 = eta.at(f[0], f[2]);
    double e12 = eta.at(f[1], f[2]);
    return e01 + e02 * e12 >= 0.0 && e02 + e01 * e12 >= 0.0 && e12 + e01 * e02 >= 0.0;
}

WeightAssignment sample_weights(Rng& rng, const Triangulation& t, WeightRegime regime,
                                int budget) {
    for (int attempt = 0; attempt < budget; ++attempt) {
        WeightAssignment eta;
        if (regime == WeightRegime::NonNegative) {
            for (const auto& e : t.edges()) eta.set(e.a, e.b, uniform(rng, 0.0, 3.0));
        } else {
            // Weights in [0,1] satisfy the structure condition automatically;
            // negative values are then injected one edge at a time and kept
            // only when the faces containing that edge still satisfy it.
            // Global rejection is hopeless beyond a single star.
            for (const auto& e : t.edges()) eta.set(e.a, e.b, uniform(rng, 0.0, 1.0));
            for (const auto& e : t.edges()) {
                if (uniform(rng, 0.0, 1.0) >= 0.25) continue;
                double old = eta.at(e.a, e.b);
                eta.set(e.a, e.b, uniform(rng, -0.4, 0.0));
                bool ok = true;
                for (int fi : t.incident_faces(e)) ok = ok && face_structure_ok(t, eta, fi);
                if (!ok) eta.set(e.a, e.b, old);
            }
        }
        if (!check_structure_condition(t, eta).pass) continue;
        if (!check_regular_weight(t, eta).pass) continue;
        return eta;
    }
    throw HarnessError("sample_weights: rejection budget exhausted");
}

RadiusAssignment sample_radii(Rng& rng, const Triangulation& t, double lo, double hi) {
    RadiusAssignment r;
    r.geometry = Geometry::Hyperbolic;
    for (VertexId v : t.vertices()) r.r[v] = log_uniform(rng, lo, hi);
    return r;
}

bool packing_certificates(const Triangulation& t, const WeightAssignment& eta,
                          const RadiusAssignment& radii) {
    try {
        return is_weighted_delaunay_packing(t, eta, radii).pass;
    } catch (const DegenerateTriangleError&) {
        return false;
    }
}

CurvatureVector curvature_of(const Triangulation& t, const WeightAssignment& eta,
                             const RadiusAssignment& radii) {
    EdgeLengthTable len = edge_lengths(t, eta, radii);
    return curvature(t, triangle_angle_table(t, len));
}

/// Fan layout of a star packing with v0 at the origin; does not require the
/// fan to close up (K_0 need not vanish).
DiskLayout star_fan_layout(const Triangulation& t, const EdgeLengthTable& len) {
    const int n = static_cast<int>(t.num_faces());
    DiskLayout layout;
    layout.position[0] = Complex(0, 0);
    double theta = 0.0;
    for (int i = 1; i <= n; ++i) {
        layout.position[i] = std::polar(std::tanh(len.at(0, i) / 2.0), theta);
        int j = (i == n) ? 1 : i + 1;
        theta += triangle_angles(len.at(0, i), len.at(0, j), len.at(i, j),
                                 Geometry::Hyperbolic, i - 1)[0];
    }
    return layout;
}

bool circles_inside_disk(const DiskLayout& layout, const RadiusAssignment& radii) {
    for (const auto& [v, p] : layout.position) {
        EuclideanCircle c = hyp_to_euc_circle({p, radii.at(v)});
        if (!(std::abs(c.center) + c.radius < 1.0)) return false;
    }
    return true;
}

TrialOutcome classify(double margin) {
    if (margin > kStrictBoundary) return TrialOutcome::Satisfied;
    if (margin >= -kStrictBoundary) return TrialOutcome::NumericalBoundary;
    return TrialOutcome::Violated;
}

}  // namespace

void TrialReport::record(TrialOutcome outcome, double margin, std::uint64_t trial_seed) {
    ++trials;
    if (outcome == TrialOutcome::Vacuous) return;
    ++non_vacuous;
    worst_margin = std::min(worst_margin, margin);
    if (outcome == TrialOutcome::NumericalBoundary) ++numerical_boundary;
    if (outcome == TrialOutcome::Violated) {
        ++violations;
        violation_seeds.push_back(trial_seed);
    }
}

void TrialReport::merge(const TrialReport& other) {
    trials += other.trials;
    non_vacuous += other.non_vacuous;
    violations += other.violations;
    numerical_boundary += other.numerical_boundary;
    skipped += other.skipped;
    worst_margin = std::min(worst_margin, other.worst_margin);
    violation_seeds.insert(violation_seeds.end(), other.violation_seeds.begin(),
                           other.violation_seeds.end());
}

StarInstance random_star_instance(int n, WeightRegime regime, std::uint64_t seed,
                                  int rejection_budget) {
    if (n < 3) throw HarnessError("random_star_instance: n must be >= 3");
    Rng rng(seed);
    StarInstance inst;
    inst.t = star_polygon(n);
    inst.regime = regime;
    inst.seed = seed;
    inst.eta = sample_weights(rng, inst.t, regime, rejection_budget);

    auto sample_packing = [&](RadiusAssignment& out, DiskLayout& layout) {
        for (int attempt = 0; attempt < rejection_budget; ++attempt) {
            RadiusAssignment r = sample_radii(rng, inst.t, 0.05, 0.5);
            if (!packing_certificates(inst.t, inst.eta, r)) continue;
            EdgeLengthTable len = edge_lengths_h(inst.t, inst.eta, r);
            DiskLayout l;
            try {
                l = star_fan_layout(inst.t, len);
            } catch (const DegenerateTriangleError&) {
                continue;
            }
            if (!circles_inside_disk(l, r)) continue;
            out = r;
            layout = l;
            return true;
        }
        return false;
    };

    if (!sample_packing(inst.r, inst.layout_r))
        throw HarnessError("random_star_instance: rejection budget exhausted (seed " +
                           std::to_string(seed) + ")");

    // Resample the comparison packing a few times, preferring one that makes
    // the maximum-principle hypothesis non-vacuous; independent draws satisfy
    // it only rarely.
    const double k0 = curvature_of(inst.t, inst.eta, inst.r).at(0);
    const double u0 = label_from_radius(inst.r.at(0), Geometry::Hyperbolic);
    bool have_bar = false;
    for (int attempt = 0; attempt < 50; ++attempt) {
        RadiusAssignment rb;
        DiskLayout lb;
        if (!sample_packing(rb, lb)) break;
        inst.r_bar = rb;
        inst.layout_r_bar = lb;
        have_bar = true;
        double k0b = curvature_of(inst.t, inst.eta, rb).at(0);
        double w0 = label_from_radius(rb.at(0), Geometry::Hyperbolic) - u0;
        if ((k0 >= k0b && w0 > 0.0) || (k0 <= k0b && w0 < 0.0)) break;
    }
    if (!have_bar)
        throw HarnessError("random_star_instance: rejection budget exhausted (seed " +
                           std::to_string(seed) + ")");
    return inst;
}

double star_interior_curvature(const StarInstance& inst, const RadiusAssignment& radii) {
    return curvature_of(inst.t, inst.eta, radii).at(0);
}

TrialOutcome check_max_principle(const StarInstance& inst, double* margin_out) {
    LabelAssignment u = labels_from_radii(inst.r);
    LabelAssignment ub = labels_from_radii(inst.r_bar);
    auto w = [&](VertexId v) { return ub.at(v) - u.at(v); };

    double k0 = star_interior_curvature(inst, inst.r);
    double k0b = star_interior_curvature(inst, inst.r_bar);

    const int n = static_cast<int>(inst.t.num_faces());
    double margin;
    if (k0 >= k0b && w(0) > 0.0) {
        double wmax = -std::numeric_limits<double>::infinity();
        for (int i = 1; i <= n; ++i) wmax = std::max(wmax, w(i));
        margin = wmax - w(0);
    } else if (k0 <= k0b && w(0) < 0.0) {
        double wmin = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= n; ++i) wmin = std::min(wmin, w(i));
        margin = w(0) - wmin;
    } else {
        return TrialOutcome::Vacuous;
    }
    if (margin_out) *margin_out = margin;
    return classify(margin);
}

TrialReport run_max_principle_suite(int n, WeightRegime regime, int trials, std::uint64_t seed) {
    TrialReport rep;
    for (int i = 0; i < trials; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        StarInstance inst;
        try {
            inst = random_star_instance(n, regime, s);
        } catch (const HarnessError&) {
            ++rep.trials;
            ++rep.skipped;
            continue;
        }
        double margin = 0.0;
        TrialOutcome outcome = check_max_principle(inst, &margin);
        rep.record(outcome, margin, s);
    }
    return rep;
}

TrialOutcome check_schwarz_lemma(const Triangulation& t, const WeightAssignment& eta,
                                 const RadiusAssignment& r, const RadiusAssignment& r_bar,
                                 double* margin_out) {
    if (!packing_certificates(t, eta, r) || !packing_certificates(t, eta, r_bar))
        return TrialOutcome::Vacuous;

    CurvatureVector k = curvature_of(t, eta, r);
    CurvatureVector kb = curvature_of(t, eta, r_bar);

    bool k_ge = true, k_le = true;
    for (VertexId v : t.interior_vertices()) {
        if (k.at(v) < kb.at(v) - kHypothesisTol) k_ge = false;
        if (k.at(v) > kb.at(v) + kHypothesisTol) k_le = false;
    }
    bool b_ge = true, b_le = true;
    for (VertexId v : t.boundary_vertices()) {
        if (r.at(v) < r_bar.at(v) - kConclusionSlack) b_ge = false;
        if (r.at(v) > r_bar.at(v) + kConclusionSlack) b_le = false;
    }

    double margin;
    if (k_ge && b_ge) {
        margin = std::numeric_limits<double>::infinity();
        for (VertexId v : t.vertices()) margin = std::min(margin, r.at(v) - r_bar.at(v));
    } else if (k_le && b_le) {
        margin = std::numeric_limits<double>::infinity();
        for (VertexId v : t.vertices()) margin = std::min(margin, r_bar.at(v) - r.at(v));
    } else {
        return TrialOutcome::Vacuous;
    }
    if (margin_out) *margin_out = margin;
    if (margin < -kConclusionSlack) return TrialOutcome::Violated;
    if (margin <= kStrictBoundary) return TrialOutcome::NumericalBoundary;
    return TrialOutcome::Satisfied;
}

TrialReport run_schwarz_suite(int rings, WeightRegime regime, int trials, std::uint64_t seed) {
    TrialReport rep;
    Triangulation t = hex_disk_triangulation(rings);
    for (int i = 0; i < trials; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        Rng rng(s);
        try {
            WeightAssignment eta = sample_weights(rng, t, regime, 10000);
            RadiusAssignment r;
            bool found = false;
            for (int attempt = 0; attempt < 10000 && !found; ++attempt) {
                r = sample_radii(rng, t, 0.15, 0.35);
                found = packing_certificates(t, eta, r);
            }
            if (!found) {
                ++rep.trials;
                ++rep.skipped;
                continue;
            }

            // Comparison packing: scale the boundary radii and re-solve the
            // interior for the same curvature targets.
            bool shrink = (i % 2 == 0);
            double c = shrink ? uniform(rng, 0.75, 0.95) : uniform(rng, 1.05, 1.25);
            CurvatureVector k = curvature_of(t, eta, r);
            SolveConfig cfg;
            for (VertexId v : t.interior_vertices()) cfg.target_K[v] = k.at(v);

            LabelAssignment init = labels_from_radii(r);
            for (VertexId v : t.boundary_vertices())
                init.u[v] = label_from_radius(c * r.at(v), Geometry::Hyperbolic);
            SolveReport sol = solve_prescribed_curvature(t, eta, cfg, init);
            if (!sol.converged) {
                ++rep.trials;
                ++rep.skipped;
                continue;
            }
            RadiusAssignment r_bar = radii_from_labels(sol.u);
            double margin = 0.0;
            TrialOutcome outcome = check_schwarz_lemma(t, eta, r, r_bar, &margin);
            rep.record(outcome, margin, s);
        } catch (const std::exception&) {
            ++rep.trials;
            ++rep.skipped;
        }
    }
    return rep;
}

TrialReport check_scaling_lemmas(std::uint64_t seed, int trials) {
    TrialReport rep;
    Rng rng(seed);
    auto ratio_f15 = [](double x, double y, double lam) {
        return lam * (1.0 - x * y + std::sqrt((1.0 - x * x) * (1.0 - y * y))) /
               (1.0 - lam * lam * x * y +
                std::sqrt((1.0 - lam * lam * x * x) * (1.0 - lam * lam * y * y)));
    };
    for (int i = 0; i < trials; ++i) {
        double y = uniform(rng, 0.05, 0.95);
        double x = uniform(rng, -y + 1e-6, y - 1e-6);
        double lam = uniform(rng, 0.01, 0.99);

        // f(lambda) < 0 strictly, and f(1) = 0.
        double f = ratio_f15(x, y, lam) - lam;
        rep.record(classify(-f), -f, seed);
        double f1 = ratio_f15(x, y, 1.0) - 1.0;
        rep.record(std::abs(f1) <= 1e-12 ? TrialOutcome::Satisfied : TrialOutcome::Violated,
                   1e-12 - std::abs(f1), seed);

        // Strict monotonicity of the hyperbolic radius in the Euclidean one,
        // with the neighbor circle C0 pinned at the origin and eta01 fixed.
        double r0e = uniform(rng, 0.05, 0.6);
        double eta01 = uniform(rng, -0.9, 3.0);
        double prev = -1.0;
        double mono_margin = std::numeric_limits<double>::infinity();
        int points = 0;
        for (int k = 1; k <= 16; ++k) {
            double r1e = 0.02 * k;
            double L2 = r0e * r0e + r1e * r1e + 2.0 * eta01 * r0e * r1e;
            if (L2 <= 0.0) continue;
            double L = std::sqrt(L2);
            if (L + r1e >= 0.999) break;
            if (L - r1e <= -0.999) continue;  // nested over the origin; skip
            double r1 = euc_to_hyp_circle({Complex(L, 0), r1e}).radius;
            if (points > 0) mono_margin = std::min(mono_margin, r1 - prev);
            prev = r1;
            ++points;
        }
        if (points >= 3) rep.record(classify(mono_margin), mono_margin, seed);
    }
    return rep;
}

TrialReport check_generalized_scaling(std::uint64_t seed, int trials) {
    TrialReport rep;
    Rng rng(seed);
    for (int i = 0; i < trials; ++i) {
        double r0e = uniform(rng, 0.05, 0.7);
        EuclideanCircle c0{Complex(0, 0), r0e};

        bool crossing = (i % 2 == 0);
        double L, r1e;
        int guard = 0;
        for (;; ++guard) {
            if (guard > 1000) break;
            L = uniform(rng, 0.15, 1.4);
            r1e = crossing ? uniform(rng, std::max(1.05 - L, 0.05), 1.2)
                           : uniform(rng, 0.05, std::max(0.9 - L, 0.06));
            if (crossing && L + r1e <= 1.0) continue;
            if (!crossing && L + r1e >= 0.95) continue;
            double eta01 = (L * L - r0e * r0e - r1e * r1e) / (2.0 * r0e * r1e);
            if (eta01 <= -1.0 + 1e-6) continue;
            break;
        }
        if (guard > 1000) {
            ++rep.trials;
            ++rep.skipped;
            continue;
        }
        EuclideanCircle c1{Complex(L, 0), r1e};
        double lam_max = 0.999 / (L + r1e);
        double lam = uniform(rng, 0.01, std::min(0.99, 0.99 * lam_max));

        GeneralizedRadius rho0 = generalized_radius(c0);
        GeneralizedRadius rho1 = generalized_radius(c1);
        GeneralizedRadius rho0l = generalized_radius(scale_circle(lam, c0));
        GeneralizedRadius rho1l = generalized_radius(scale_circle(lam, c1));

        GenRadiusRatio lhs = gen_radius_ratio(rho1l, rho0l);
        GenRadiusRatio rhs = gen_radius_ratio(rho1, rho0);
        bool ok = lhs.strictly_less_than(rhs);
        double margin = (rhs.kind == RatioKind::Value && lhs.kind == RatioKind::Value)
                            ? rhs.value - lhs.value
                            : std::numeric_limits<double>::infinity();
        rep.record(ok ? classify(margin) : TrialOutcome::Violated, ok ? margin : -1.0, seed);
    }
    return rep;
}

TrialOutcome check_generalized_max_principle(const StarInstance& inst, double mu,
                                             double* margin_out) {
    if (!(mu >= 1.0)) throw HarnessError("check_generalized_max_principle: mu must be >= 1");

    const int n = static_cast<int>(inst.t.num_faces());
    std::vector<double> ew(n + 1);
    for (int v = 0; v <= n; ++v) {
        EuclideanCircle er = hyp_to_euc_circle({inst.layout_r.at(v), inst.r.at(v)});
        EuclideanCircle scaled = scale_circle(mu, er);
        if (!(mu * (std::abs(er.center) - er.radius) < 1.0))
            throw HarnessError("scaled circle no longer meets the disk");
        EuclideanCircle eb = hyp_to_euc_circle({inst.layout_r_bar.at(v), inst.r_bar.at(v)});
        GenRadiusRatio ratio = gen_radius_ratio(generalized_radius(eb), generalized_radius(scaled));
        // rho_bar finite, so the ratio is always a plain value (0 when rho is
        // an infinity, i.e. w = -inf).
        ew[v] = ratio.value;
    }

    // Euclidean angles are similarity-invariant, so K_0 of the scaled packing
    // equals K_0 of the original one.
    double k0 = star_interior_curvature(inst, inst.r);
    double k0b = star_interior_curvature(inst, inst.r_bar);
    if (!(k0 >= k0b)) return TrialOutcome::Vacuous;

    double max_all = *std::max_element(ew.begin(), ew.end());
    if (!(max_all > 1.0)) return TrialOutcome::Vacuous;

    double max_bdry = *std::max_element(ew.begin() + 1, ew.end());
    double margin = max_bdry - ew[0];
    if (margin_out) *margin_out = margin;
    return classify(margin);
}

TrialReport run_generalized_max_principle_suite(int n, WeightRegime regime, int trials,
                                                std::uint64_t seed) {
    TrialReport rep;
    for (int i = 0; i < trials; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        StarInstance inst;
        try {
            inst = random_star_instance(n, regime, s);
        } catch (const HarnessError&) {
            ++rep.trials;
            ++rep.skipped;
            continue;
        }
        Rng rng(s ^ 0x9e3779b97f4a7c15ull);
        // Largest mu keeping every scaled r-circle meeting the disk.
        double bound = std::numeric_limits<double>::infinity();
        for (int v = 0; v <= n; ++v) {
            EuclideanCircle c = hyp_to_euc_circle({inst.layout_r.at(v), inst.r.at(v)});
            double inner = std::abs(c.center) - c.radius;
            if (inner > 0.0) bound = std::min(bound, 1.0 / inner);
        }
        double mu_hi = std::min(3.0, 1.0 + 0.9 * (bound - 1.0));
        double mu = uniform(rng, 1.0 + 0.5 * (mu_hi - 1.0), mu_hi);
        double margin = 0.0;
        TrialOutcome outcome = check_generalized_max_principle(inst, mu, &margin);
        rep.record(outcome, margin, s);
    }
    return rep;
}

TrialReport rigidity_experiment(const RigidityOptions& opts, std::uint64_t seed) {
    if (opts.rings < 1 || opts.inits < 2)
        throw HarnessError("rigidity_experiment: rings >= 1 and inits >= 2 required");
    TrialReport rep;
    Triangulation t = hex_disk_triangulation(opts.rings);
    const auto interior = t.interior_vertices();

    for (int trial = 0; trial < opts.trials; ++trial) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(trial);
        Rng rng(s);
        try {
            WeightAssignment eta = opts.regime ? sample_weights(rng, t, *opts.regime, 10000)
                                               : WeightAssignment::constant(t, 1.0);

            LabelAssignment boundary_labels;
            boundary_labels.geometry = Geometry::Hyperbolic;
            for (VertexId v : t.boundary_vertices())
                boundary_labels.u[v] =
                    label_from_radius(log_uniform(rng, 0.2, 0.4), Geometry::Hyperbolic);

            SolveConfig cfg;
            for (VertexId v : interior) cfg.target_K[v] = 0.0;

            std::vector<LabelAssignment> solutions;
            bool all_converged = true;
            const double base = std::log(std::tanh(0.25));
            for (int init = 0; init < opts.inits; ++init) {
                LabelAssignment u0 = boundary_labels;
                for (VertexId v : interior)
                    u0.u[v] = std::min(base + uniform(rng, -0.7, 0.4), -0.05);
                SolveReport sol = solve_prescribed_curvature(t, eta, cfg, u0);
                if (!sol.converged) {
                    all_converged = false;
                    break;
                }
                solutions.push_back(sol.u);
            }
            if (!all_converged) {
                ++rep.trials;
                ++rep.skipped;
                continue;
            }

            double maxdiff = 0.0;
            for (std::size_t a = 1; a < solutions.size(); ++a)
                for (VertexId v : interior)
                    maxdiff = std::max(maxdiff,
                                       std::abs(solutions[a].at(v) - solutions[0].at(v)));
            rep.record(maxdiff <= opts.agreement_tol ? TrialOutcome::Satisfied
                                                     : TrialOutcome::Violated,
                       opts.agreement_tol - maxdiff, s);

            // mu-scaling probe on the developed circle set: boundary circles
            // pushed across the unit circle get an infinite generalized
            // radius, which must dominate the unscaled (finite) one.
            RadiusAssignment r = radii_from_labels(solutions[0]);
            EdgeLengthTable len = edge_lengths_h(t, eta, r);
            DiskLayout layout = layout_in_disk(t, len);
            for (VertexId v : t.boundary_vertices()) {
                EuclideanCircle c = hyp_to_euc_circle({layout.at(v), r.at(v)});
                EuclideanCircle scaled = scale_circle(opts.mu_probe, c);
                if (strictly_inside_disk(scaled)) continue;
                GeneralizedRadius rho_mu = generalized_radius(scaled);
                GeneralizedRadius rho_bar = generalized_radius(c);
                rep.record(rho_bar < rho_mu ? TrialOutcome::Satisfied : TrialOutcome::Violated,
                           rho_bar < rho_mu ? 1.0 : -1.0, s);
            }
        } catch (const std::exception&) {
            ++rep.trials;
            ++rep.skipped;
        }
    }
    return rep;
}

}  // namespace idcp
