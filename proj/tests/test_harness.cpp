#include <doctest.h>

#include <cmath>

#include "idcp/harness.hpp"

using namespace idcp;

TEST_CASE("random_star_instance is bit-for-bit deterministic in the seed") {
    StarInstance a = random_star_instance(6, WeightRegime::LowRange, 42);
    StarInstance b = random_star_instance(6, WeightRegime::LowRange, 42);
    REQUIRE(a.t.num_vertices() == b.t.num_vertices());
    for (const auto& e : a.t.edges()) CHECK(a.eta.at(e.a, e.b) == b.eta.at(e.a, e.b));
    for (VertexId v : a.t.vertices()) {
        CHECK(a.r.at(v) == b.r.at(v));
        CHECK(a.r_bar.at(v) == b.r_bar.at(v));
        CHECK(a.layout_r.at(v) == b.layout_r.at(v));
    }

    StarInstance c = random_star_instance(6, WeightRegime::LowRange, 43);
    bool any_diff = false;
    for (VertexId v : a.t.vertices()) any_diff = any_diff || a.r.at(v) != c.r.at(v);
    CHECK(any_diff);
}

TEST_CASE("star instances carry their hypothesis certificates") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        for (WeightRegime regime : {WeightRegime::LowRange, WeightRegime::NonNegative}) {
            StarInstance inst = random_star_instance(6, regime, seed);
            CHECK(check_structure_condition(inst.t, inst.eta).pass);
            CHECK(check_regular_weight(inst.t, inst.eta).pass);
            CHECK(is_weighted_delaunay_packing(inst.t, inst.eta, inst.r).pass);
            CHECK(is_weighted_delaunay_packing(inst.t, inst.eta, inst.r_bar).pass);
            if (regime == WeightRegime::NonNegative)
                for (const auto& e : inst.t.edges()) CHECK(inst.eta.at(e.a, e.b) >= 0.0);
            // Fan layout: v0 at the origin, all circles strictly inside D.
            CHECK(std::abs(inst.layout_r.at(0)) == 0.0);
            for (VertexId v : inst.t.vertices()) {
                EuclideanCircle c = hyp_to_euc_circle({inst.layout_r.at(v), inst.r.at(v)});
                CHECK(strictly_inside_disk(c));
            }
            // The fan realizes the metric on the spokes.
            EdgeLengthTable len = edge_lengths_h(inst.t, inst.eta, inst.r);
            for (VertexId v : inst.t.boundary_vertices())
                CHECK(hyp_distance(inst.layout_r.at(0), inst.layout_r.at(v)) ==
                      doctest::Approx(len.at(0, v)).epsilon(1e-12));
        }
    }
}

TEST_CASE("trial report bookkeeping") {
    TrialReport rep;
    rep.record(TrialOutcome::Vacuous, 0.0, 1);
    rep.record(TrialOutcome::Satisfied, 0.5, 2);
    rep.record(TrialOutcome::NumericalBoundary, 1e-13, 3);
    rep.record(TrialOutcome::Violated, -0.2, 4);
    CHECK(rep.trials == 4);
    CHECK(rep.non_vacuous == 3);
    CHECK(rep.numerical_boundary == 1);
    CHECK(rep.violations == 1);
    CHECK(rep.worst_margin == doctest::Approx(-0.2));
    REQUIRE(rep.violation_seeds.size() == 1);
    CHECK(rep.violation_seeds[0] == 4);
    CHECK_FALSE(rep.pass());

    TrialReport other;
    other.record(TrialOutcome::Satisfied, 0.1, 9);
    other.merge(rep);
    CHECK(other.trials == 5);
    CHECK(other.worst_margin == doctest::Approx(-0.2));
}

TEST_CASE("maximum principle suite: no violations, mostly non-vacuous") {
    for (WeightRegime regime : {WeightRegime::LowRange, WeightRegime::NonNegative}) {
        TrialReport rep = run_max_principle_suite(6, regime, 200, 1000);
        CHECK(rep.trials == 200);
        CHECK(rep.pass());
        CHECK(rep.non_vacuous * 10 >= rep.trials * 3);  // >= 30%
        CHECK(rep.worst_margin > 0.0);
    }
}

TEST_CASE("check_max_principle sets a margin on non-vacuous instances") {
    int non_vacuous = 0;
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        StarInstance inst = random_star_instance(6, WeightRegime::LowRange, seed);
        double margin = -1.0;
        TrialOutcome out = check_max_principle(inst, &margin);
        if (out == TrialOutcome::Vacuous) continue;
        ++non_vacuous;
        CHECK(out == TrialOutcome::Satisfied);
        CHECK(margin > 0.0);
    }
    CHECK(non_vacuous > 0);
}

TEST_CASE("scaling lemmas") {
    TrialReport rep = check_scaling_lemmas(7, 200);
    CHECK(rep.pass());
    CHECK(rep.non_vacuous > 0);

    TrialReport gen = check_generalized_scaling(7, 200);
    CHECK(gen.pass());
    CHECK(gen.non_vacuous == gen.trials);
}

TEST_CASE("generalized maximum principle suite") {
    TrialReport rep = run_generalized_max_principle_suite(6, WeightRegime::LowRange, 150, 5);
    CHECK(rep.pass());
    CHECK(rep.non_vacuous > 0);
}

TEST_CASE("schwarz suite on the hex disk") {
    for (WeightRegime regime : {WeightRegime::LowRange, WeightRegime::NonNegative}) {
        TrialReport rep = run_schwarz_suite(2, regime, 25, 11);
        CHECK(rep.trials == 25);
        CHECK(rep.pass());
        CHECK(rep.non_vacuous > 0);
    }
}

TEST_CASE("rigidity experiment") {
    RigidityOptions tangential;
    tangential.rings = 2;
    tangential.trials = 3;
    TrialReport rep = rigidity_experiment(tangential, 17);
    CHECK(rep.pass());
    CHECK(rep.non_vacuous >= tangential.trials);  // mu-probe adds extra records
    CHECK(rep.skipped == 0);

    RigidityOptions weighted = tangential;
    weighted.regime = WeightRegime::LowRange;
    TrialReport rep2 = rigidity_experiment(weighted, 17);
    CHECK(rep2.pass());
    CHECK(rep2.non_vacuous > 0);

    RigidityOptions bad;
    bad.inits = 1;
    CHECK_THROWS_AS(rigidity_experiment(bad, 1), HarnessError);
}

TEST_CASE("star_interior_curvature matches the metric pipeline") {
    StarInstance inst = random_star_instance(6, WeightRegime::LowRange, 77);
    EdgeLengthTable len = edge_lengths_h(inst.t, inst.eta, inst.r);
    CurvatureVector K = curvature(inst.t, triangle_angle_table(inst.t, len));
    CHECK(star_interior_curvature(inst, inst.r) == doctest::Approx(K.at(0)).epsilon(1e-14));
}
