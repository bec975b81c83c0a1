#include <doctest.h>

#include <random>

#include "idcp/mesh.hpp"

using namespace idcp;

TEST_CASE("single face: all vertices boundary, three single-face edges") {
    Triangulation t = build_triangulation({{0, 1, 2}});
    CHECK(t.num_vertices() == 3);
    CHECK(t.num_edges() == 3);
    CHECK(t.num_faces() == 1);
    for (VertexId v : t.vertices()) CHECK(t.is_boundary(v));
    for (const auto& e : t.edges()) CHECK(t.incident_faces(e).size() == 1);
}

TEST_CASE("hexagonal star: vertex 0 interior, ring boundary") {
    std::vector<std::array<VertexId, 3>> faces;
    for (int i = 1; i <= 6; ++i) faces.push_back({0, i, i == 6 ? 1 : i + 1});
    Triangulation t = build_triangulation(faces);
    CHECK(t.num_vertices() == 7);
    CHECK(t.num_faces() == 6);
    CHECK_FALSE(t.is_boundary(0));
    for (int i = 1; i <= 6; ++i) CHECK(t.is_boundary(i));
}

TEST_CASE("build errors") {
    CHECK_THROWS_AS(build_triangulation({{0, 1, 2}, {0, 2, 1}}), MeshError);  // duplicate face
    CHECK_THROWS_AS(build_triangulation({{0, 0, 1}}), MeshError);             // repeated vertex
    CHECK_THROWS_AS(build_triangulation({{0, 1, 2}, {1, 2, 3}, {1, 2, 4}}), MeshError);  // 3 faces
    CHECK_THROWS_AS(build_triangulation({{0, 1, 2}, {3, 4, 5}}), MeshError);  // disconnected
}

TEST_CASE("star_polygon") {
    CHECK_THROWS_AS(star_polygon(2), MeshError);

    Triangulation t3 = star_polygon(3);
    CHECK(t3.num_vertices() == 4);
    CHECK(t3.num_faces() == 3);
    CHECK_FALSE(t3.is_boundary(0));

    Triangulation t6 = star_polygon(6);
    CHECK(t6.num_faces() == 6);
    CHECK(t6.interior_vertices() == std::vector<VertexId>{0});
    CHECK(t6.boundary_vertices().size() == 6);
}

namespace {

// Independent count of lattice points and upward/downward unit triangles in a
// k-ring hexagonal patch.
std::pair<int, int> hex_patch_counts(int k) {
    auto norm = [](int q, int r) { return (std::abs(q) + std::abs(r) + std::abs(q + r)) / 2; };
    int verts = 0, tris = 0;
    for (int q = -k - 1; q <= k + 1; ++q) {
        for (int r = -k - 1; r <= k + 1; ++r) {
            if (norm(q, r) <= k) ++verts;
            if (norm(q, r) <= k && norm(q + 1, r) <= k && norm(q, r + 1) <= k) ++tris;
            if (norm(q + 1, r) <= k && norm(q + 1, r + 1) <= k && norm(q, r + 1) <= k) ++tris;
        }
    }
    return {verts, tris};
}

}  // namespace

TEST_CASE("hex_disk_triangulation sizes and boundary structure") {
    CHECK_THROWS_AS(hex_disk_triangulation(0), MeshError);

    Triangulation t1 = hex_disk_triangulation(1);
    CHECK(t1.num_vertices() == 7);
    CHECK(t1.num_faces() == 6);
    CHECK(t1.interior_vertices().size() == 1);

    for (int k = 1; k <= 4; ++k) {
        Triangulation t = hex_disk_triangulation(k);
        auto [verts, tris] = hex_patch_counts(k);
        CHECK(static_cast<int>(t.num_vertices()) == verts);
        CHECK(static_cast<int>(t.num_faces()) == tris);
        CHECK(static_cast<int>(t.num_vertices()) == 3 * k * k + 3 * k + 1);
        CHECK(static_cast<int>(t.num_faces()) == 6 * k * k);
        CHECK(static_cast<int>(t.interior_vertices().size()) == 3 * (k - 1) * (k - 1) + 3 * (k - 1) + 1);
    }
}

TEST_CASE("edge key canonicalization and symmetric eta lookup") {
    Triangulation t = star_polygon(4);
    WeightAssignment eta = WeightAssignment::constant(t, 0.5);
    eta.set(2, 0, 0.25);
    CHECK(eta.at(0, 2) == 0.25);
    CHECK(eta.at(2, 0) == 0.25);
    CHECK(EdgeKey(3, 1) == EdgeKey(1, 3));
    CHECK_THROWS_AS(EdgeKey(2, 2), std::invalid_argument);
}

TEST_CASE("weight validation") {
    Triangulation t = star_polygon(3);
    WeightAssignment eta = WeightAssignment::constant(t, -1.0);
    CHECK_THROWS_AS(eta.validate(t), MeshError);
    WeightAssignment partial;
    partial.set(0, 1, 0.3);
    CHECK_THROWS_AS(partial.validate(t), MeshError);
}

TEST_CASE("structure condition") {
    Triangulation t = star_polygon(6);

    CHECK(check_structure_condition(t, WeightAssignment::constant(t, 1.0)).pass);
    CHECK(check_structure_condition(t, WeightAssignment::constant(t, 0.0)).pass);

    // Face (0,1,2) fails: worst cyclic value eta02 + eta01*eta12 = -0.9 + 0.45 = -0.45.
    WeightAssignment eta = WeightAssignment::constant(t, 0.5);
    eta.set(0, 1, 0.5);
    eta.set(1, 2, 0.9);
    eta.set(0, 2, -0.9);
    auto rep = check_structure_condition(t, eta);
    CHECK_FALSE(rep.pass);
    REQUIRE(!rep.offending_faces.empty());
    CHECK(rep.offending_faces[0].second == doctest::Approx(-0.45));
}

TEST_CASE("structure condition invariant under vertex relabeling within a face") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-0.5, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
        double e01 = dist(rng), e02 = dist(rng), e12 = dist(rng);
        bool results[2];
        int k = 0;
        for (auto f : {std::array<VertexId, 3>{0, 1, 2}, std::array<VertexId, 3>{2, 0, 1}}) {
            Triangulation t = build_triangulation({f});
            WeightAssignment eta;
            eta.set(0, 1, e01);
            eta.set(0, 2, e02);
            eta.set(1, 2, e12);
            results[k++] = check_structure_condition(t, eta).pass;
        }
        CHECK(results[0] == results[1]);
    }
}

TEST_CASE("regular weight check") {
    // Two triangles sharing edge 1-2: the exceptional configuration.
    Triangulation t = build_triangulation({{1, 2, 3}, {2, 1, 4}});

    WeightAssignment eta = WeightAssignment::constant(t, 0.0);
    eta.set(1, 2, 1.0);
    auto rep = check_regular_weight(t, eta);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.offending_edges.size() == 1);
    CHECK(rep.offending_edges[0] == EdgeKey(1, 2));

    // eta = 1 everywhere needs 1 = -1: passes.
    CHECK(check_regular_weight(t, WeightAssignment::constant(t, 1.0)).pass);

    // Shared-edge weight != 1: passes regardless of the rest.
    eta.set(1, 2, 0.5);
    CHECK(check_regular_weight(t, eta).pass);
}

TEST_CASE("label / radius conversions are inverse") {
    for (double r : {0.05, 0.3, 1.0, 2.5}) {
        double u = label_from_radius(r, Geometry::Hyperbolic);
        CHECK(u < 0.0);
        CHECK(radius_from_label(u, Geometry::Hyperbolic) == doctest::Approx(r).epsilon(1e-12));
        double ue = label_from_radius(r, Geometry::Euclidean);
        CHECK(radius_from_label(ue, Geometry::Euclidean) == doctest::Approx(r).epsilon(1e-12));
    }
}
