#pragma once

#include <array>
#include <map>
#include <vector>

#include "idcp/hypgeom.hpp"
#include "idcp/mesh.hpp"

namespace idcp {

struct DegenerateTriangleError : std::runtime_error {
    explicit DegenerateTriangleError(int face_id, const std::string& msg)
        : std::runtime_error(msg), face(face_id) {}
    int face;
};

struct EdgeLengthTable {
    Geometry geometry = Geometry::Hyperbolic;
    std::map<EdgeKey, double> lengths;

    double at(VertexId i, VertexId j) const;
    double at(const EdgeKey& e) const;
};

/// cosh l_ij = cosh r_i cosh r_j + eta_ij sinh r_i sinh r_j
EdgeLengthTable edge_lengths_h(const Triangulation& t, const WeightAssignment& eta,
                               const RadiusAssignment& r);

/// L_ij = sqrt(R_i^2 + R_j^2 + 2 eta_ij R_i R_j)
EdgeLengthTable edge_lengths_e(const Triangulation& t, const WeightAssignment& eta,
                               const RadiusAssignment& R);

EdgeLengthTable edge_lengths(const Triangulation& t, const WeightAssignment& eta,
                             const RadiusAssignment& radii);

/// Angles at v1, v2, v3 of a triangle with side lengths l12, l13, l23 by the
/// (hyperbolic) law of cosines. Throws DegenerateTriangleError when the strict
/// triangle inequality fails within 1e-12.
std::array<double, 3> triangle_angles(double l12, double l13, double l23, Geometry geom,
                                      int face_id = -1);

/// angles[f][k] is the angle of face f at its k-th corner.
struct AngleTable {
    std::vector<std::array<double, 3>> angles;
};

AngleTable triangle_angle_table(const Triangulation& t, const EdgeLengthTable& lengths);

struct CurvatureVector {
    std::map<VertexId, double> K;
    double at(VertexId v) const;
};

/// K = 2*pi - angle sum at interior vertices, pi - angle sum at boundary.
CurvatureVector curvature(const Triangulation& t, const AngleTable& angles);

struct FaceGeometry {
    Complex power_center;
    double face_power = 0.0;   // may be <= 0
    bool virtual_circle = false;
    /// h[k]: signed distance from the power center to the edge opposite
    /// corner k, positive on the triangle's side.
    std::array<double, 3> h{};
};

/// Power center of a face embedded in the plane: the unique point with equal
/// power distances pi_i(p) = |p - v_i|^2 - R_i^2 to the three vertex-circles.
FaceGeometry power_center(const std::array<Complex, 3>& pos, const std::array<double, 3>& radii);

inline constexpr double kDelaunayTol = 1e-9;

struct DelaunayEdgeResult {
    double h_sum = 0.0;
    bool pass = false;
    bool face_circle_virtual = true;
    /// Inversive distance between the face-circle of (v1,v2,v3) and the
    /// vertex-circle at v4; meaningful only when the face-circle is real.
    double face_circle_eta = 0.0;
};

/// Weighted Delaunay test for the shared edge (p1, p2) of triangles
/// (p1, p2, p3) and (p1, p2, p4), with p3 and p4 on opposite sides.
DelaunayEdgeResult is_weighted_delaunay_edge(const std::array<Complex, 4>& pos,
                                             const std::array<double, 4>& radii);

struct DelaunayReport {
    bool pass = true;
    std::vector<std::pair<EdgeKey, DelaunayEdgeResult>> edges;
};

/// PE: embeds each interior-edge quad from its edge lengths and runs the
/// planar predicate. PH: lays the quad out in the Poincare disk, converts the
/// vertex-circles to Euclidean circles and runs the same planar predicate.
DelaunayReport is_weighted_delaunay_packing(const Triangulation& t, const WeightAssignment& eta,
                                            const RadiusAssignment& radii);

/// Plane positions of the quad around an interior edge, from its five edge
/// lengths: shared edge (a, b) on the x-axis, c above, d below.
std::array<Complex, 4> embed_quad_euclidean(double lab, double lac, double lbc, double lad,
                                            double lbd, int face_id = -1);

/// Quad layout in the Poincare disk with the shared geodesic through the
/// origin: a at the origin, b on the positive real axis.
std::array<Complex, 4> embed_quad_hyperbolic(double lab, double lac, double lbc, double lad,
                                             double lbd, int face_id = -1);

}  // namespace idcp
