#include "idcp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace idcp {

namespace {

constexpr double kDegenerateMargin = 1e-12;

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

void check_triangle_inequality(double a, double b, double c, int face_id) {
    if (a + b - c <= kDegenerateMargin || a + c - b <= kDegenerateMargin ||
        b + c - a <= kDegenerateMargin)
        throw DegenerateTriangleError(face_id, "degenerate triangle (face " +
                                                   std::to_string(face_id) + "): lengths " +
                                                   std::to_string(a) + ", " + std::to_string(b) +
                                                   ", " + std::to_string(c));
}

double clamp_cos(double c) { return std::clamp(c, -1.0, 1.0); }

}  // namespace

double EdgeLengthTable::at(VertexId i, VertexId j) const { return at(EdgeKey(i, j)); }

double EdgeLengthTable::at(const EdgeKey& e) const {
    auto it = lengths.find(e);
    if (it == lengths.end())
        throw MeshError("length missing for edge " + std::to_string(e.a) + "-" +
                        std::to_string(e.b));
    return it->second;
}

EdgeLengthTable edge_lengths_h(const Triangulation& t, const WeightAssignment& eta,
                               const RadiusAssignment& r) {
    if (r.geometry != Geometry::Hyperbolic)
        throw MeshError("edge_lengths_h: radii must be hyperbolic");
    EdgeLengthTable out;
    out.geometry = Geometry::Hyperbolic;
    for (const auto& e : t.edges()) {
        double ri = r.at(e.a), rj = r.at(e.b);
        double arg = std::cosh(ri) * std::cosh(rj) + eta.at(e) * std::sinh(ri) * std::sinh(rj);
        if (!(arg > 1.0))
            throw MeshError("edge_lengths_h: cosh argument <= 1 on edge " + std::to_string(e.a) +
                            "-" + std::to_string(e.b));
        out.lengths[e] = std::acosh(arg);
    }
    return out;
}

EdgeLengthTable edge_lengths_e(const Triangulation& t, const WeightAssignment& eta,
                               const RadiusAssignment& R) {
    if (R.geometry != Geometry::Euclidean)
        throw MeshError("edge_lengths_e: radii must be Euclidean");
    EdgeLengthTable out;
    out.geometry = Geometry::Euclidean;
    for (const auto& e : t.edges()) {
        double ri = R.at(e.a), rj = R.at(e.b);
        out.lengths[e] = std::sqrt(ri * ri + rj * rj + 2.0 * eta.at(e) * ri * rj);
    }
    return out;
}

EdgeLengthTable edge_lengths(const Triangulation& t, const WeightAssignment& eta,
                             const RadiusAssignment& radii) {
    return radii.geometry == Geometry::Hyperbolic ? edge_lengths_h(t, eta, radii)
                                                  : edge_lengths_e(t, eta, radii);
}

std::array<double, 3> triangle_angles(double l12, double l13, double l23, Geometry geom,
                                      int face_id) {
    check_triangle_inequality(l12, l13, l23, face_id);
    std::array<double, 3> a{};
    if (geom == Geometry::Euclidean) {
        a[0] = std::acos(clamp_cos((l12 * l12 + l13 * l13 - l23 * l23) / (2.0 * l12 * l13)));
        a[1] = std::acos(clamp_cos((l12 * l12 + l23 * l23 - l13 * l13) / (2.0 * l12 * l23)));
        a[2] = std::acos(clamp_cos((l13 * l13 + l23 * l23 - l12 * l12) / (2.0 * l13 * l23)));
    } else {
        auto ang = [](double x, double y, double z) {
            return std::acos(clamp_cos((std::cosh(x) * std::cosh(y) - std::cosh(z)) /
                                       (std::sinh(x) * std::sinh(y))));
        };
        a[0] = ang(l12, l13, l23);
        a[1] = ang(l12, l23, l13);
        a[2] = ang(l13, l23, l12);
    }
    return a;
}

AngleTable triangle_angle_table(const Triangulation& t, const EdgeLengthTable& lengths) {
    AngleTable out;
    out.angles.reserve(t.num_faces());
    for (int fi = 0; fi < static_cast<int>(t.num_faces()); ++fi) {
        const auto& f = t.faces()[fi];
        out.angles.push_back(triangle_angles(lengths.at(f[0], f[1]), lengths.at(f[0], f[2]),
                                             lengths.at(f[1], f[2]), lengths.geometry, fi));
    }
    return out;
}

double CurvatureVector::at(VertexId v) const {
    auto it = K.find(v);
    if (it == K.end()) throw MeshError("curvature missing for vertex " + std::to_string(v));
    return it->second;
}

CurvatureVector curvature(const Triangulation& t, const AngleTable& angles) {
    if (angles.angles.size() != t.num_faces())
        throw MeshError("curvature: angle table does not match face count");
    CurvatureVector out;
    for (VertexId v : t.vertices())
        out.K[v] = t.is_boundary(v) ? std::numbers::pi : 2.0 * std::numbers::pi;
    for (int fi = 0; fi < static_cast<int>(t.num_faces()); ++fi) {
        const auto& f = t.faces()[fi];
        for (int k = 0; k < 3; ++k) out.K[f[k]] -= angles.angles[fi][k];
    }
    return out;
}

FaceGeometry power_center(const std::array<Complex, 3>& pos, const std::array<double, 3>& radii) {
    Complex d2 = pos[1] - pos[0];
    Complex d3 = pos[2] - pos[0];
    double det = 2.0 * cross(d2, d3);
    if (std::abs(det) < 1e-14)
        throw DegenerateTriangleError(-1, "power_center: collinear vertices");
    // pi_1(c) = pi_2(c) and pi_1(c) = pi_3(c) as a 2x2 linear system in c.
    auto rhs = [&](int k) {
        return std::norm(pos[k]) - radii[k] * radii[k] - (std::norm(pos[0]) - radii[0] * radii[0]);
    };
    double b2 = rhs(1), b3 = rhs(2);
    FaceGeometry g;
    g.power_center = {(b2 * d3.imag() - b3 * d2.imag()) / det,
                      (b3 * d2.real() - b2 * d3.real()) / det};
    g.face_power = std::norm(g.power_center - pos[0]) - radii[0] * radii[0];
    g.virtual_circle = g.face_power <= 0.0;
    // h[k]: signed distance to the edge opposite corner k, positive on the
    // side of corner k.
    for (int k = 0; k < 3; ++k) {
        Complex vi = pos[(k + 1) % 3], vj = pos[(k + 2) % 3], vk = pos[k];
        Complex e = vj - vi;
        double s = cross(e, g.power_center - vi) / std::abs(e);
        double side = cross(e, vk - vi) > 0.0 ? 1.0 : -1.0;
        g.h[k] = s * side;
    }
    return g;
}

DelaunayEdgeResult is_weighted_delaunay_edge(const std::array<Complex, 4>& pos,
                                             const std::array<double, 4>& radii) {
    if (cross(pos[1] - pos[0], pos[2] - pos[0]) * cross(pos[1] - pos[0], pos[3] - pos[0]) >= 0.0)
        throw MeshError("is_weighted_delaunay_edge: p3 and p4 must lie on opposite sides");
    FaceGeometry f123 = power_center({pos[0], pos[1], pos[2]}, {radii[0], radii[1], radii[2]});
    FaceGeometry f124 = power_center({pos[0], pos[1], pos[3]}, {radii[0], radii[1], radii[3]});
    DelaunayEdgeResult r;
    r.h_sum = f123.h[2] + f124.h[2];
    r.pass = r.h_sum >= -kDelaunayTol;
    r.face_circle_virtual = f123.virtual_circle;
    if (!f123.virtual_circle) {
        EuclideanCircle face_circle{f123.power_center, std::sqrt(f123.face_power)};
        EuclideanCircle c4{pos[3], radii[3]};
        r.face_circle_eta = inversive_distance_euc(face_circle, c4);
    }
    return r;
}

std::array<Complex, 4> embed_quad_euclidean(double lab, double lac, double lbc, double lad,
                                            double lbd, int face_id) {
    check_triangle_inequality(lab, lac, lbc, face_id);
    check_triangle_inequality(lab, lad, lbd, face_id);
    double xc = (lac * lac + lab * lab - lbc * lbc) / (2.0 * lab);
    double yc = std::sqrt(std::max(lac * lac - xc * xc, 0.0));
    double xd = (lad * lad + lab * lab - lbd * lbd) / (2.0 * lab);
    double yd = std::sqrt(std::max(lad * lad - xd * xd, 0.0));
    return {Complex(0, 0), Complex(lab, 0), Complex(xc, yc), Complex(xd, -yd)};
}

std::array<Complex, 4> embed_quad_hyperbolic(double lab, double lac, double lbc, double lad,
                                             double lbd, int face_id) {
    double alpha = triangle_angles(lab, lac, lbc, Geometry::Hyperbolic, face_id)[0];
    double beta = triangle_angles(lab, lad, lbd, Geometry::Hyperbolic, face_id)[0];
    // Geodesics through the origin are straight; a point at hyperbolic
    // distance l from the origin sits at Euclidean radius tanh(l/2).
    return {Complex(0, 0), Complex(std::tanh(lab / 2.0), 0),
            std::polar(std::tanh(lac / 2.0), alpha), std::polar(std::tanh(lad / 2.0), -beta)};
}

DelaunayReport is_weighted_delaunay_packing(const Triangulation& t, const WeightAssignment& eta,
                                            const RadiusAssignment& radii) {
    EdgeLengthTable len = edge_lengths(t, eta, radii);
    DelaunayReport rep;
    for (const auto& e : t.interior_edges()) {
        const auto& fs = t.incident_faces(e);
        VertexId opp[2];
        for (int k = 0; k < 2; ++k) {
            const auto& f = t.faces()[fs[k]];
            for (VertexId v : f)
                if (v != e.a && v != e.b) opp[k] = v;
        }
        double lab = len.at(e);
        double lac = len.at(e.a, opp[0]), lbc = len.at(e.b, opp[0]);
        double lad = len.at(e.a, opp[1]), lbd = len.at(e.b, opp[1]);

        DelaunayEdgeResult res;
        if (radii.geometry == Geometry::Euclidean) {
            auto pos = embed_quad_euclidean(lab, lac, lbc, lad, lbd, fs[0]);
            res = is_weighted_delaunay_edge(
                pos, {radii.at(e.a), radii.at(e.b), radii.at(opp[0]), radii.at(opp[1])});
        } else {
            // Lay out the hyperbolic quad, then run the Euclidean predicate on
            // the Euclidean images of the vertex-circles.
            auto hpos = embed_quad_hyperbolic(lab, lac, lbc, lad, lbd, fs[0]);
            std::array<VertexId, 4> vs{e.a, e.b, opp[0], opp[1]};
            std::array<Complex, 4> pos;
            std::array<double, 4> R;
            for (int k = 0; k < 4; ++k) {
                EuclideanCircle c = hyp_to_euc_circle({hpos[k], radii.at(vs[k])});
                pos[k] = c.center;
                R[k] = c.radius;
            }
            res = is_weighted_delaunay_edge(pos, R);
        }
        if (!res.pass) rep.pass = false;
        rep.edges.emplace_back(e, res);
    }
    return rep;
}

}  // namespace idcp
