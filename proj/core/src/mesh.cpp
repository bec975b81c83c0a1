#include "idcp/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace idcp {

namespace {

std::string face_str(const std::array<VertexId, 3>& f) {
    return "[" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]) + "]";
}

}  // namespace

Triangulation Triangulation::from_faces(const std::vector<std::array<VertexId, 3>>& raw_faces) {
    if (raw_faces.empty()) throw MeshError("triangulation has no faces");

    Triangulation t;
    std::set<std::array<VertexId, 3>> seen;
    for (const auto& f : raw_faces) {
        if (f[0] == f[1] || f[0] == f[2] || f[1] == f[2])
            throw MeshError("face with repeated vertex: " + face_str(f));
        if (f[0] < 0 || f[1] < 0 || f[2] < 0)
            throw MeshError("face with negative vertex id: " + face_str(f));
        std::array<VertexId, 3> key = f;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second)
            throw MeshError("duplicate face: " + face_str(f));
        t.faces_.push_back(f);
    }

    for (int fi = 0; fi < static_cast<int>(t.faces_.size()); ++fi) {
        const auto& f = t.faces_[fi];
        for (int k = 0; k < 3; ++k) {
            t.vertex_faces_[f[k]].push_back(fi);
            EdgeKey e(f[k], f[(k + 1) % 3]);
            t.edge_faces_[e].push_back(fi);
        }
    }

    for (const auto& [e, fs] : t.edge_faces_) {
        if (fs.size() > 2)
            throw MeshError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                            " has " + std::to_string(fs.size()) + " incident faces");
        t.edges_.push_back(e);
    }

    for (const auto& [v, fs] : t.vertex_faces_) {
        t.vertex_index_[v] = static_cast<int>(t.vertices_.size());
        t.vertices_.push_back(v);
        t.boundary_[v] = false;
    }

    // Boundary: vertices on an edge with a single incident face.
    for (const auto& [e, fs] : t.edge_faces_) {
        if (fs.size() == 1) {
            t.boundary_[e.a] = true;
            t.boundary_[e.b] = true;
        }
    }

    // Connectivity over edges.
    std::set<VertexId> visited;
    std::queue<VertexId> q;
    q.push(t.vertices_.front());
    visited.insert(t.vertices_.front());
    std::map<VertexId, std::vector<VertexId>> nbrs;
    for (const auto& e : t.edges_) {
        nbrs[e.a].push_back(e.b);
        nbrs[e.b].push_back(e.a);
    }
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : nbrs[v])
            if (visited.insert(w).second) q.push(w);
    }
    if (visited.size() != t.vertices_.size())
        throw MeshError("triangulation is disconnected");

    return t;
}

bool Triangulation::is_boundary(VertexId v) const {
    auto it = boundary_.find(v);
    if (it == boundary_.end()) throw MeshError("unknown vertex " + std::to_string(v));
    return it->second;
}

const std::vector<int>& Triangulation::incident_faces(const EdgeKey& e) const {
    auto it = edge_faces_.find(e);
    if (it == edge_faces_.end())
        throw MeshError("unknown edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
    return it->second;
}

std::vector<EdgeKey> Triangulation::interior_edges() const {
    std::vector<EdgeKey> out;
    for (const auto& e : edges_)
        if (edge_faces_.at(e).size() == 2) out.push_back(e);
    return out;
}

std::vector<VertexId> Triangulation::interior_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v : vertices_)
        if (!boundary_.at(v)) out.push_back(v);
    return out;
}

std::vector<VertexId> Triangulation::boundary_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v : vertices_)
        if (boundary_.at(v)) out.push_back(v);
    return out;
}

const std::vector<int>& Triangulation::faces_at(VertexId v) const {
    auto it = vertex_faces_.find(v);
    if (it == vertex_faces_.end()) throw MeshError("unknown vertex " + std::to_string(v));
    return it->second;
}

Triangulation build_triangulation(const std::vector<std::array<VertexId, 3>>& raw_faces) {
    return Triangulation::from_faces(raw_faces);
}

Triangulation star_polygon(int n) {
    if (n < 3) throw MeshError("star_polygon: n must be >= 3, got " + std::to_string(n));
    std::vector<std::array<VertexId, 3>> faces;
    faces.reserve(n);
    for (int i = 1; i <= n; ++i) {
        int j = (i == n) ? 1 : i + 1;
        faces.push_back({0, i, j});
    }
    return build_triangulation(faces);
}

Triangulation hex_disk_triangulation(int rings) {
    if (rings < 1) throw MeshError("hex_disk_triangulation: rings must be >= 1");

    // Axial hex coordinates; hex norm (|q| + |r| + |q+r|) / 2.
    auto hex_norm = [](int q, int r) { return (std::abs(q) + std::abs(r) + std::abs(q + r)) / 2; };

    std::map<std::pair<int, int>, VertexId> id_of;
    VertexId next = 0;
    // Center first, then ring by ring so ids grow outward.
    for (int k = 0; k <= rings; ++k)
        for (int q = -rings; q <= rings; ++q)
            for (int r = -rings; r <= rings; ++r)
                if (hex_norm(q, r) == k) id_of[{q, r}] = next++;

    std::vector<std::array<VertexId, 3>> faces;
    for (int q = -rings - 1; q <= rings; ++q) {
        for (int r = -rings - 1; r <= rings; ++r) {
            auto in = [&](int qq, int rr) { return hex_norm(qq, rr) <= rings; };
            // Upward triangle (q,r),(q+1,r),(q,r+1).
            if (in(q, r) && in(q + 1, r) && in(q, r + 1))
                faces.push_back({id_of[{q, r}], id_of[{q + 1, r}], id_of[{q, r + 1}]});
            // Downward triangle (q+1,r),(q+1,r+1),(q,r+1).
            if (in(q + 1, r) && in(q + 1, r + 1) && in(q, r + 1))
                faces.push_back({id_of[{q + 1, r}], id_of[{q + 1, r + 1}], id_of[{q, r + 1}]});
        }
    }
    return build_triangulation(faces);
}

WeightAssignment::WeightAssignment(std::map<EdgeKey, double> eta) : eta_(std::move(eta)) {}

WeightAssignment WeightAssignment::constant(const Triangulation& t, double value) {
    WeightAssignment w;
    for (const auto& e : t.edges()) w.eta_[e] = value;
    return w;
}

double WeightAssignment::at(VertexId i, VertexId j) const { return at(EdgeKey(i, j)); }

double WeightAssignment::at(const EdgeKey& e) const {
    auto it = eta_.find(e);
    if (it == eta_.end())
        throw MeshError("eta missing for edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
    return it->second;
}

void WeightAssignment::set(VertexId i, VertexId j, double value) { eta_[EdgeKey(i, j)] = value; }

void WeightAssignment::validate(const Triangulation& t) const {
    if (eta_.size() != t.num_edges())
        throw MeshError("eta domain does not match edge set");
    for (const auto& e : t.edges()) {
        double v = at(e);
        if (!(v > -1.0))
            throw MeshError("eta must exceed -1 on edge " + std::to_string(e.a) + "-" +
                            std::to_string(e.b));
    }
}

double RadiusAssignment::at(VertexId v) const {
    auto it = r.find(v);
    if (it == r.end()) throw MeshError("radius missing for vertex " + std::to_string(v));
    return it->second;
}

void RadiusAssignment::validate(const Triangulation& t) const {
    if (r.size() != t.num_vertices()) throw MeshError("radius domain does not match vertex set");
    for (const auto& [v, rv] : r)
        if (!(rv > 0.0)) throw MeshError("non-positive radius at vertex " + std::to_string(v));
}

double LabelAssignment::at(VertexId v) const {
    auto it = u.find(v);
    if (it == u.end()) throw MeshError("label missing for vertex " + std::to_string(v));
    return it->second;
}

double label_from_radius(double r, Geometry geom) {
    if (!(r > 0.0)) throw MeshError("radius must be positive");
    return geom == Geometry::Hyperbolic ? std::log(std::tanh(r / 2.0)) : std::log(r);
}

double radius_from_label(double u, Geometry geom) {
    if (geom == Geometry::Hyperbolic) {
        if (!(u < 0.0)) throw MeshError("hyperbolic label must be negative");
        return 2.0 * std::atanh(std::exp(u));
    }
    return std::exp(u);
}

LabelAssignment labels_from_radii(const RadiusAssignment& r) {
    LabelAssignment out;
    out.geometry = r.geometry;
    for (const auto& [v, rv] : r.r) out.u[v] = label_from_radius(rv, r.geometry);
    return out;
}

RadiusAssignment radii_from_labels(const LabelAssignment& u) {
    RadiusAssignment out;
    out.geometry = u.geometry;
    for (const auto& [v, uv] : u.u) out.r[v] = radius_from_label(uv, u.geometry);
    return out;
}

StructureConditionReport check_structure_condition(const Triangulation& t,
                                                   const WeightAssignment& eta) {
    StructureConditionReport rep;
    for (int fi = 0; fi < static_cast<int>(t.num_faces()); ++fi) {
        const auto& f = t.faces()[fi];
        double e01 = eta.at(f[0], f[1]);
        double e02 = eta.at(f[0], f[2]);
        double e12 = eta.at(f[1], f[2]);
        double worst = std::min({e01 + e02 * e12, e02 + e01 * e12, e12 + e01 * e02});
        if (worst < 0.0) {
            rep.pass = false;
            rep.offending_faces.emplace_back(fi, worst);
        }
    }
    return rep;
}

RegularityReport check_regular_weight(const Triangulation& t, const WeightAssignment& eta) {
    constexpr double tol = 1e-12;
    RegularityReport rep;
    for (const auto& e : t.interior_edges()) {
        if (std::abs(eta.at(e) - 1.0) > tol) continue;
        const auto& fs = t.incident_faces(e);
        // Opposite vertices of the two incident faces.
        VertexId opp[2];
        for (int k = 0; k < 2; ++k) {
            const auto& f = t.faces()[fs[k]];
            for (VertexId v : f)
                if (v != e.a && v != e.b) opp[k] = v;
        }
        bool bad3 = std::abs(eta.at(e.a, opp[0]) + eta.at(e.b, opp[0])) <= tol;
        bool bad4 = std::abs(eta.at(e.a, opp[1]) + eta.at(e.b, opp[1])) <= tol;
        if (bad3 && bad4) {
            rep.pass = false;
            rep.offending_edges.push_back(e);
        }
    }
    return rep;
}

}  // namespace idcp
