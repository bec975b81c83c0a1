#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace idcp {

using VertexId = int;

/// Canonical unordered edge key: a < b always.
struct EdgeKey {
    VertexId a;
    VertexId b;

    EdgeKey(VertexId i, VertexId j) : a(i < j ? i : j), b(i < j ? j : i) {
        if (i == j) throw std::invalid_argument("EdgeKey: degenerate edge " + std::to_string(i));
    }

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct MeshError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Immutable combinatorial triangulated surface. Edges, face adjacency and
/// boundary flags are derived from the face list at construction.
class Triangulation {
public:
    /// Empty triangulation; populate via from_faces / build_triangulation.
    Triangulation() = default;

    static Triangulation from_faces(const std::vector<std::array<VertexId, 3>>& raw_faces);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<std::array<VertexId, 3>>& faces() const { return faces_; }
    const std::vector<EdgeKey>& edges() const { return edges_; }

    bool has_vertex(VertexId v) const { return vertex_index_.count(v) != 0; }
    bool is_boundary(VertexId v) const;

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_faces() const { return faces_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    /// Indices into faces() of the faces incident to an edge (size 1 or 2).
    const std::vector<int>& incident_faces(const EdgeKey& e) const;
    bool is_interior_edge(const EdgeKey& e) const { return incident_faces(e).size() == 2; }

    std::vector<EdgeKey> interior_edges() const;
    std::vector<VertexId> interior_vertices() const;
    std::vector<VertexId> boundary_vertices() const;

    /// Indices of faces containing vertex v.
    const std::vector<int>& faces_at(VertexId v) const;

private:
    std::vector<VertexId> vertices_;
    std::vector<std::array<VertexId, 3>> faces_;
    std::vector<EdgeKey> edges_;
    std::map<VertexId, int> vertex_index_;
    std::map<EdgeKey, std::vector<int>> edge_faces_;
    std::map<VertexId, std::vector<int>> vertex_faces_;
    std::map<VertexId, bool> boundary_;
};

Triangulation build_triangulation(const std::vector<std::array<VertexId, 3>>& raw_faces);

/// Star triangulation of an n-gon: interior vertex 0, boundary cycle 1..n,
/// faces (0, i, i+1).
Triangulation star_polygon(int n);

/// Triangular-lattice patch with `rings` concentric hexagonal rings around a
/// center vertex. 3k^2+3k+1 vertices, 6k^2 faces.
Triangulation hex_disk_triangulation(int rings);

/// Per-edge inversive distance weight, each value > -1, symmetric by key.
class WeightAssignment {
public:
    WeightAssignment() = default;
    explicit WeightAssignment(std::map<EdgeKey, double> eta);

    static WeightAssignment constant(const Triangulation& t, double value);

    double at(VertexId i, VertexId j) const;
    double at(const EdgeKey& e) const;
    void set(VertexId i, VertexId j, double value);

    const std::map<EdgeKey, double>& values() const { return eta_; }

    /// Throws MeshError unless domain == edge set of t and all values > -1.
    void validate(const Triangulation& t) const;

private:
    std::map<EdgeKey, double> eta_;
};

enum class Geometry { Euclidean, Hyperbolic };

/// Per-vertex radius, all positive, tagged with the background geometry.
struct RadiusAssignment {
    Geometry geometry = Geometry::Hyperbolic;
    std::map<VertexId, double> r;

    double at(VertexId v) const;
    void validate(const Triangulation& t) const;
};

/// Per-vertex label: u = ln tanh(r/2) hyperbolic, u = ln R Euclidean.
struct LabelAssignment {
    Geometry geometry = Geometry::Hyperbolic;
    std::map<VertexId, double> u;

    double at(VertexId v) const;
};

LabelAssignment labels_from_radii(const RadiusAssignment& r);
RadiusAssignment radii_from_labels(const LabelAssignment& u);

double label_from_radius(double r, Geometry geom);
double radius_from_label(double u, Geometry geom);

struct StructureConditionReport {
    bool pass = true;
    /// (face index, violated cyclic value) for each failing face.
    std::vector<std::pair<int, double>> offending_faces;
};

/// Checks eta_ij + eta_jk * eta_ik >= 0 cyclically on every face.
StructureConditionReport check_structure_condition(const Triangulation& t,
                                                   const WeightAssignment& eta);

struct RegularityReport {
    bool pass = true;
    std::vector<EdgeKey> offending_edges;
};

/// Fails iff some interior edge v1v2 with incident faces v1v2v3, v1v2v4 has
/// eta12 = 1, eta13 = -eta23, eta14 = -eta24 (each to 1e-12).
RegularityReport check_regular_weight(const Triangulation& t, const WeightAssignment& eta);

}  // namespace idcp
