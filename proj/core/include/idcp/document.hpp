#pragma once

#include <map>
#include <optional>
#include <string>

#include "idcp/mesh.hpp"
#include "idcp/solver.hpp"

namespace idcp {

struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// On-disk packing description (JSON). Edge keys are "i-j" with i < j.
struct PackingDocument {
    int version = 1;
    std::vector<std::array<VertexId, 3>> faces;
    WeightAssignment eta;
    std::optional<RadiusAssignment> radii_hyp;
    std::optional<RadiusAssignment> radii_euc;
    std::optional<LabelAssignment> labels_u;
    std::optional<DiskLayout> layout;
    std::map<std::string, std::string> metadata;

    Triangulation triangulation() const { return build_triangulation(faces); }

    /// Hyperbolic radii, derived from labels if not stored directly.
    RadiusAssignment hyperbolic_radii() const;
};

PackingDocument parse_document(const std::string& text);
std::string serialize_document(const PackingDocument& doc);

PackingDocument load_document(const std::string& path);
void save_document(const PackingDocument& doc, const std::string& path);

}  // namespace idcp
