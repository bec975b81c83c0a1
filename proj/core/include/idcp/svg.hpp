#pragma once

#include <string>

#include "idcp/document.hpp"

namespace idcp {

struct RenderOptions {
    bool geodesic_edges = false;  // hyperbolic geodesic arcs instead of chords
    bool face_circles = false;    // dashed, omitted when virtual
};

/// Deterministic SVG of a packing laid out in the Poincare disk: 1000x1000
/// viewport, unit disk mapped to a centered circle of radius 480.
std::string render_svg(const PackingDocument& doc, const RenderOptions& options = {});

}  // namespace idcp
