#include "idcp/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "idcp/metrics.hpp"

namespace idcp {

namespace {

constexpr double kScale = 480.0;
constexpr double kCenter = 500.0;

double px(double x) { return kCenter + kScale * x; }
double py(double y) { return kCenter - kScale * y; }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string svg_circle(Complex c, double r, const std::string& style) {
    return "  <circle cx=\"" + num(px(c.real())) + "\" cy=\"" + num(py(c.imag())) + "\" r=\"" +
           num(kScale * r) + "\" " + style + "/>\n";
}

std::string svg_line(Complex p, Complex q, const std::string& style) {
    return "  <line x1=\"" + num(px(p.real())) + "\" y1=\"" + num(py(p.imag())) + "\" x2=\"" +
           num(px(q.real())) + "\" y2=\"" + num(py(q.imag())) + "\" " + style + "/>\n";
}

/// Geodesic between two disk points: circular arc orthogonal to the unit
/// circle, or a straight chord when (nearly) collinear with the origin.
std::string svg_geodesic(Complex p, Complex q, const std::string& style) {
    // Orthogonality to the unit circle gives 2 o.p = |p|^2 + 1, 2 o.q = |q|^2 + 1.
    double det = 4.0 * (p.real() * q.imag() - p.imag() * q.real());
    if (std::abs(det) < 1e-9) return svg_line(p, q, style);
    double bp = std::norm(p) + 1.0, bq = std::norm(q) + 1.0;
    Complex o((bp * 2.0 * q.imag() - bq * 2.0 * p.imag()) / det,
              (bq * 2.0 * p.real() - bp * 2.0 * q.real()) / det);
    double r = std::abs(p - o);
    Complex u = p - o, v = q - o;
    double s = u.real() * v.imag() - u.imag() * v.real();
    int sweep = s > 0.0 ? 1 : 0;  // math CCW is screen CW under the y flip
    return "  <path d=\"M " + num(px(p.real())) + " " + num(py(p.imag())) + " A " +
           num(kScale * r) + " " + num(kScale * r) + " 0 0 " + std::to_string(sweep) + " " +
           num(px(q.real())) + " " + num(py(q.imag())) + "\" " + style + "/>\n";
}

}  // namespace

std::string render_svg(const PackingDocument& doc, const RenderOptions& options) {
    if (!doc.layout) throw DocumentError("render_svg: document has no layout");
    Triangulation t = doc.triangulation();
    const DiskLayout& layout = *doc.layout;
    for (VertexId v : t.vertices())
        if (!layout.position.count(v))
            throw DocumentError("render_svg: layout misses vertex " + std::to_string(v));

    // Circle per vertex: Euclidean image of the hyperbolic circle at the
    // layout position, or a raw Euclidean circle when only radii_euc given.
    std::map<VertexId, EuclideanCircle> circles;
    if (doc.radii_hyp || doc.labels_u) {
        RadiusAssignment r = doc.hyperbolic_radii();
        for (VertexId v : t.vertices())
            circles[v] = hyp_to_euc_circle({layout.at(v), r.at(v)});
    } else if (doc.radii_euc) {
        for (VertexId v : t.vertices())
            circles[v] = EuclideanCircle{layout.at(v), doc.radii_euc->at(v)};
    } else {
        throw DocumentError("render_svg: document has no radii");
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n";
    out << "  <defs><clipPath id=\"disk\"><circle cx=\"" << num(kCenter) << "\" cy=\""
        << num(kCenter) << "\" r=\"" << num(kScale) << "\"/></clipPath></defs>\n";
    out << svg_circle({0, 0}, 1.0, "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");

    const std::string edge_style = "fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"";
    for (const auto& e : t.edges()) {
        Complex p = layout.at(e.a), q = layout.at(e.b);
        out << (options.geodesic_edges ? svg_geodesic(p, q, edge_style)
                                       : svg_line(p, q, edge_style));
    }

    if (options.face_circles) {
        const std::string fc_style =
            "fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"1\" stroke-dasharray=\"6 4\"";
        for (const auto& f : t.faces()) {
            FaceGeometry g = power_center(
                {circles.at(f[0]).center, circles.at(f[1]).center, circles.at(f[2]).center},
                {circles.at(f[0]).radius, circles.at(f[1]).radius, circles.at(f[2]).radius});
            if (g.virtual_circle) continue;
            out << svg_circle(g.power_center, std::sqrt(g.face_power), fc_style);
        }
    }

    for (VertexId v : t.vertices()) {
        const EuclideanCircle& c = circles.at(v);
        if (std::abs(c.center) + c.radius < 1.0) {
            out << svg_circle(c.center, c.radius,
                              "fill=\"none\" stroke=\"#4682b4\" stroke-width=\"1.5\"");
        } else {
            // Generalized circle: clipped to the disk, distinct stroke.
            out << svg_circle(c.center, c.radius,
                              "fill=\"none\" stroke=\"#dc143c\" stroke-width=\"1.5\" "
                              "clip-path=\"url(#disk)\"");
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace idcp
