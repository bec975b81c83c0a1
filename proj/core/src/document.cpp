#include "idcp/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace idcp {

namespace {

using nlohmann::json;

std::string edge_key_string(const EdgeKey& e) {
    return std::to_string(e.a) + "-" + std::to_string(e.b);
}

EdgeKey parse_edge_key(const std::string& s) {
    auto dash = s.find('-', 1);  // allow no negative ids, but '-' at 0 is malformed anyway
    if (dash == std::string::npos)
        throw DocumentError("malformed edge key '" + s + "' (expected \"i-j\")");
    int i, j;
    try {
        i = std::stoi(s.substr(0, dash));
        j = std::stoi(s.substr(dash + 1));
    } catch (const std::exception&) {
        throw DocumentError("malformed edge key '" + s + "'");
    }
    if (i >= j) throw DocumentError("edge key '" + s + "' must have i < j");
    return {i, j};
}

std::map<VertexId, double> parse_vertex_map(const json& j, const std::string& field) {
    std::map<VertexId, double> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        try {
            out[std::stoi(it.key())] = it.value().get<double>();
        } catch (const std::exception&) {
            throw DocumentError("malformed entry in '" + field + "': key '" + it.key() + "'");
        }
    }
    return out;
}

json vertex_map_json(const std::map<VertexId, double>& m) {
    json j = json::object();
    for (const auto& [v, x] : m) j[std::to_string(v)] = x;
    return j;
}

}  // namespace

RadiusAssignment PackingDocument::hyperbolic_radii() const {
    if (radii_hyp) return *radii_hyp;
    if (labels_u && labels_u->geometry == Geometry::Hyperbolic) return radii_from_labels(*labels_u);
    throw DocumentError("document carries no hyperbolic radii or labels");
}

PackingDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("parse error: ") + e.what());
    }

    PackingDocument doc;
    doc.version = j.value("version", 1);
    if (!j.contains("faces")) throw DocumentError("missing field 'faces'");
    for (const auto& f : j.at("faces")) {
        if (!f.is_array() || f.size() != 3)
            throw DocumentError("each face must be a triple of vertex ids");
        doc.faces.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    Triangulation t = doc.triangulation();  // validates connectivity etc.

    if (!j.contains("eta")) throw DocumentError("missing field 'eta'");
    for (auto it = j.at("eta").begin(); it != j.at("eta").end(); ++it) {
        EdgeKey e = parse_edge_key(it.key());
        double v = it.value().get<double>();
        if (!(v > -1.0)) throw DocumentError("eta must exceed -1 (edge " + it.key() + ")");
        doc.eta.set(e.a, e.b, v);
    }
    doc.eta.validate(t);

    auto read_radii = [&](const char* field, Geometry geom) -> std::optional<RadiusAssignment> {
        if (!j.contains(field)) return std::nullopt;
        RadiusAssignment r;
        r.geometry = geom;
        r.r = parse_vertex_map(j.at(field), field);
        for (const auto& [v, rv] : r.r) {
            if (!t.has_vertex(v))
                throw DocumentError(std::string(field) + ": unknown vertex id " + std::to_string(v));
            if (!(rv > 0.0))
                throw DocumentError(std::string(field) + ": non-positive radius at vertex " +
                                    std::to_string(v));
        }
        r.validate(t);
        return r;
    };
    doc.radii_hyp = read_radii("radii_hyp", Geometry::Hyperbolic);
    doc.radii_euc = read_radii("radii_euc", Geometry::Euclidean);

    if (j.contains("labels_u")) {
        LabelAssignment u;
        u.geometry = Geometry::Hyperbolic;
        u.u = parse_vertex_map(j.at("labels_u"), "labels_u");
        for (const auto& [v, uv] : u.u) {
            if (!t.has_vertex(v))
                throw DocumentError("labels_u: unknown vertex id " + std::to_string(v));
            if (!(uv < 0.0))
                throw DocumentError("labels_u: hyperbolic label must be negative at vertex " +
                                    std::to_string(v));
        }
        doc.labels_u = u;
    }

    if (j.contains("layout")) {
        DiskLayout layout;
        for (auto it = j.at("layout").begin(); it != j.at("layout").end(); ++it) {
            const auto& p = it.value();
            if (!p.is_array() || p.size() != 2)
                throw DocumentError("layout positions must be [x, y] pairs");
            VertexId v = std::stoi(it.key());
            if (!t.has_vertex(v))
                throw DocumentError("layout: unknown vertex id " + it.key());
            layout.position[v] = Complex(p[0].get<double>(), p[1].get<double>());
        }
        doc.layout = layout;
    }

    if (j.contains("metadata"))
        for (auto it = j.at("metadata").begin(); it != j.at("metadata").end(); ++it)
            doc.metadata[it.key()] = it.value().get<std::string>();

    return doc;
}

std::string serialize_document(const PackingDocument& doc) {
    json j;
    j["version"] = doc.version;

    Triangulation t = doc.triangulation();
    json verts = json::array();
    for (VertexId v : t.vertices())
        verts.push_back({{"id", v}, {"boundary", t.is_boundary(v)}});
    j["vertices"] = verts;

    json faces = json::array();
    for (const auto& f : doc.faces) faces.push_back({f[0], f[1], f[2]});
    j["faces"] = faces;

    json eta = json::object();
    for (const auto& [e, v] : doc.eta.values()) eta[edge_key_string(e)] = v;
    j["eta"] = eta;

    if (doc.radii_hyp) j["radii_hyp"] = vertex_map_json(doc.radii_hyp->r);
    if (doc.radii_euc) j["radii_euc"] = vertex_map_json(doc.radii_euc->r);
    if (doc.labels_u) j["labels_u"] = vertex_map_json(doc.labels_u->u);
    if (doc.layout) {
        json layout = json::object();
        for (const auto& [v, p] : doc.layout->position)
            layout[std::to_string(v)] = {p.real(), p.imag()};
        j["layout"] = layout;
    }
    if (!doc.metadata.empty()) j["metadata"] = doc.metadata;

    return j.dump(2) + "\n";
}

PackingDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

void save_document(const PackingDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DocumentError("cannot write '" + path + "'");
    out << serialize_document(doc);
}

}  // namespace idcp
