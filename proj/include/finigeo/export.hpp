#pragma once

// Highlighted incidence graphs of one constituent around an off-core point
// (DOT or JSON) and tabular listings of hyperplanes, Veldkamp lines and the
// sector correspondence.

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "finigeo/doily.hpp"
#include "finigeo/magic_line.hpp"
#include "finigeo/veldkamp.hpp"

namespace finigeo {

using ordered_json = nlohmann::ordered_json;

/// Node classes: "selected" (the chosen off point), "trace" (core points of
/// the traced hyperplane), "core" (remaining core points), "vertex" (the
/// nucleus), "sector" (other off points).
struct FigureGraph {
    std::string constituent;
    std::string selected;
    std::string trace;  // hyperplane name
    struct Node {
        std::string label;
        std::string cls;
    };
    struct Line {
        std::vector<std::string> points;
        bool bold = false;    // through the selected point
        bool vertex = false;  // through the nucleus
    };
    std::vector<Node> nodes;
    std::vector<Line> lines;
};

inline Sector parse_sector(const std::string& s) {
    if (s == "hyperbolic") return Sector::Hyperbolic;
    if (s == "elliptic") return Sector::Elliptic;
    if (s == "cone") return Sector::Cone;
    throw InputError("unknown figure '" + s + "' (expected hyperbolic, elliptic or cone)");
}

/// Labels of the off-core points that can be exported for a sector.
inline std::vector<std::string> valid_labels(const MagicLine& ml, Sector s) {
    std::vector<std::string> out;
    for (int p : ml.sector_points(s).to_vector()) out.push_back(ml.label(p));
    std::sort(out.begin(), out.end());
    return out;
}

inline FigureGraph build_figure(const MagicLine& ml, Sector sector, const std::string& label) {
    const int p = ml.find_label(label);
    if (p < 0 || ml.sector_of(p) != sector) {
        std::string msg = "invalid point '" + label + "' for the " + to_string(sector) + " sector; valid labels:";
        for (const auto& v : valid_labels(ml, sector)) msg += " " + v;
        throw InputError(msg);
    }
    const auto& c = ml.constituent_of(p);
    const auto trace = doily_trace(ml, p);

    FigureGraph g;
    g.constituent = c.name;
    g.selected = ml.label(p);
    g.trace = trace->name();
    for (int local = 0; local < c.geometry.point_count(); ++local) {
        const int gp = c.to_global[local];
        std::string cls = "sector";
        if (gp == p) cls = "selected";
        else if (gp == ml.nucleus) cls = "vertex";
        else if (ml.core.contains(gp)) cls = trace->points.contains(ml.core_to_duad[gp]) ? "trace" : "core";
        g.nodes.push_back({ml.label(gp), cls});
    }
    for (const auto& line : c.geometry.lines()) {
        FigureGraph::Line l;
        for (int local : line) {
            const int gp = c.to_global[local];
            l.points.push_back(ml.label(gp));
            l.bold |= gp == p;
            l.vertex |= gp == ml.nucleus;
        }
        g.lines.push_back(std::move(l));
    }
    return g;
}

namespace detail {

inline std::string line_id(std::size_t i) { return "L" + std::to_string(i); }

inline std::string dot_attrs(const std::string& cls) {
    if (cls == "selected") return "color=blue, style=bold, penwidth=3";
    if (cls == "trace") return "color=red, style=bold, penwidth=3";
    if (cls == "core") return "color=red";
    if (cls == "vertex") return "color=darkgreen, shape=doublecircle";
    return "color=gray";
}

}  // namespace detail

/// Three-point lines become triangles of edges tagged with the line id, or,
/// with line_nodes, an explicit node per line joined to its points.
inline std::string to_dot(const FigureGraph& g, bool line_nodes = false) {
    std::ostringstream os;
    os << "graph \"" << g.constituent << "\" {\n";
    os << "  label=\"" << g.constituent << ": point " << g.selected << " traces " << g.trace << "\";\n";
    for (const auto& n : g.nodes)
        os << "  \"" << n.label << "\" [class=\"" << n.cls << "\", " << detail::dot_attrs(n.cls) << "];\n";
    for (std::size_t i = 0; i < g.lines.size(); ++i) {
        const auto& l = g.lines[i];
        const std::string style = l.bold ? "style=bold, penwidth=3" : "color=gray";
        if (line_nodes) {
            os << "  \"" << detail::line_id(i) << "\" [shape=point, class=\"line\"" << (l.bold ? ", bold=true" : "")
               << (l.vertex ? ", vertex=true" : "") << "];\n";
            for (const auto& pt : l.points)
                os << "  \"" << detail::line_id(i) << "\" -- \"" << pt << "\" [" << style << "];\n";
        } else {
            for (std::size_t a = 0; a < l.points.size(); ++a)
                for (std::size_t b = a + 1; b < l.points.size(); ++b)
                    os << "  \"" << l.points[a] << "\" -- \"" << l.points[b] << "\" [line=\"" << detail::line_id(i)
                       << "\", " << style << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

inline ordered_json to_json(const FigureGraph& g, bool line_nodes = false) {
    ordered_json out;
    out["constituent"] = g.constituent;
    out["selected"] = g.selected;
    out["trace"] = g.trace;
    out["nodes"] = ordered_json::array();
    for (const auto& n : g.nodes) out["nodes"].push_back({{"id", n.label}, {"class", n.cls}});
    out["lines"] = ordered_json::array();
    for (std::size_t i = 0; i < g.lines.size(); ++i) {
        const auto& l = g.lines[i];
        out["lines"].push_back({{"id", detail::line_id(i)}, {"points", l.points}, {"bold", l.bold}, {"vertex", l.vertex}});
    }
    out["edges"] = ordered_json::array();
    for (std::size_t i = 0; i < g.lines.size(); ++i) {
        const auto& l = g.lines[i];
        if (line_nodes) {
            for (const auto& pt : l.points)
                out["edges"].push_back({{"source", detail::line_id(i)}, {"target", pt}, {"bold", l.bold}});
        } else {
            for (std::size_t a = 0; a < l.points.size(); ++a)
                for (std::size_t b = a + 1; b < l.points.size(); ++b)
                    out["edges"].push_back({{"source", l.points[a]},
                                            {"target", l.points[b]},
                                            {"line", detail::line_id(i)},
                                            {"bold", l.bold}});
        }
    }
    return out;
}

// ---- tables -----------------------------------------------------------------

inline std::vector<std::string> duad_labels_of(PointSet s) {
    std::vector<std::string> out;
    for (int p : s.to_vector()) out.push_back(duad_at(p).label());
    return out;
}

inline ordered_json hyperplane_table() {
    ordered_json rows = ordered_json::array();
    for (const auto& h : named_hyperplanes())
        rows.push_back({{"name", h.name()},
                        {"kind", to_string(h.kind)},
                        {"size", h.points.size()},
                        {"points", duad_labels_of(h.points)},
                        {"deep_points", duad_labels_of(deep_points(doily(), h.points))}});
    return rows;
}

inline ordered_json veldkamp_line_table() {
    ordered_json rows = ordered_json::array();
    for (const auto& l : doily_veldkamp_lines()) {
        const auto f = classify_veldkamp_line(l);
        rows.push_back({{"members", {l.members[0].name(), l.members[1].name(), l.members[2].name()}},
                        {"family", family_number(f)},
                        {"family_name", to_string(f)},
                        {"core", duad_labels_of(l.members[0].points & l.members[1].points)}});
    }
    return rows;
}

inline std::string sector_map_text(const DoilyHyperplane& h, const SectorObject& obj) {
    return h.name() + " ↦ " + (obj.points.size() == 2 ? "pair " : "point ") + obj.text + " (" + to_string(obj.sector) + ")";
}

inline ordered_json sector_map_table(const MagicLine& ml) {
    const auto corr = build_correspondence(ml);
    ordered_json rows = ordered_json::array();
    for (const auto& h : named_hyperplanes()) {
        const auto& obj = corr.at(h);
        std::vector<std::string> pts;
        for (int p : obj.points) pts.push_back(ml.label(p));
        rows.push_back({{"hyperplane", h.name()},
                        {"sector", to_string(obj.sector)},
                        {"points", pts},
                        {"image", obj.text},
                        {"text", sector_map_text(h, obj)}});
    }
    return rows;
}

/// One line per row, human readable.
inline std::string table_text(const std::string& what, const ordered_json& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        if (what == "hyperplanes") {
            os << r["name"].get<std::string>() << "  " << r["kind"].get<std::string>() << "  {";
            bool first = true;
            for (const auto& p : r["points"]) {
                os << (first ? "" : ", ") << p.get<std::string>();
                first = false;
            }
            os << "}\n";
        } else if (what == "veldkamp_lines") {
            os << "{" << r["members"][0].get<std::string>() << ", " << r["members"][1].get<std::string>() << ", "
               << r["members"][2].get<std::string>() << "}  (" << r["family"].get<int>() << ") "
               << r["family_name"].get<std::string>() << "\n";
        } else {
            os << r["text"].get<std::string>() << "\n";
        }
    }
    return os.str();
}

inline ordered_json table(const std::string& what) {
    if (what == "hyperplanes") return hyperplane_table();
    if (what == "veldkamp_lines") return veldkamp_line_table();
    if (what == "sector_maps") return sector_map_table(build_magic_line());
    throw InputError("unknown table '" + what + "' (expected hyperplanes, veldkamp_lines or sector_maps)");
}

}  // namespace finigeo
