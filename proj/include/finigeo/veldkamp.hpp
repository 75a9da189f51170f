#pragma once

// Veldkamp spaces of geometries with three points per line. Points are the
// proper geometric hyperplanes; lines are the triples {A, B, A (+) B}.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "finigeo/doily.hpp"
#include "finigeo/errors.hpp"
#include "finigeo/incidence.hpp"

namespace finigeo {

struct VeldkampSpace {
    int universe = 0;                         // point count of the underlying geometry
    std::vector<PointSet> points;             // hyperplanes, in scan order
    std::vector<std::array<int, 3>> lines;    // sorted triples of indices into points

    /// Index of a hyperplane, or -1.
    [[nodiscard]] int index_of(PointSet h) const {
        auto it = std::lower_bound(points.begin(), points.end(), h);
        return it != points.end() && *it == h ? static_cast<int>(it - points.begin()) : -1;
    }

    [[nodiscard]] std::vector<int> lines_through(int point) const {
        std::vector<int> out;
        for (int l = 0; l < static_cast<int>(lines.size()); ++l)
            if (std::find(lines[l].begin(), lines[l].end(), point) != lines[l].end()) out.push_back(l);
        return out;
    }
};

inline VeldkampSpace build_veldkamp_space(const IncidenceStructure& g) {
    for (const auto& line : g.lines())
        if (line.size() != 3) throw InputError("build_veldkamp_space: every line must have three points");

    VeldkampSpace vs;
    vs.universe = g.point_count();
    for (const auto& h : enumerate_hyperplanes(g)) vs.points.push_back(h.points);  // already sorted by bits

    std::set<std::array<int, 3>> seen;
    const int n = static_cast<int>(vs.points.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int c = vs.index_of(veldkamp_sum(vs.points[a], vs.points[b], vs.universe));
            if (c < 0) throw ConsistencyError("build_veldkamp_space: Veldkamp sum left the hyperplane set");
            std::array<int, 3> t{a, b, c};
            std::sort(t.begin(), t.end());
            if (seen.insert(t).second) vs.lines.push_back(t);
        }
    return vs;
}

/// Line shapes of the doily's Veldkamp space; the value is the number of the
/// corresponding representative in the usual list of five families.
enum class VeldkampFamily {
    PerpGridGrid = 4,          // {p_ij, g_ikl, g_jkl}
    PerpPerpPerpDisjoint = 5,  // {p_ij, p_kl, p_mn}
    PerpPerpPerpTriangle = 6,  // {p_ij, p_ik, p_jk}
    OvoidPerpGrid = 7,         // {o_i, p_jk, g_ijk}
    OvoidOvoidPerp = 8,        // {o_i, o_j, p_ij}
};

inline constexpr std::array<VeldkampFamily, 5> kAllFamilies{
    VeldkampFamily::PerpGridGrid, VeldkampFamily::PerpPerpPerpDisjoint, VeldkampFamily::PerpPerpPerpTriangle,
    VeldkampFamily::OvoidPerpGrid, VeldkampFamily::OvoidOvoidPerp};

inline int family_number(VeldkampFamily f) { return static_cast<int>(f); }

inline std::string to_string(VeldkampFamily f) {
    switch (f) {
        case VeldkampFamily::PerpGridGrid: return "perp-grid-grid";
        case VeldkampFamily::PerpPerpPerpDisjoint: return "perp-perp-perp-disjoint";
        case VeldkampFamily::PerpPerpPerpTriangle: return "perp-perp-perp-triangle";
        case VeldkampFamily::OvoidPerpGrid: return "ovoid-perp-grid";
        case VeldkampFamily::OvoidOvoidPerp: return "ovoid-ovoid-perp";
    }
    return "?";
}

/// A Veldkamp line of the doily; members ordered ovoids, perp-sets, grids,
/// then by defining labels.
struct VeldkampLine {
    std::array<DoilyHyperplane, 3> members;

    [[nodiscard]] std::string name() const {
        return "{" + members[0].name() + ", " + members[1].name() + ", " + members[2].name() + "}";
    }
};

inline VeldkampLine make_veldkamp_line(DoilyHyperplane a, DoilyHyperplane b, DoilyHyperplane c) {
    VeldkampLine l{{std::move(a), std::move(b), std::move(c)}};
    std::sort(l.members.begin(), l.members.end(), [](const DoilyHyperplane& x, const DoilyHyperplane& y) {
        return std::tie(x.kind, x.index) < std::tie(y.kind, y.index);
    });
    return l;
}

/// True iff the three members are distinct, each is the Veldkamp sum of the
/// other two, and the three pairwise intersections coincide.
inline bool is_veldkamp_line(const VeldkampLine& l) {
    const auto& [a, b, c] = l.members;
    if (a.points == b.points || b.points == c.points || a.points == c.points) return false;
    if (veldkamp_sum(a.points, b.points, kDuadCount) != c.points) return false;
    if (veldkamp_sum(a.points, c.points, kDuadCount) != b.points) return false;
    if (veldkamp_sum(b.points, c.points, kDuadCount) != a.points) return false;
    const PointSet core = a.points & b.points;
    return (a.points & c.points) == core && (b.points & c.points) == core;
}

inline VeldkampFamily classify_veldkamp_line(const VeldkampLine& l) {
    if (!is_veldkamp_line(l)) throw InputError("classify_veldkamp_line: not a Veldkamp line");
    int ovoids = 0, perps = 0, grids = 0;
    for (const auto& m : l.members) {
        ovoids += m.kind == HyperplaneKind::Ovoid;
        perps += m.kind == HyperplaneKind::PerpSet;
        grids += m.kind == HyperplaneKind::Grid;
    }
    if (ovoids == 2 && perps == 1) return VeldkampFamily::OvoidOvoidPerp;
    if (ovoids == 1 && perps == 1 && grids == 1) return VeldkampFamily::OvoidPerpGrid;
    if (perps == 1 && grids == 2) return VeldkampFamily::PerpGridGrid;
    if (perps == 3) {
        // Deep-point duads: pairwise disjoint (a syntheme) or pairwise meeting.
        std::array<Duad, 3> d;
        for (int i = 0; i < 3; ++i) d[i] = Duad(l.members[i].index[0], l.members[i].index[1]);
        const bool disjoint = d[0].disjoint(d[1]) && d[0].disjoint(d[2]) && d[1].disjoint(d[2]);
        const bool meeting = !d[0].disjoint(d[1]) && !d[0].disjoint(d[2]) && !d[1].disjoint(d[2]);
        if (disjoint) return VeldkampFamily::PerpPerpPerpDisjoint;
        if (meeting) return VeldkampFamily::PerpPerpPerpTriangle;
    }
    throw ConsistencyError("classify_veldkamp_line: member pattern matches no family: " + l.name());
}

/// All 155 Veldkamp lines of the doily, with named members.
inline std::vector<VeldkampLine> doily_veldkamp_lines() {
    const auto vs = build_veldkamp_space(doily());
    std::vector<VeldkampLine> out;
    out.reserve(vs.lines.size());
    for (const auto& t : vs.lines)
        out.push_back(make_veldkamp_line(classify_hyperplane(vs.points[t[0]]), classify_hyperplane(vs.points[t[1]]),
                                         classify_hyperplane(vs.points[t[2]])));
    return out;
}

using FamilyCensus = std::map<VeldkampFamily, int>;

inline FamilyCensus family_census(const std::vector<VeldkampLine>& lines) {
    FamilyCensus census;
    for (auto f : kAllFamilies) census[f] = 0;
    for (const auto& l : lines) ++census[classify_veldkamp_line(l)];
    return census;
}

}  // namespace finigeo
