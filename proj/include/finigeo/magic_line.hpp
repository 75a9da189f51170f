#pragma once

// W(5,2) and its magic Veldkamp line: the hyperbolic quadric Q+(5,2), the
// elliptic quadric Q-(5,2) and the quadratic cone, which pairwise meet in a
// parabolic quadric Q(4,2), i.e. a copy of the doily.
//
// Global point index of a vector x in PG(5,2) is x.bits - 1 (0..62).

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "finigeo/doily.hpp"
#include "finigeo/errors.hpp"
#include "finigeo/gf2.hpp"
#include "finigeo/incidence.hpp"
#include "finigeo/veldkamp.hpp"

namespace finigeo {

inline constexpr int kAmbientDimension = 6;
inline constexpr int kW52Points = 63;

inline int point_index(BinaryVector x) {
    if (x.dim != kAmbientDimension || x.is_zero()) throw InputError("point_index: not a point of PG(5,2)");
    return x.bits - 1;
}
inline BinaryVector point_vector(int index) {
    if (index < 0 || index >= kW52Points) throw InputError("point_vector: index out of range");
    return BinaryVector(static_cast<std::uint8_t>(index + 1), kAmbientDimension);
}

/// Coordinates as a bit string x1 x2 ... x6, e.g. "110000".
inline std::string coordinate_string(BinaryVector x) {
    std::string s;
    for (int k = 1; k <= x.dim; ++k) s += static_cast<char>('0' + x.coord(k));
    return s;
}

/// Lexicographic order on (x1, ..., x6).
inline bool coordinate_less(BinaryVector a, BinaryVector b) { return coordinate_string(a) < coordinate_string(b); }

struct SymplecticSpace {
    SymplecticForm form{kAmbientDimension};
    IncidenceStructure geometry;  // 63 points, labelled by coordinate_string
};

/// All totally isotropic lines {x, y, x+y} of the standard symplectic form.
inline SymplecticSpace build_w52() {
    SymplecticSpace w;
    std::set<std::array<int, 3>> lines;
    const auto pts = projective_points(kAmbientDimension);
    for (auto x : pts)
        for (auto y : pts) {
            if (x == y || w.form.eval(x, y) != 0) continue;
            std::array<int, 3> t{point_index(x), point_index(y), point_index(x + y)};
            std::sort(t.begin(), t.end());
            lines.insert(t);
        }
    std::vector<std::vector<int>> ls;
    for (const auto& t : lines) ls.push_back({t.begin(), t.end()});
    std::vector<std::string> labels;
    for (auto x : pts) labels.push_back(coordinate_string(x));
    w.geometry = IncidenceStructure(kW52Points, std::move(ls), std::move(labels));
    return w;
}

enum class Sector { Core, Hyperbolic, Elliptic, Cone, Nucleus };

inline std::string to_string(Sector s) {
    switch (s) {
        case Sector::Core: return "core";
        case Sector::Hyperbolic: return "hyperbolic";
        case Sector::Elliptic: return "elliptic";
        case Sector::Cone: return "cone";
        case Sector::Nucleus: return "nucleus";
    }
    return "?";
}

enum class LabelKind { Duad, Triple, Single, Quadruple, Hexad };

/// Combinatorial name of a magic-line point: a duad (core), a 3-subset
/// (hyperbolic), i or i' (elliptic), a 4-subset (cone) or 123456 (nucleus).
struct PointLabel {
    LabelKind kind = LabelKind::Duad;
    std::vector<int> elements;  // ascending
    bool primed = false;

    [[nodiscard]] std::string text() const {
        std::string s;
        for (int x : elements) s += std::to_string(x);
        if (primed) s += "′";
        return s;
    }

    friend bool operator==(const PointLabel&, const PointLabel&) = default;
};

/// Accepts "12", "146", "3", "3'" or "3′", "3456", "123456".
inline std::optional<PointLabel> parse_label(std::string s) {
    PointLabel out;
    const std::string prime_utf8 = "′";
    if (s.size() > prime_utf8.size() && s.ends_with(prime_utf8)) {
        out.primed = true;
        s.resize(s.size() - prime_utf8.size());
    } else if (!s.empty() && s.back() == '\'') {
        out.primed = true;
        s.pop_back();
    }
    if (s.empty() || s.size() > 6) return std::nullopt;
    for (char c : s) {
        if (c < '1' || c > '6') return std::nullopt;
        out.elements.push_back(c - '0');
    }
    std::sort(out.elements.begin(), out.elements.end());
    if (std::adjacent_find(out.elements.begin(), out.elements.end()) != out.elements.end()) return std::nullopt;
    switch (out.elements.size()) {
        case 1: out.kind = LabelKind::Single; break;
        case 2: out.kind = LabelKind::Duad; break;
        case 3: out.kind = LabelKind::Triple; break;
        case 4: out.kind = LabelKind::Quadruple; break;
        case 6: out.kind = LabelKind::Hexad; break;
        default: return std::nullopt;
    }
    if (out.primed && out.kind != LabelKind::Single) return std::nullopt;
    return out;
}

/// One constituent of the magic line with the W(5,2) lines it contains.
struct Constituent {
    std::string name;
    PointSet points;              // global indices
    IncidenceStructure geometry;  // induced lines, labelled by point labels
    std::vector<int> to_global;   // local -> global

    [[nodiscard]] int local_index(int global) const {
        auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
        return it != to_global.end() && *it == global ? static_cast<int>(it - to_global.begin()) : -1;
    }
};

struct MagicLine {
    SymplecticSpace w52;
    QuadraticForm q_plus_form = QuadraticForm::hyperbolic(kAmbientDimension);
    QuadraticForm q_minus_form = QuadraticForm::elliptic(kAmbientDimension);

    Constituent q_plus, q_minus, cone;
    PointSet core;
    int nucleus = -1;
    std::array<int, kDuadCount> duad_to_core{};  // duad index -> global point
    std::vector<int> core_to_duad;               // global point -> duad index, -1 off the core
    std::vector<PointLabel> labels;              // by global point

    [[nodiscard]] Sector sector_of(int p) const {
        w52.geometry.check_point(p);
        if (core.contains(p)) return Sector::Core;
        if (p == nucleus) return Sector::Nucleus;
        if (q_plus.points.contains(p)) return Sector::Hyperbolic;
        if (q_minus.points.contains(p)) return Sector::Elliptic;
        return Sector::Cone;
    }

    [[nodiscard]] PointSet sector_points(Sector s) const {
        PointSet out;
        for (int p = 0; p < kW52Points; ++p)
            if (sector_of(p) == s) out.insert(p);
        return out;
    }

    /// The constituent whose sector holds p (the cone for the nucleus).
    [[nodiscard]] const Constituent& constituent_of(int p) const {
        switch (sector_of(p)) {
            case Sector::Hyperbolic: return q_plus;
            case Sector::Elliptic: return q_minus;
            case Sector::Cone:
            case Sector::Nucleus: return cone;
            case Sector::Core: break;
        }
        throw InputError("constituent_of: core points lie in all three constituents");
    }

    [[nodiscard]] std::string label(int p) const { return labels.at(p).text(); }

    /// Global index of the point with this label, or -1.
    [[nodiscard]] int find_label(const std::string& text) const {
        const auto parsed = parse_label(text);
        if (!parsed) return -1;
        for (int p = 0; p < static_cast<int>(labels.size()); ++p)
            if (labels[p] == *parsed) return p;
        return -1;
    }
};

namespace detail {

inline PointSet zero_set(const QuadraticForm& q) {
    PointSet out;
    for (auto x : q.zeros()) out.insert(point_index(x));
    return out;
}

/// Core points on the constituent lines through p, as a set of duads.
inline PointSet trace_duads(const MagicLine& ml, PointSet constituent, int p) {
    const auto& w = ml.w52.geometry;
    PointSet out;
    for (int l : w.lines_through(p)) {
        const PointSet line = w.line_set(l);
        if (!line.subset_of(constituent)) continue;
        for (int c : (line & ml.core).to_vector()) out.insert(ml.core_to_duad[c]);
    }
    return out;
}

/// Radical of Q+ restricted to the hyperplane {x1 + x2 = 0} of PG(5,2), a
/// parabolic Q(4,2) in five coordinates; returned in ambient coordinates.
inline BinaryVector restricted_radical(const QuadraticForm& q) {
    // Basis of {x1 = x2}: e1+e2, e3, e4, e5, e6.
    const std::array<BinaryVector, 5> basis{BinaryVector(0b000011, 6), BinaryVector::unit(3, 6), BinaryVector::unit(4, 6),
                                            BinaryVector::unit(5, 6), BinaryVector::unit(6, 6)};
    const auto lift = [&](BinaryVector y) {
        BinaryVector x(0, 6);
        for (int k = 1; k <= 5; ++k)
            if (y.coord(k)) x = x + basis[k - 1];
        return x;
    };
    QuadraticForm restricted(5);
    for (int i = 1; i <= 5; ++i)
        for (int j = i; j <= 5; ++j) {
            const auto ei = BinaryVector::unit(i, 5), ej = BinaryVector::unit(j, 5);
            const int c = i == j ? q.eval(lift(ei)) : q.eval(lift(ei + ej)) ^ q.eval(lift(ei)) ^ q.eval(lift(ej));
            restricted.set_coeff(i, j, c);
        }
    if (classify_form(restricted).kind != FormKind::Parabolic)
        throw ConsistencyError("restricted form is not parabolic");
    const auto rad = polarize(restricted).radical();
    if (rad.size() != 1) throw ConsistencyError("restricted form: radical is not a single point");
    return lift(rad.front());
}

inline std::vector<int> set_minus(const std::vector<int>& all, const std::vector<int>& xs) {
    std::vector<int> out;
    for (int a : all)
        if (std::find(xs.begin(), xs.end(), a) == xs.end()) out.push_back(a);
    return out;
}

inline std::vector<int> full_set() { return {1, 2, 3, 4, 5, 6}; }

inline Constituent make_constituent(std::string name, const SymplecticSpace& w, PointSet pts) {
    Constituent c;
    c.name = std::move(name);
    c.points = pts;
    auto sub = induced_structure(w.geometry, pts);
    c.geometry = std::move(sub.geometry);
    c.to_global = std::move(sub.to_parent);
    return c;
}

inline void relabel(Constituent& c, const std::vector<PointLabel>& labels) {
    std::vector<std::string> names;
    for (int g : c.to_global) names.push_back(labels[g].text());
    c.geometry = IncidenceStructure(c.geometry.point_count(), c.geometry.lines(), std::move(names));
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw ConsistencyError("magic line: " + what);
}

}  // namespace detail

/// Labels for every one of the 63 points, forced by traces on the core:
/// hyperbolic abc traces g_abc, elliptic i and i' trace o_i, cone klmn traces
/// p_ij with {i,j} = S \ {k,l,m,n}. The two choices inside complementary
/// pairs are fixed by one seed pair (lexicographically smaller vector gets
/// 123, resp. 1) and propagated along collinearity, then every line through
/// an off-core point is checked against the combinatorial line shapes.
inline std::vector<PointLabel> assign_labels(const MagicLine& ml) {
    const auto& w = ml.w52.geometry;
    std::vector<PointLabel> labels(kW52Points);
    std::vector<bool> done(kW52Points, false);

    for (int p : ml.core.to_vector()) {
        const Duad& d = duad_at(ml.core_to_duad[p]);
        labels[p] = {LabelKind::Duad, {d.a, d.b}, false};
        done[p] = true;
    }
    labels[ml.nucleus] = {LabelKind::Hexad, detail::full_set(), false};
    done[ml.nucleus] = true;

    // Group sector points by their trace.
    std::map<std::uint64_t, std::vector<int>> hyp, ell;
    for (int p = 0; p < kW52Points; ++p) {
        switch (ml.sector_of(p)) {
            case Sector::Hyperbolic: hyp[detail::trace_duads(ml, ml.q_plus.points, p).bits()].push_back(p); break;
            case Sector::Elliptic: ell[detail::trace_duads(ml, ml.q_minus.points, p).bits()].push_back(p); break;
            case Sector::Cone: {
                const auto h = classify_hyperplane(detail::trace_duads(ml, ml.cone.points, p));
                detail::require(h.kind == HyperplaneKind::PerpSet, "cone point trace is not a perp-set");
                labels[p] = {LabelKind::Quadruple, detail::set_minus(detail::full_set(), h.index), false};
                done[p] = true;
                break;
            }
            default: break;
        }
    }
    detail::require(hyp.size() == 10 && ell.size() == 6, "sector traces do not pair up");

    const auto smaller_first = [](std::vector<int> pair) {
        detail::require(pair.size() == 2, "trace shared by other than two points");
        if (coordinate_less(point_vector(pair[1]), point_vector(pair[0]))) std::swap(pair[0], pair[1]);
        return pair;
    };

    // Elliptic: unprimed i is collinear exactly with the primed j'.
    {
        std::map<int, std::vector<int>> by_ovoid;
        for (const auto& [bits, pts] : ell) {
            const auto h = classify_hyperplane(PointSet(bits));
            detail::require(h.kind == HyperplaneKind::Ovoid, "elliptic trace is not an ovoid");
            by_ovoid[h.index[0]] = pts;
        }
        const auto seed = smaller_first(by_ovoid.at(1));
        labels[seed[0]] = {LabelKind::Single, {1}, false};
        labels[seed[1]] = {LabelKind::Single, {1}, true};
        for (const auto& [i, pts] : by_ovoid) {
            if (i == 1) continue;
            detail::require(collinear(w, seed[0], pts[0]) != collinear(w, seed[0], pts[1]),
                            "elliptic pair not split by the seed");
            const int primed = collinear(w, seed[0], pts[0]) ? pts[0] : pts[1];
            const int unprimed = primed == pts[0] ? pts[1] : pts[0];
            labels[unprimed] = {LabelKind::Single, {i}, false};
            labels[primed] = {LabelKind::Single, {i}, true};
        }
        for (const auto& [i, pts] : by_ovoid) done[pts[0]] = done[pts[1]] = true;
    }

    // Hyperbolic: abc is collinear with the 3-subsets meeting it in one element.
    {
        std::map<std::vector<int>, std::vector<int>> by_grid;
        for (const auto& [bits, pts] : hyp) {
            const auto h = classify_hyperplane(PointSet(bits));
            detail::require(h.kind == HyperplaneKind::Grid, "hyperbolic trace is not a grid");
            by_grid[h.index] = pts;
        }
        const std::vector<int> seed_side{1, 2, 3};
        const auto seed = smaller_first(by_grid.at(seed_side));
        labels[seed[0]] = {LabelKind::Triple, seed_side, false};
        labels[seed[1]] = {LabelKind::Triple, detail::set_minus(detail::full_set(), seed_side), false};
        for (const auto& [side, pts] : by_grid) {
            if (side == seed_side) continue;
            detail::require(collinear(w, seed[0], pts[0]) != collinear(w, seed[0], pts[1]),
                            "hyperbolic pair not split by the seed");
            const auto other = detail::set_minus(detail::full_set(), side);
            int meet = 0;
            for (int x : side) meet += x <= 3;
            const auto& near = meet == 1 ? side : other;  // meets {1,2,3} in one element
            const auto& far = meet == 1 ? other : side;
            const int collinear_pt = collinear(w, seed[0], pts[0]) ? pts[0] : pts[1];
            const int other_pt = collinear_pt == pts[0] ? pts[1] : pts[0];
            labels[collinear_pt] = {LabelKind::Triple, near, false};
            labels[other_pt] = {LabelKind::Triple, far, false};
        }
        for (const auto& [side, pts] : by_grid) done[pts[0]] = done[pts[1]] = true;
    }

    detail::require(std::all_of(done.begin(), done.end(), [](bool b) { return b; }), "unlabelled point");

    // Line shapes through off-core points.
    const auto duad_label = [&](int p) { return Duad(labels[p].elements[0], labels[p].elements[1]); };
    for (int p = 0; p < kW52Points; ++p) {
        const Sector s = ml.sector_of(p);
        if (s == Sector::Core) continue;
        const PointSet constituent = ml.constituent_of(p).points;
        for (int l : w.lines_through(p)) {
            const PointSet line = w.line_set(l);
            if (!line.subset_of(constituent)) continue;
            const PointSet on_core = line & ml.core;
            detail::require(on_core.size() == 1 || s == Sector::Cone, "constituent line through an off-core point misses the core");
            if (on_core.size() != 1) continue;
            const int c = on_core.first();
            const int q = (line - PointSet::of({p, c})).first();
            const Duad d = duad_label(c);
            if (s == Sector::Hyperbolic) {
                const auto& x = labels[p].elements;
                const auto& y = labels[q].elements;
                std::vector<int> meet, uni;
                std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(meet));
                std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(uni));
                const auto rest = detail::set_minus(detail::full_set(), uni);
                detail::require(meet.size() == 1 && rest.size() == 1 && d == Duad(meet[0], rest[0]),
                                "hyperbolic line is not of shape {abc, aij, ak}");
            } else if (s == Sector::Elliptic) {
                const auto& a = labels[p];
                const auto& b = labels[q];
                detail::require(a.primed != b.primed && d == Duad(a.elements[0], b.elements[0]),
                                "elliptic line is not of shape {i, j', ij}");
            } else if (s == Sector::Nucleus || labels[q].kind == LabelKind::Hexad) {
                const auto& quad = labels[s == Sector::Nucleus ? q : p].elements;
                const auto pair = detail::set_minus(detail::full_set(), quad);
                detail::require(d == Duad(pair[0], pair[1]), "vertex line is not of shape {123456, klmn, ij}");
            }
        }
    }
    return labels;
}

/// Builds and verifies the magic line. Q+ = x1x2+x3x4+x5x6 and
/// Q- = x1^2+x1x2+x2^2+x3x4+x5x6 share the polarization theta; the cone is
/// their Veldkamp sum {x1 + x2 = 0} in W(5,2).
inline MagicLine build_magic_line() {
    using detail::require;
    MagicLine ml;
    ml.w52 = build_w52();
    const auto& w = ml.w52.geometry;
    const PointSet all = w.points();

    const auto theta = ml.w52.form.as_bilinear();
    require(polarize(ml.q_plus_form) == theta, "Q+ does not polarize to theta");
    require(polarize(ml.q_minus_form) == theta, "Q- does not polarize to theta");

    const PointSet qp = detail::zero_set(ml.q_plus_form);
    const PointSet qm = detail::zero_set(ml.q_minus_form);
    const PointSet cn = veldkamp_sum(qp, qm, kW52Points);
    ml.core = qp & qm;

    require(qp.size() == 35 && qm.size() == 27 && cn.size() == 31 && ml.core.size() == 15, "constituent sizes");
    require((qp & cn) == ml.core && (qm & cn) == ml.core, "pairwise intersections differ from the core");
    require(is_geometric_hyperplane(w, qp) && is_geometric_hyperplane(w, qm) && is_geometric_hyperplane(w, cn),
            "a constituent is not a hyperplane of W(5,2)");
    require((qp | qm | cn) == all, "constituents do not cover PG(5,2)");

    const BinaryVector nv = detail::restricted_radical(ml.q_plus_form);
    ml.nucleus = point_index(nv);
    require(cn.contains(ml.nucleus) && !ml.core.contains(ml.nucleus), "nucleus is not an off-core cone point");
    require(perp(w, ml.nucleus) == cn, "cone is not the perp of the nucleus");

    ml.q_plus = detail::make_constituent("Q+(5,2)", ml.w52, qp);
    ml.q_minus = detail::make_constituent("Q-(5,2)", ml.w52, qm);
    ml.cone = detail::make_constituent("cone", ml.w52, cn);

    const auto core_sub = induced_structure(w, ml.core);
    const auto iso = find_isomorphism(core_sub.geometry, doily());
    require(iso.has_value(), "core is not isomorphic to the doily");
    ml.core_to_duad.assign(kW52Points, -1);
    for (int i = 0; i < static_cast<int>(core_sub.to_parent.size()); ++i) {
        ml.core_to_duad[core_sub.to_parent[i]] = (*iso)[i];
        ml.duad_to_core[(*iso)[i]] = core_sub.to_parent[i];
    }

    require(ml.sector_points(Sector::Hyperbolic).size() == 20 && ml.sector_points(Sector::Elliptic).size() == 12 &&
                ml.sector_points(Sector::Cone).size() == 15,
            "sector sizes");

    ml.labels = assign_labels(ml);
    for (auto* c : {&ml.q_plus, &ml.q_minus, &ml.cone}) detail::relabel(*c, ml.labels);
    return ml;
}

/// Core points on the lines of p's constituent through p, classified as a
/// doily hyperplane. nullopt for the nucleus, whose trace is the whole doily.
inline std::optional<DoilyHyperplane> doily_trace(const MagicLine& ml, int p) {
    const Sector s = ml.sector_of(p);
    if (s == Sector::Core) throw InputError("doily_trace: point lies on the core");
    if (s == Sector::Nucleus) return std::nullopt;
    return classify_hyperplane(detail::trace_duads(ml, ml.constituent_of(p).points, p));
}

/// The other point of p's sector with the same trace; nullopt for cone
/// points and the nucleus.
inline std::optional<int> complementary_point(const MagicLine& ml, int p) {
    const Sector s = ml.sector_of(p);
    if (s == Sector::Core) throw InputError("complementary_point: point lies on the core");
    if (s == Sector::Cone || s == Sector::Nucleus) return std::nullopt;
    const auto mine = doily_trace(ml, p);
    for (int q : ml.sector_points(s).to_vector())
        if (q != p && doily_trace(ml, q)->points == mine->points) return q;
    throw ConsistencyError("complementary_point: no partner");
}

/// Sector object assigned to a doily hyperplane: a complementary pair
/// (elliptic for ovoids, hyperbolic for grids) or a single cone point.
struct SectorObject {
    Sector sector = Sector::Cone;
    std::vector<int> points;  // global indices; a pair is ordered for display
    std::string text;         // "3/3′", "123/456", "3456"
};

struct SectorCorrespondence {
    std::map<std::string, SectorObject> by_hyperplane;  // keyed by DoilyHyperplane::name()

    [[nodiscard]] const SectorObject& at(const DoilyHyperplane& h) const { return by_hyperplane.at(h.name()); }
};

/// Pairs print the unprimed (elliptic) or 1-containing (hyperbolic) label first.
inline SectorCorrespondence build_correspondence(const MagicLine& ml) {
    SectorCorrespondence out;
    std::map<std::uint64_t, std::vector<int>> by_trace;
    for (int p = 0; p < kW52Points; ++p) {
        const Sector s = ml.sector_of(p);
        if (s == Sector::Core || s == Sector::Nucleus) continue;
        by_trace[doily_trace(ml, p)->points.bits()].push_back(p);
    }
    for (const auto& h : named_hyperplanes()) {
        auto it = by_trace.find(h.points.bits());
        detail::require(it != by_trace.end(), "hyperplane " + h.name() + " has no sector image");
        SectorObject obj;
        obj.points = it->second;
        obj.sector = ml.sector_of(obj.points.front());
        const std::size_t want = h.kind == HyperplaneKind::PerpSet ? 1 : 2;
        const Sector want_sector = h.kind == HyperplaneKind::Ovoid  ? Sector::Elliptic
                                   : h.kind == HyperplaneKind::Grid ? Sector::Hyperbolic
                                                                    : Sector::Cone;
        detail::require(obj.points.size() == want && obj.sector == want_sector, "image shape for " + h.name());
        if (want == 2) {
            const auto& a = ml.labels[obj.points[0]];
            const bool swap = obj.sector == Sector::Elliptic ? a.primed : a.elements.front() != 1;
            if (swap) std::swap(obj.points[0], obj.points[1]);
            obj.text = ml.label(obj.points[0]) + "/" + ml.label(obj.points[1]);
        } else {
            obj.text = ml.label(obj.points[0]);
        }
        out.by_hyperplane.emplace(h.name(), std::move(obj));
    }
    return out;
}

struct SectorImage {
    VeldkampFamily family = VeldkampFamily::OvoidOvoidPerp;
    std::array<SectorObject, 3> members;

    [[nodiscard]] std::string text() const {
        return "{" + members[0].text + ", " + members[1].text + ", " + members[2].text + "}";
    }
};

inline SectorImage veldkamp_line_image(const SectorCorrespondence& corr, const VeldkampLine& l) {
    SectorImage img;
    img.family = classify_veldkamp_line(l);
    for (int i = 0; i < 3; ++i) img.members[i] = corr.at(l.members[i]);
    return img;
}

inline SectorImage veldkamp_line_image(const MagicLine& ml, const VeldkampLine& l) {
    return veldkamp_line_image(build_correspondence(ml), l);
}

/// The sector-image pattern for a family, instantiated with (i,j,k,l,m,n) a
/// permutation of S. Each object is its set of point labels.
inline std::set<std::set<std::string>> image_pattern(VeldkampFamily f, const std::array<int, 6>& v) {
    const auto [i, j, k, l, m, n] = v;
    const auto set = [](std::vector<int> xs) {
        std::sort(xs.begin(), xs.end());
        std::string s;
        for (int x : xs) s += std::to_string(x);
        return s;
    };
    const auto single = [&](std::vector<int> xs) { return std::set<std::string>{set(std::move(xs))}; };
    const auto hyp = [&](std::vector<int> a, std::vector<int> b) {
        return std::set<std::string>{set(std::move(a)), set(std::move(b))};
    };
    const auto ell = [](int x) { return std::set<std::string>{std::to_string(x), std::to_string(x) + "′"}; };
    switch (f) {
        case VeldkampFamily::PerpGridGrid:  // {klmn, ikl/jmn, jkl/imn}
            return {single({k, l, m, n}), hyp({i, k, l}, {j, m, n}), hyp({j, k, l}, {i, m, n})};
        case VeldkampFamily::PerpPerpPerpDisjoint:  // {klmn, ijmn, ijkl}
            return {single({k, l, m, n}), single({i, j, m, n}), single({i, j, k, l})};
        case VeldkampFamily::PerpPerpPerpTriangle:  // {klmn, jlmn, ilmn}
            return {single({k, l, m, n}), single({j, l, m, n}), single({i, l, m, n})};
        case VeldkampFamily::OvoidPerpGrid:  // {i/i', ilmn, ijk/lmn}
            return {ell(i), single({i, l, m, n}), hyp({i, j, k}, {l, m, n})};
        case VeldkampFamily::OvoidOvoidPerp:  // {i/i', j/j', klmn}
            return {ell(i), ell(j), single({k, l, m, n})};
    }
    return {};
}

/// True iff the image equals its family's pattern for some assignment of
/// i..n to the elements of S.
inline bool image_matches_pattern(const MagicLine& ml, const SectorImage& img) {
    std::set<std::set<std::string>> actual;
    for (const auto& obj : img.members) {
        std::set<std::string> labels;
        for (int p : obj.points) labels.insert(ml.label(p));
        actual.insert(labels);
    }
    std::array<int, 6> v{1, 2, 3, 4, 5, 6};
    do {
        if (image_pattern(img.family, v) == actual) return true;
    } while (std::next_permutation(v.begin(), v.end()));
    return false;
}

struct PolarPairReport {
    Sector sector = Sector::Hyperbolic;
    bool collinear = false;         // inside the constituent
    PointSet mutual_perp;           // global indices
    bool equals_trace = false;      // mutual perp == doily trace of either point
    int induced_lines = 0;
    int rank = 0;                   // 1: no lines; 2: lines but no singular planes; 3: planes
    bool non_degenerate = false;    // no point collinear with all others; for rank >= 2 every point on a line
    DoilyHyperplane trace;

    /// Mutual perp is a non-degenerate polar space of rank at least two.
    [[nodiscard]] bool is_polar_pair() const { return !collinear && non_degenerate && rank >= 2; }
};

inline PolarPairReport polar_pair_check(const MagicLine& ml, int p, int q) {
    if (p == q) throw InputError("polar_pair_check: points must differ");
    const Sector s = ml.sector_of(p);
    if ((s != Sector::Hyperbolic && s != Sector::Elliptic) || complementary_point(ml, p) != q)
        throw InputError("polar_pair_check: not a complementary pair");

    const auto& c = ml.constituent_of(p);
    const auto& g = c.geometry;
    const int lp = c.local_index(p), lq = c.local_index(q);

    PolarPairReport r;
    r.sector = s;
    r.collinear = collinear(g, lp, lq);
    const PointSet local = perp(g, lp) & perp(g, lq);
    for (int x : local.to_vector()) r.mutual_perp.insert(c.to_global[x]);
    r.trace = *doily_trace(ml, p);

    PointSet as_duads;
    bool on_core = r.mutual_perp.subset_of(ml.core);
    if (on_core)
        for (int x : r.mutual_perp.to_vector()) as_duads.insert(ml.core_to_duad[x]);
    r.equals_trace = on_core && as_duads == r.trace.points;

    const auto sub = induced_structure(g, local).geometry;
    r.induced_lines = sub.line_count();
    const int n = sub.point_count();
    bool planes = false;
    for (const auto& line : sub.line_sets())
        for (int x = 0; x < n; ++x)
            if (!line.contains(x) && line.subset_of(perp(sub, x))) planes = true;
    r.rank = n == 0 ? 0 : r.induced_lines == 0 ? 1 : planes ? 3 : 2;

    r.non_degenerate = n > 0;
    for (int x = 0; x < n; ++x) {
        if (perp(sub, x) == sub.points() && n > 1) r.non_degenerate = false;
        if (r.rank >= 2 && sub.degree(x) == 0) r.non_degenerate = false;
    }
    return r;
}

/// Coordinate-free models of the three constituents, built from labels.
/// Points: the 15 duads (indices 0..14), then the sector labels.
struct SectorModels {
    IncidenceStructure hyperbolic;  // duads + 20 triples; synthemes + {abc, aij, ak}
    IncidenceStructure elliptic;    // duads + 1..6 + 1'..6'; synthemes + {i, j', ij}
    IncidenceStructure cone;        // duads + 15 quadruples + 123456; synthemes + vertex lines + imported
};

namespace detail {

inline std::vector<std::vector<int>> subsets(int size) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < 64; ++mask)
        if (std::popcount(mask) == size) {
            std::vector<int> s;
            for (int x = 0; x < 6; ++x)
                if ((mask >> x) & 1) s.push_back(x + 1);
            out.push_back(s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string digits(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += std::to_string(x);
    return s;
}

inline std::vector<std::vector<int>> syntheme_lines() {
    std::vector<std::vector<int>> out;
    for (const auto& s : all_synthemes()) out.push_back({s[0].index(), s[1].index(), s[2].index()});
    return out;
}

inline std::vector<std::string> duad_labels() {
    std::vector<std::string> out;
    for (const auto& d : all_duads()) out.push_back(d.label());
    return out;
}

}  // namespace detail

inline IncidenceStructure build_hyperbolic_model() {
    const auto triples = detail::subsets(3);
    auto labels = detail::duad_labels();
    std::map<std::vector<int>, int> index;
    for (const auto& t : triples) {
        index[t] = static_cast<int>(labels.size());
        labels.push_back(detail::digits(t));
    }
    std::set<std::vector<int>> lines;
    for (const auto& x : triples) {
        const auto rest = detail::set_minus(detail::full_set(), x);  // {i, j, k}
        for (int a : x)
            for (int skip = 0; skip < 3; ++skip) {
                std::vector<int> y{a};
                for (int r = 0; r < 3; ++r)
                    if (r != skip) y.push_back(rest[r]);
                std::sort(y.begin(), y.end());
                std::vector<int> line{index[x], index[y], Duad(a, rest[skip]).index()};
                std::sort(line.begin(), line.end());
                lines.insert(line);
            }
    }
    auto all = detail::syntheme_lines();
    all.insert(all.end(), lines.begin(), lines.end());
    const int count = static_cast<int>(labels.size());
    return IncidenceStructure(count, std::move(all), std::move(labels));
}

inline IncidenceStructure build_elliptic_model() {
    auto labels = detail::duad_labels();
    for (int i = 1; i <= 6; ++i) labels.push_back(std::to_string(i));
    for (int i = 1; i <= 6; ++i) labels.push_back(std::to_string(i) + "′");
    auto lines = detail::syntheme_lines();
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j) lines.push_back({kDuadCount + i - 1, kDuadCount + 6 + j - 1, Duad(i, j).index()});
    const int count = static_cast<int>(labels.size());
    return IncidenceStructure(count, std::move(lines), std::move(labels));
}

/// The cone model keeps the synthemes and the vertex lines {123456, klmn, ij};
/// its remaining lines are imported from the coordinate cone through the labels.
inline IncidenceStructure build_cone_model(const MagicLine& ml) {
    auto labels = detail::duad_labels();
    std::map<std::string, int> index;
    for (int i = 0; i < kDuadCount; ++i) index[labels[i]] = i;
    for (const auto& q : detail::subsets(4)) {
        index[detail::digits(q)] = static_cast<int>(labels.size());
        labels.push_back(detail::digits(q));
    }
    const int hexad = static_cast<int>(labels.size());
    labels.push_back("123456");
    index["123456"] = hexad;

    std::set<std::vector<int>> lines;
    for (const auto& l : detail::syntheme_lines()) lines.insert(l);
    for (const auto& d : all_duads()) {
        const auto q = detail::set_minus(detail::full_set(), {d.a, d.b});
        std::vector<int> line{hexad, index.at(detail::digits(q)), d.index()};
        std::sort(line.begin(), line.end());
        lines.insert(line);
    }
    for (const auto& line : ml.cone.geometry.lines()) {
        std::vector<int> mapped;
        for (int p : line) mapped.push_back(index.at(ml.label(ml.cone.to_global[p])));
        std::sort(mapped.begin(), mapped.end());
        lines.insert(mapped);
    }
    const int count = static_cast<int>(labels.size());
    return IncidenceStructure(count, {lines.begin(), lines.end()}, std::move(labels));
}

inline SectorModels build_sector_models(const MagicLine& ml) {
    return {build_hyperbolic_model(), build_elliptic_model(), build_cone_model(ml)};
}

inline SectorModels build_sector_models() { return build_sector_models(build_magic_line()); }

/// The label-induced bijection model -> constituent (points matched by label text).
inline std::optional<std::vector<int>> label_bijection(const IncidenceStructure& model, const Constituent& c) {
    std::vector<int> map(model.point_count(), -1);
    for (int p = 0; p < model.point_count(); ++p) {
        map[p] = c.geometry.index_of(model.label(p));
        if (map[p] < 0) return std::nullopt;
    }
    return map;
}

}  // namespace finigeo
