#pragma once

// The doily in its duad-syntheme model over S = {1,...,6}. Points are the 15
// duads, indexed in lexicographic order 12, 13, ..., 56; lines are the 15
// synthemes (partitions of S into three duads).

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "finigeo/errors.hpp"
#include "finigeo/incidence.hpp"

namespace finigeo {

inline constexpr int kSetSize = 6;
inline constexpr int kDuadCount = 15;

struct Duad {
    int a = 1, b = 2;  // a < b

    Duad() = default;
    Duad(int i, int j) : a(std::min(i, j)), b(std::max(i, j)) {
        if (i < 1 || i > kSetSize || j < 1 || j > kSetSize) throw InputError("Duad: element out of range");
        if (i == j) throw InputError("Duad: elements must differ");
    }

    [[nodiscard]] int index() const {
        // Row offsets for a = 1..5 in the lexicographic order.
        static constexpr std::array<int, 6> offset{0, 0, 5, 9, 12, 14};
        return offset[a] + (b - a - 1);
    }
    [[nodiscard]] bool contains(int x) const { return a == x || b == x; }
    [[nodiscard]] bool disjoint(const Duad& o) const { return !contains(o.a) && !contains(o.b); }
    [[nodiscard]] std::string label() const { return std::to_string(a) + std::to_string(b); }

    friend bool operator==(const Duad&, const Duad&) = default;
};

inline const std::array<Duad, kDuadCount>& all_duads() {
    static const auto duads = [] {
        std::array<Duad, kDuadCount> out;
        int k = 0;
        for (int i = 1; i <= kSetSize; ++i)
            for (int j = i + 1; j <= kSetSize; ++j) out[k++] = Duad(i, j);
        return out;
    }();
    return duads;
}

inline const Duad& duad_at(int index) {
    if (index < 0 || index >= kDuadCount) throw InputError("duad index out of range");
    return all_duads()[index];
}

using Syntheme = std::array<Duad, 3>;

/// The 15 synthemes, each as three duads sorted by index.
inline std::vector<Syntheme> all_synthemes() {
    std::vector<Syntheme> out;
    for (int j = 2; j <= kSetSize; ++j) {
        std::vector<int> rest;
        for (int x = 2; x <= kSetSize; ++x)
            if (x != j) rest.push_back(x);
        // rest has four elements; pair rest[0] with each of the other three
        for (int k = 1; k < 4; ++k) {
            std::vector<int> other;
            for (int m = 1; m < 4; ++m)
                if (m != k) other.push_back(rest[m]);
            out.push_back({Duad(1, j), Duad(rest[0], rest[k]), Duad(other[0], other[1])});
        }
    }
    return out;
}

inline IncidenceStructure build_doily() {
    std::vector<std::vector<int>> lines;
    for (const auto& s : all_synthemes()) lines.push_back({s[0].index(), s[1].index(), s[2].index()});
    std::vector<std::string> labels;
    for (const auto& d : all_duads()) labels.push_back(d.label());
    return IncidenceStructure(kDuadCount, std::move(lines), std::move(labels));
}

inline const IncidenceStructure& doily() {
    static const IncidenceStructure g = build_doily();
    return g;
}

enum class HyperplaneKind { Ovoid, PerpSet, Grid };

inline std::string to_string(HyperplaneKind k) {
    switch (k) {
        case HyperplaneKind::Ovoid: return "ovoid";
        case HyperplaneKind::PerpSet: return "perp-set";
        case HyperplaneKind::Grid: return "grid";
    }
    return "?";
}

/// One of the 31 geometric hyperplanes of the doily, with its defining labels:
/// {i} for o_i, {i,j} for p_ij, and for g_ijk the triple containing 1.
struct DoilyHyperplane {
    PointSet points;
    HyperplaneKind kind = HyperplaneKind::Ovoid;
    std::vector<int> index;

    /// "o_1", "p_12", "g_123"
    [[nodiscard]] std::string name() const {
        std::string s = kind == HyperplaneKind::Ovoid ? "o_" : kind == HyperplaneKind::PerpSet ? "p_" : "g_";
        for (int x : index) s += std::to_string(x);
        return s;
    }

    friend bool operator==(const DoilyHyperplane& a, const DoilyHyperplane& b) { return a.points == b.points; }
};

namespace detail {

inline void check_element(int x) {
    if (x < 1 || x > kSetSize) throw InputError("label out of range: " + std::to_string(x));
}

/// Elements of S not in the given list, ascending.
inline std::vector<int> complement_of(const std::vector<int>& xs) {
    std::vector<int> out;
    for (int x = 1; x <= kSetSize; ++x)
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) out.push_back(x);
    return out;
}

}  // namespace detail

/// o_i: the five duads containing i.
inline DoilyHyperplane ovoid(int i) {
    detail::check_element(i);
    DoilyHyperplane h{{}, HyperplaneKind::Ovoid, {i}};
    for (int j = 1; j <= kSetSize; ++j)
        if (j != i) h.points.insert(Duad(i, j).index());
    return h;
}

/// p_ij: the duad ij together with the six duads inside S \ {i,j}.
inline DoilyHyperplane perp_set(int i, int j) {
    detail::check_element(i);
    detail::check_element(j);
    if (i == j) throw InputError("perp_set: labels must differ");
    const Duad deep(i, j);
    DoilyHyperplane h{{}, HyperplaneKind::PerpSet, {deep.a, deep.b}};
    h.points.insert(deep.index());
    for (const auto& d : all_duads())
        if (d.disjoint(deep)) h.points.insert(d.index());
    return h;
}

/// g_ijk = g_lmn: the nine duads with one element on each side of {i,j,k} | {l,m,n}.
inline DoilyHyperplane grid(int i, int j, int k) {
    for (int x : {i, j, k}) detail::check_element(x);
    if (i == j || j == k || i == k) throw InputError("grid: labels must be distinct");
    std::vector<int> side{i, j, k};
    std::sort(side.begin(), side.end());
    auto other = detail::complement_of(side);
    if (side.front() != 1) std::swap(side, other);

    DoilyHyperplane h{{}, HyperplaneKind::Grid, side};
    for (int a : side)
        for (int b : other) h.points.insert(Duad(a, b).index());
    return h;
}

/// Structural classification of a doily hyperplane. The size decides the kind;
/// the structure is double-checked: ovoids are cocliques, perp-sets have a
/// single deep point, grids carry a 3x3 grid of lines.
inline DoilyHyperplane classify_hyperplane(PointSet s) {
    const auto& g = doily();
    if (!s.subset_of(g.points()) || s.empty() || s == g.points() || !is_geometric_hyperplane(g, s))
        throw InputError("classify_hyperplane: not a proper geometric hyperplane of the doily");

    const auto fail = [] { throw ConsistencyError("classify_hyperplane: structure disagrees with size"); };
    switch (s.size()) {
        case 5: {
            const auto pts = s.to_vector();
            for (std::size_t a = 0; a < pts.size(); ++a)
                for (std::size_t b = a + 1; b < pts.size(); ++b)
                    if (collinear(g, pts[a], pts[b])) fail();
            const Duad& d0 = duad_at(pts[0]);
            for (int x : {d0.a, d0.b}) {
                auto h = ovoid(x);
                if (h.points == s) return h;
            }
            fail();
            break;
        }
        case 7: {
            const PointSet deep = deep_points(g, s);
            if (deep.size() != 1) fail();
            const Duad& d = duad_at(deep.first());
            auto h = perp_set(d.a, d.b);
            if (h.points != s) fail();
            return h;
        }
        case 9: {
            if (!check_gq(induced_structure(g, s).geometry, 2, 1)) fail();
            std::vector<int> side{1};
            for (int b = 2; b <= kSetSize; ++b)
                if (!s.contains(Duad(1, b).index())) side.push_back(b);
            if (side.size() != 3) fail();
            auto h = grid(side[0], side[1], side[2]);
            if (h.points != s) fail();
            return h;
        }
        default: fail();
    }
    fail();
    return {};
}

/// Complement of the symmetric difference within a universe of n points.
inline PointSet veldkamp_sum(PointSet a, PointSet b, int n) { return (a ^ b).complement(n); }

inline DoilyHyperplane veldkamp_sum(const DoilyHyperplane& h1, const DoilyHyperplane& h2) {
    if (h1.points == h2.points) throw InputError("veldkamp_sum: hyperplanes must be distinct");
    return classify_hyperplane(veldkamp_sum(h1.points, h2.points, kDuadCount));
}

/// The 31 hyperplanes: o_1..o_6, p_12..p_56, g_123..g_156.
inline std::vector<DoilyHyperplane> named_hyperplanes() {
    std::vector<DoilyHyperplane> out;
    for (int i = 1; i <= kSetSize; ++i) out.push_back(ovoid(i));
    for (const auto& d : all_duads()) out.push_back(perp_set(d.a, d.b));
    for (int j = 2; j <= kSetSize; ++j)
        for (int k = j + 1; k <= kSetSize; ++k) out.push_back(grid(1, j, k));
    return out;
}

/// Relabels a duad point set by a permutation of S (perm[x-1] is the image of x).
inline PointSet permute_duads(PointSet s, const std::array<int, kSetSize>& perm) {
    PointSet out;
    for (int p : s.to_vector()) {
        const Duad& d = duad_at(p);
        out.insert(Duad(perm[d.a - 1], perm[d.b - 1]).index());
    }
    return out;
}

}  // namespace finigeo
