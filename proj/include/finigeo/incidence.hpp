#pragma once

// Point-line incidence structures with at most 64 points. Point subsets are
// 64-bit words indexed by point index, so hyperplane arithmetic is bitwise.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "finigeo/errors.hpp"

namespace finigeo {

inline constexpr int kMaxPoints = 64;
inline constexpr int kMaxHyperplaneScanPoints = 25;

class PointSet {
public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

    static PointSet of(std::initializer_list<int> pts) {
        PointSet s;
        for (int p : pts) s.insert(p);
        return s;
    }
    static PointSet of(const std::vector<int>& pts) {
        PointSet s;
        for (int p : pts) s.insert(p);
        return s;
    }
    /// {0, ..., n-1}
    static constexpr PointSet all(int n) {
        return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool contains(int p) const { return (bits_ >> p) & 1; }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
    [[nodiscard]] constexpr PointSet complement(int n) const { return PointSet(~bits_ & all(n).bits_); }
    /// Lowest member; -1 when empty.
    [[nodiscard]] constexpr int first() const { return bits_ ? std::countr_zero(bits_) : -1; }

    constexpr void insert(int p) { bits_ |= std::uint64_t{1} << p; }
    constexpr void erase(int p) { bits_ &= ~(std::uint64_t{1} << p); }

    [[nodiscard]] std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
    friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
    friend constexpr PointSet operator^(PointSet a, PointSet b) { return PointSet(a.bits_ ^ b.bits_); }
    friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(PointSet, PointSet) = default;
    friend constexpr auto operator<=>(PointSet a, PointSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

class IncidenceStructure {
public:
    IncidenceStructure() = default;

    IncidenceStructure(int point_count, std::vector<std::vector<int>> lines, std::vector<std::string> labels = {})
        : point_count_(point_count), lines_(std::move(lines)), labels_(std::move(labels)) {
        if (point_count < 0) throw InputError("IncidenceStructure: negative point count");
        if (point_count > kMaxPoints) throw CapacityError("IncidenceStructure: more than 64 points");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != point_count)
            throw InputError("IncidenceStructure: label count does not match point count");

        through_.assign(point_count, {});
        perp_.assign(point_count, PointSet{});
        for (int p = 0; p < point_count; ++p) perp_[p].insert(p);

        for (int i = 0; i < static_cast<int>(lines_.size()); ++i) {
            auto& line = lines_[i];
            std::sort(line.begin(), line.end());
            if (line.size() < 2) throw InputError("IncidenceStructure: line with fewer than 2 points");
            if (std::adjacent_find(line.begin(), line.end()) != line.end())
                throw InputError("IncidenceStructure: repeated point on a line");
            PointSet mask;
            for (int p : line) {
                if (p < 0 || p >= point_count) throw InputError("IncidenceStructure: point index out of range");
                mask.insert(p);
            }
            if (!line_index_.emplace(mask.bits(), i).second)
                throw InputError("IncidenceStructure: repeated line");
            masks_.push_back(mask);
            for (int p : line) {
                through_[p].push_back(i);
                perp_[p] = perp_[p] | mask;
            }
        }
        for (int i = 0; i < static_cast<int>(labels_.size()); ++i) by_label_.emplace(labels_[i], i);
    }

    [[nodiscard]] int point_count() const { return point_count_; }
    [[nodiscard]] int line_count() const { return static_cast<int>(lines_.size()); }
    [[nodiscard]] const std::vector<std::vector<int>>& lines() const { return lines_; }
    [[nodiscard]] const std::vector<int>& line(int i) const { return lines_.at(i); }
    [[nodiscard]] PointSet line_set(int i) const { return masks_.at(i); }
    [[nodiscard]] const std::vector<PointSet>& line_sets() const { return masks_; }
    [[nodiscard]] PointSet points() const { return PointSet::all(point_count_); }

    /// Indices of lines incident with p.
    [[nodiscard]] const std::vector<int>& lines_through(int p) const {
        check_point(p);
        return through_[p];
    }
    [[nodiscard]] int degree(int p) const { return static_cast<int>(lines_through(p).size()); }

    /// Index of the line with exactly this point set, or -1.
    [[nodiscard]] int find_line(PointSet s) const {
        auto it = line_index_.find(s.bits());
        return it == line_index_.end() ? -1 : it->second;
    }

    /// Points collinear with p, p included.
    [[nodiscard]] PointSet perp_of(int p) const {
        check_point(p);
        return perp_[p];
    }

    [[nodiscard]] bool has_labels() const { return !labels_.empty(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] std::string label(int p) const {
        check_point(p);
        return labels_.empty() ? std::to_string(p) : labels_[p];
    }
    /// Point index for a label, or -1.
    [[nodiscard]] int index_of(const std::string& label) const {
        auto it = by_label_.find(label);
        return it == by_label_.end() ? -1 : it->second;
    }

    void check_point(int p) const {
        if (p < 0 || p >= point_count_) throw InputError("point index out of range: " + std::to_string(p));
    }

private:
    int point_count_ = 0;
    std::vector<std::vector<int>> lines_;
    std::vector<std::string> labels_;
    std::vector<PointSet> masks_;
    std::vector<std::vector<int>> through_;
    std::vector<PointSet> perp_;
    std::unordered_map<std::uint64_t, int> line_index_;
    std::map<std::string, int> by_label_;
};

/// A geometric hyperplane: every line lies inside it or meets it in exactly one point.
struct Hyperplane {
    PointSet points;
    std::string kind;  // optional tag, e.g. "ovoid"

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.points == b.points; }
};

inline bool collinear(const IncidenceStructure& g, int p, int q) {
    g.check_point(q);
    return g.perp_of(p).contains(q);
}

inline PointSet perp(const IncidenceStructure& g, int p) { return g.perp_of(p); }

inline bool is_geometric_hyperplane(const IncidenceStructure& g, PointSet s) {
    if (!s.subset_of(g.points())) throw InputError("is_geometric_hyperplane: subset has foreign points");
    for (const auto& line : g.line_sets()) {
        const int k = (line & s).size();
        if (k != 1 && k != line.size()) return false;
    }
    return true;
}

/// Exhaustive scan of all proper nonempty subsets; the empty set and the full
/// point set are excluded. Ordered by the subset's bit pattern.
inline std::vector<Hyperplane> enumerate_hyperplanes(const IncidenceStructure& g) {
    const int n = g.point_count();
    if (n > kMaxHyperplaneScanPoints)
        throw CapacityError("enumerate_hyperplanes: exhaustive scan limited to 25 points");
    std::vector<Hyperplane> out;
    const std::uint64_t full = PointSet::all(n).bits();
    for (std::uint64_t b = 1; b < full; ++b) {
        const PointSet s(b);
        if (is_geometric_hyperplane(g, s)) out.push_back({s, {}});
    }
    return out;
}

/// Points of h all of whose lines lie inside h.
inline PointSet deep_points(const IncidenceStructure& g, PointSet h) {
    PointSet out;
    for (int p : h.to_vector()) {
        const auto& ls = g.lines_through(p);
        if (std::all_of(ls.begin(), ls.end(), [&](int l) { return g.line_set(l).subset_of(h); })) out.insert(p);
    }
    return out;
}

inline PointSet deep_points(const IncidenceStructure& g, const Hyperplane& h) { return deep_points(g, h.points); }

/// No three pairwise collinear points without a common line.
inline bool is_triangle_free(const IncidenceStructure& g) {
    const int n = g.point_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!collinear(g, a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!collinear(g, a, c) || !collinear(g, b, c)) continue;
                if (g.find_line(PointSet::of({a, b, c})) < 0) {
                    // Longer lines could still hold all three.
                    bool common = false;
                    for (int l : g.lines_through(a))
                        if (g.line_set(l).contains(b) && g.line_set(l).contains(c)) common = true;
                    if (!common) return false;
                }
            }
        }
    return true;
}

/// GQ(s,t): s+1 points per line, t+1 lines per point, two lines share at most
/// one point, and for every non-incident point-line pair exactly one point of
/// the line is collinear with the point.
inline bool check_gq(const IncidenceStructure& g, int s, int t) {
    if (g.point_count() == 0 || g.line_count() == 0) return false;
    for (const auto& line : g.line_sets())
        if (line.size() != s + 1) return false;
    for (int p = 0; p < g.point_count(); ++p)
        if (g.degree(p) != t + 1) return false;
    const auto& ls = g.line_sets();
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if ((ls[i] & ls[j]).size() > 1) return false;
    for (int p = 0; p < g.point_count(); ++p)
        for (const auto& line : ls) {
            if (line.contains(p)) continue;
            if ((g.perp_of(p) & line).size() != 1) return false;
        }
    return true;
}

/// Every line meets every point-perp in 0, 1 or all of its points.
inline bool check_gamma_space(const IncidenceStructure& g) {
    for (int p = 0; p < g.point_count(); ++p) {
        const PointSet pp = g.perp_of(p);
        for (const auto& line : g.line_sets()) {
            const int k = (line & pp).size();
            if (k > 1 && k != line.size()) return false;
        }
    }
    return true;
}

/// Sub-geometry on a point subset, keeping the lines entirely inside it.
struct Substructure {
    IncidenceStructure geometry;
    std::vector<int> to_parent;  // local index -> parent index
};

inline Substructure induced_structure(const IncidenceStructure& g, PointSet subset) {
    if (!subset.subset_of(g.points())) throw InputError("induced_structure: subset has foreign points");
    Substructure out;
    out.to_parent = subset.to_vector();
    std::vector<int> local(g.point_count(), -1);
    for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i) local[out.to_parent[i]] = i;

    std::vector<std::vector<int>> lines;
    for (int l = 0; l < g.line_count(); ++l) {
        if (!g.line_set(l).subset_of(subset)) continue;
        std::vector<int> line;
        for (int p : g.line(l)) line.push_back(local[p]);
        lines.push_back(std::move(line));
    }
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int p : out.to_parent) labels.push_back(g.label(p));
    out.geometry = IncidenceStructure(static_cast<int>(out.to_parent.size()), std::move(lines), std::move(labels));
    return out;
}

/// True iff map is a bijection of points carrying the line set of g1 exactly
/// onto the line set of g2. Checked directly, independent of any search.
inline bool is_isomorphism(const IncidenceStructure& g1, const IncidenceStructure& g2, const std::vector<int>& map) {
    const int n = g1.point_count();
    if (g2.point_count() != n || static_cast<int>(map.size()) != n) return false;
    if (g1.line_count() != g2.line_count()) return false;
    PointSet hit;
    for (int q : map) {
        if (q < 0 || q >= n || hit.contains(q)) return false;
        hit.insert(q);
    }
    std::vector<bool> used(g2.line_count(), false);
    for (const auto& line : g1.lines()) {
        PointSet img;
        for (int p : line) img.insert(map[p]);
        const int l = g2.find_line(img);
        if (l < 0 || used[l]) return false;
        used[l] = true;
    }
    return true;
}

namespace detail {

// (degree, sorted degrees of collinear neighbours)
using PointSignature = std::pair<int, std::vector<int>>;

inline std::vector<PointSignature> signatures(const IncidenceStructure& g) {
    std::vector<PointSignature> out(g.point_count());
    for (int p = 0; p < g.point_count(); ++p) {
        out[p].first = g.degree(p);
        for (int q : (g.perp_of(p) - PointSet::of({p})).to_vector()) out[p].second.push_back(g.degree(q));
        std::sort(out[p].second.begin(), out[p].second.end());
    }
    return out;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const IncidenceStructure& g1, const IncidenceStructure& g2)
        : g1_(g1), g2_(g2), sig1_(signatures(g1)), sig2_(signatures(g2)) {}

    std::optional<std::vector<int>> run() {
        const int n = g1_.point_count();
        if (n != g2_.point_count() || g1_.line_count() != g2_.line_count()) return std::nullopt;
        {
            auto a = sig1_, b = sig2_;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) return std::nullopt;
        }
        if (n == 0) return std::vector<int>{};
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (sig1_[p] == sig2_[q]) candidates_[p].push_back(q);
        order_points();
        map_.assign(n, -1);
        if (!extend(0)) return std::nullopt;
        return map_;
    }

private:
    // Rarest signature first, then greedily the point with most placed neighbours.
    void order_points() {
        const int n = g1_.point_count();
        PointSet placed;
        while (static_cast<int>(order_.size()) < n) {
            int best = -1;
            std::tuple<int, int, int> best_key{};
            for (int p = 0; p < n; ++p) {
                if (placed.contains(p)) continue;
                const int links = (g1_.perp_of(p) & placed).size();
                std::tuple<int, int, int> key{-links, static_cast<int>(candidates_[p].size()), p};
                if (best < 0 || key < best_key) {
                    best = p;
                    best_key = key;
                }
            }
            order_.push_back(best);
            placed.insert(best);
        }
    }

    bool consistent(int p, int q) const {
        for (int k = 0; k < static_cast<int>(order_.size()); ++k) {
            const int a = order_[k];
            if (map_[a] < 0) break;
            if (g1_.perp_of(p).contains(a) != g2_.perp_of(q).contains(map_[a])) return false;
        }
        for (int l : g1_.lines_through(p)) {
            PointSet img;
            bool complete = true;
            for (int r : g1_.line(l)) {
                const int m = r == p ? q : map_[r];
                if (m < 0) {
                    complete = false;
                    break;
                }
                img.insert(m);
            }
            if (complete && g2_.find_line(img) < 0) return false;
        }
        return true;
    }

    bool extend(std::size_t k) {
        if (k == order_.size()) return true;
        const int p = order_[k];
        for (int q : candidates_[p]) {
            if (used_.contains(q) || !consistent(p, q)) continue;
            map_[p] = q;
            used_.insert(q);
            if (extend(k + 1)) return true;
            map_[p] = -1;
            used_.erase(q);
        }
        return false;
    }

    const IncidenceStructure& g1_;
    const IncidenceStructure& g2_;
    std::vector<PointSignature> sig1_, sig2_;
    std::map<int, std::vector<int>> candidates_;
    std::vector<int> order_;
    std::vector<int> map_;
    PointSet used_;
};

}  // namespace detail

/// Backtracking search for a point bijection g1 -> g2 mapping lines onto lines.
/// Candidates must share (degree, multiset of neighbour degrees); ties go by
/// index, so results are deterministic. The result is re-verified with
/// is_isomorphism before it is returned.
inline std::optional<std::vector<int>> find_isomorphism(const IncidenceStructure& g1, const IncidenceStructure& g2) {
    auto map = detail::IsomorphismSearch(g1, g2).run();
    if (map && !is_isomorphism(g1, g2, *map)) throw ConsistencyError("find_isomorphism: search returned a non-isomorphism");
    return map;
}

}  // namespace finigeo
