#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// goes through PointSet, IncidenceStructure or the library's form classes.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Vec6 = std::array<int, 6>;

inline std::vector<Vec6> nonzero_vectors() {
    std::vector<Vec6> out;
    for (int m = 1; m < 64; ++m) {
        Vec6 v{};
        for (int k = 0; k < 6; ++k) v[k] = (m >> k) & 1;
        out.push_back(v);
    }
    return out;
}

inline int theta(const Vec6& x, const Vec6& y) {
    return (x[0] * y[1] + x[1] * y[0] + x[2] * y[3] + x[3] * y[2] + x[4] * y[5] + x[5] * y[4]) % 2;
}

inline int hyperbolic(const Vec6& x) { return (x[0] * x[1] + x[2] * x[3] + x[4] * x[5]) % 2; }
inline int elliptic(const Vec6& x) {
    return (x[0] * x[0] + x[0] * x[1] + x[1] * x[1] + x[2] * x[3] + x[4] * x[5]) % 2;
}

inline int count_zeros(const std::function<int(const Vec6&)>& q) {
    int n = 0;
    for (const auto& v : nonzero_vectors()) n += q(v) == 0;
    return n;
}

/// Number of isotropic lines of theta: each unordered {x, y} with theta = 0
/// spans a line, and each line is counted by its 3 pairs.
inline int w52_line_count() {
    const auto pts = nonzero_vectors();
    int pairs = 0;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) pairs += theta(pts[a], pts[b]) == 0;
    return pairs / 3;
}

/// Proper nonempty geometric hyperplanes of a geometry given by line lists.
inline int count_hyperplanes(int n, const std::vector<std::vector<int>>& lines) {
    int count = 0;
    for (long m = 1; m + 1 < (1L << n); ++m) {
        bool ok = true;
        for (const auto& l : lines) {
            int k = 0;
            for (int p : l) k += (m >> p) & 1;
            if (k != 1 && k != static_cast<int>(l.size())) {
                ok = false;
                break;
            }
        }
        count += ok;
    }
    return count;
}

/// Synthemes by brute force over triples of 2-subsets of {1..6}.
inline std::set<std::set<std::pair<int, int>>> synthemes() {
    std::vector<std::pair<int, int>> duads;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) duads.emplace_back(i, j);
    std::set<std::set<std::pair<int, int>>> out;
    for (const auto& a : duads)
        for (const auto& b : duads)
            for (const auto& c : duads) {
                std::set<int> cover{a.first, a.second, b.first, b.second, c.first, c.second};
                if (cover.size() == 6) out.insert({a, b, c});
            }
    return out;
}

/// Veldkamp line counts per family straight from the label shapes:
/// (4) {p_ij, g_ikl, g_jkl}: a duad ij and a split of the other four in two pairs;
/// (5) {p_ij, p_kl, p_mn}: a syntheme; (6) {p_ij, p_ik, p_jk}: a 3-subset;
/// (7) {o_i, p_jk, g_ijk}: i and a duad jk avoiding it; (8) {o_i, o_j, p_ij}: a duad.
inline std::map<int, int> family_counts() {
    const int duads = 15, splits_of_four = 3, triples = 20;
    return {{4, duads * splits_of_four}, {5, static_cast<int>(synthemes().size())}, {6, triples},
            {7, 6 * 10}, {8, duads}};
}

}  // namespace oracle
