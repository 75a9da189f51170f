#pragma once

// Verification suites and their report. Every suite is exhaustive and
// deterministic; only the optional timings vary between runs.

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "finigeo/doily.hpp"
#include "finigeo/incidence.hpp"
#include "finigeo/magic_line.hpp"
#include "finigeo/veldkamp.hpp"

namespace finigeo {

using ordered_json = nlohmann::ordered_json;

enum class Provenance { Paper, Derived };

inline std::string to_string(Provenance p) { return p == Provenance::Paper ? "PAPER" : "DERIVED"; }

struct Check {
    std::string name;
    ordered_json expected;
    ordered_json actual;
    bool passed = false;
    Provenance provenance = Provenance::Derived;
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    double runtime_ms = 0.0;

    [[nodiscard]] int failed() const {
        int n = 0;
        for (const auto& c : checks) n += !c.passed;
        return n;
    }

    void expect(std::string check_name, ordered_json expected, ordered_json actual, Provenance prov) {
        const bool ok = expected == actual;
        checks.push_back({std::move(check_name), std::move(expected), std::move(actual), ok, prov});
    }
};

struct VerificationReport {
    std::vector<SuiteReport> suites;

    [[nodiscard]] int passed() const {
        int n = 0;
        for (const auto& s : suites) n += static_cast<int>(s.checks.size()) - s.failed();
        return n;
    }
    [[nodiscard]] int failed() const {
        int n = 0;
        for (const auto& s : suites) n += s.failed();
        return n;
    }
    [[nodiscard]] bool ok() const { return failed() == 0; }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"doily", "veldkamp", "magicline"};
    return names;
}

namespace detail {

inline std::string census_string(int a, int b, int c) {
    return std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c);
}

inline void doily_suite(SuiteReport& r) {
    using P = Provenance;
    const auto& g = doily();
    r.expect("doily points", 15, g.point_count(), P::Paper);
    r.expect("doily lines", 15, g.line_count(), P::Paper);

    bool uniform = true;
    for (const auto& l : g.lines()) uniform &= l.size() == 3;
    for (int p = 0; p < g.point_count(); ++p) uniform &= g.degree(p) == 3;
    r.expect("3 points per line, 3 lines per point", true, uniform, P::Derived);
    r.expect("GQ(2,2) axioms", true, check_gq(g, 2, 2), P::Paper);
    r.expect("triangle-free", true, is_triangle_free(g), P::Paper);

    const auto hs = enumerate_hyperplanes(g);
    int ovoids = 0, perps = 0, grids = 0;
    bool unique_deep = true;
    for (const auto& h : hs) {
        ovoids += h.points.size() == 5;
        perps += h.points.size() == 7;
        grids += h.points.size() == 9;
        if (h.points.size() == 7) unique_deep &= deep_points(g, h.points).size() == 1;
    }
    r.expect("geometric hyperplanes", 31, static_cast<int>(hs.size()), P::Paper);
    r.expect("hyperplane census = 6/15/10", "6/15/10", census_string(ovoids, perps, grids), P::Paper);
    r.expect("perp-sets have a unique deep point", true, unique_deep, P::Paper);

    std::vector<PointSet> named;
    for (const auto& h : named_hyperplanes()) named.push_back(h.points);
    std::sort(named.begin(), named.end());
    std::vector<PointSet> scanned;
    for (const auto& h : hs) scanned.push_back(h.points);
    r.expect("named hyperplanes = scanned hyperplanes", true, named == scanned, P::Derived);

    int perp_ok = 0, grid_ok = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            perp_ok += veldkamp_sum(ovoid(i), ovoid(j)).points == perp_set(i, j).points;
            for (int k = j + 1; k <= 6; ++k)
                grid_ok += veldkamp_sum(veldkamp_sum(ovoid(i), ovoid(j)), ovoid(k)).points == grid(i, j, k).points;
        }
    r.expect("p_ij = o_i + o_j for all 15 duads", 15, perp_ok, P::Paper);
    r.expect("g_ijk = o_i + o_j + o_k for all 20 triples", 20, grid_ok, P::Paper);

    bool ovoid_once = true;
    for (int i = 1; i <= 6; ++i)
        for (const auto& l : g.line_sets()) ovoid_once &= (l & ovoid(i).points).size() == 1;
    r.expect("ovoids meet every syntheme once", true, ovoid_once, P::Paper);

    bool closed = true;
    for (std::size_t a = 0; a < scanned.size(); ++a)
        for (std::size_t b = a + 1; b < scanned.size(); ++b)
            closed &= std::binary_search(scanned.begin(), scanned.end(),
                                         veldkamp_sum(scanned[a], scanned[b], kDuadCount));
    r.expect("Veldkamp sum closed on the 31 hyperplanes", true, closed, P::Paper);

    // GF(2) span of o_1..o_5 under the Veldkamp sum.
    std::set<std::uint64_t> span;
    for (int mask = 1; mask < 32; ++mask) {
        std::optional<PointSet> acc;
        for (int i = 0; i < 5; ++i)
            if ((mask >> i) & 1) acc = acc ? veldkamp_sum(*acc, ovoid(i + 1).points, kDuadCount) : ovoid(i + 1).points;
        span.insert(acc->bits());
    }
    r.expect("o_1..o_5 generate all hyperplanes", 31, static_cast<int>(span.size()), P::Derived);
    r.expect("doily is a gamma space", true, check_gamma_space(g), P::Derived);
}

inline void veldkamp_suite(SuiteReport& r) {
    using P = Provenance;
    const auto vs = build_veldkamp_space(doily());
    r.expect("Veldkamp points", 31, static_cast<int>(vs.points.size()), P::Paper);
    r.expect("155 Veldkamp lines", 155, static_cast<int>(vs.lines.size()), P::Paper);

    bool degree = true;
    for (int p = 0; p < static_cast<int>(vs.points.size()); ++p)
        degree &= vs.lines_through(p).size() == 15;
    r.expect("15 Veldkamp lines per Veldkamp point", true, degree, P::Derived);

    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& t : vs.lines) {
        ++pair_count[{t[0], t[1]}];
        ++pair_count[{t[0], t[2]}];
        ++pair_count[{t[1], t[2]}];
    }
    bool unique = pair_count.size() == 465;
    for (const auto& [pr, n] : pair_count) unique &= n == 1;
    r.expect("every pair of hyperplanes on exactly one line", true, unique, P::Derived);

    const auto lines = doily_veldkamp_lines();
    bool cores = true;
    for (const auto& l : lines) cores &= is_veldkamp_line(l);
    r.expect("pairwise intersections coincide on every line", true, cores, P::Paper);

    const auto census = family_census(lines);
    int total = 0;
    for (const auto& [f, n] : census) total += n;
    r.expect("lines classified into the five families", 155, total, P::Paper);
    const std::map<VeldkampFamily, int> pinned{{VeldkampFamily::PerpGridGrid, 45},
                                               {VeldkampFamily::PerpPerpPerpDisjoint, 15},
                                               {VeldkampFamily::PerpPerpPerpTriangle, 20},
                                               {VeldkampFamily::OvoidPerpGrid, 60},
                                               {VeldkampFamily::OvoidOvoidPerp, 15}};
    for (const auto& [f, n] : pinned)
        r.expect("family (" + std::to_string(family_number(f)) + ") " + to_string(f), n, census.at(f), P::Derived);

    // Relabel by generators of Sym(S): a transposition and a 6-cycle.
    bool invariant = true;
    for (const std::array<int, 6> perm : {std::array<int, 6>{2, 1, 3, 4, 5, 6}, std::array<int, 6>{2, 3, 4, 5, 6, 1}}) {
        std::vector<VeldkampLine> moved;
        for (const auto& l : lines) {
            std::array<DoilyHyperplane, 3> m;
            for (int i = 0; i < 3; ++i) m[i] = classify_hyperplane(permute_duads(l.members[i].points, perm));
            moved.push_back(make_veldkamp_line(m[0], m[1], m[2]));
        }
        invariant &= family_census(moved) == census;
    }
    r.expect("family census invariant under relabelling S", true, invariant, P::Derived);
}

inline void magicline_suite(SuiteReport& r) {
    using P = Provenance;
    const auto ml = build_magic_line();
    const auto& w = ml.w52.geometry;

    r.expect("W(5,2) points", 63, w.point_count(), P::Derived);
    r.expect("W(5,2) lines", 315, w.line_count(), P::Derived);
    bool deg = true;
    for (int p = 0; p < w.point_count(); ++p) deg &= w.degree(p) == 15;
    r.expect("15 W(5,2) lines per point", true, deg, P::Derived);

    const auto theta = ml.w52.form.as_bilinear();
    r.expect("Q+ and Q- polarize to theta", true,
             polarize(ml.q_plus_form) == theta && polarize(ml.q_minus_form) == theta, P::Derived);
    r.expect("|Q+(5,2)|", 35, ml.q_plus.points.size(), P::Derived);
    r.expect("|Q-(5,2)|", 27, ml.q_minus.points.size(), P::Derived);
    r.expect("|cone|", 31, ml.cone.points.size(), P::Derived);
    r.expect("|core|", 15, ml.core.size(), P::Paper);
    r.expect("cone = complement of Q+ symmetric-difference Q-", true,
             ml.cone.points == veldkamp_sum(ml.q_plus.points, ml.q_minus.points, kW52Points), P::Derived);
    r.expect("pairwise intersections equal the core", true,
             (ml.q_plus.points & ml.q_minus.points) == ml.core && (ml.q_plus.points & ml.cone.points) == ml.core &&
                 (ml.q_minus.points & ml.cone.points) == ml.core,
             P::Paper);

    const auto core_geom = induced_structure(w, ml.core).geometry;
    r.expect("core is isomorphic to the doily", true, find_isomorphism(core_geom, doily()).has_value(), P::Paper);
    r.expect("sectors 20/12/16", "20/12/16",
             census_string(ml.sector_points(Sector::Hyperbolic).size(), ml.sector_points(Sector::Elliptic).size(),
                           ml.sector_points(Sector::Cone).size() + 1),
             P::Paper);
    r.expect("nucleus", "110000", coordinate_string(point_vector(ml.nucleus)), P::Derived);
    r.expect("nucleus perp is the cone", true, perp(w, ml.nucleus) == ml.cone.points, P::Derived);

    const auto corr = build_correspondence(ml);
    int grid_pairs = 0, ovoid_pairs = 0, perp_points = 0;
    for (const auto& [name, obj] : corr.by_hyperplane) {
        grid_pairs += obj.sector == Sector::Hyperbolic && obj.points.size() == 2;
        ovoid_pairs += obj.sector == Sector::Elliptic && obj.points.size() == 2;
        perp_points += obj.sector == Sector::Cone && obj.points.size() == 1;
    }
    r.expect("10 grid pairs, 6 ovoid pairs, 15 perp points", "10/6/15",
             census_string(grid_pairs, ovoid_pairs, perp_points), P::Paper);

    bool nine = true, five = true, seven = true;
    for (int p : ml.sector_points(Sector::Hyperbolic).to_vector()) {
        const auto& c = ml.q_plus.geometry;
        const int lp = ml.q_plus.local_index(p);
        nine &= c.degree(lp) == 9 && doily_trace(ml, p)->points.size() == 9;
        for (int l : c.lines_through(lp)) {
            int on_core = 0;
            for (int x : c.line(l)) on_core += ml.core.contains(ml.q_plus.to_global[x]);
            nine &= on_core == 1;
        }
    }
    for (int p : ml.sector_points(Sector::Elliptic).to_vector())
        five &= ml.q_minus.geometry.degree(ml.q_minus.local_index(p)) == 5 && doily_trace(ml, p)->points.size() == 5;
    for (int p : ml.sector_points(Sector::Cone).to_vector()) seven &= doily_trace(ml, p)->points.size() == 7;
    r.expect("hyperbolic points: 9 lines, each meeting the core once", true, nine, P::Paper);
    r.expect("elliptic points: 5 lines, ovoid traces", true, five, P::Paper);
    r.expect("cone points: perp-set traces of size 7", true, seven, P::Derived);

    r.expect("146/235 traces", "g_146/g_146",
             doily_trace(ml, ml.find_label("146"))->name() + "/" + doily_trace(ml, ml.find_label("235"))->name(),
             P::Paper);
    r.expect("3/3' traces", "o_3/o_3",
             doily_trace(ml, ml.find_label("3"))->name() + "/" + doily_trace(ml, ml.find_label("3'"))->name(), P::Paper);
    r.expect("3456 traces p_12", "p_12", doily_trace(ml, ml.find_label("3456"))->name(), P::Paper);

    int images = 0;
    for (const auto& l : doily_veldkamp_lines()) images += image_matches_pattern(ml, veldkamp_line_image(corr, l));
    r.expect("sector images of the 155 lines match their patterns", 155, images, P::Paper);

    const auto models = build_sector_models(ml);
    const auto certified = [](const IncidenceStructure& m, const Constituent& c) {
        const auto iso = find_isomorphism(m, c.geometry);
        const auto by_label = label_bijection(m, c);
        return iso && is_isomorphism(m, c.geometry, *iso) && by_label && is_isomorphism(m, c.geometry, *by_label);
    };
    r.expect("hyperbolic model isomorphic to Q+(5,2)", true, certified(models.hyperbolic, ml.q_plus), P::Derived);
    r.expect("elliptic model isomorphic to Q-(5,2)", true, certified(models.elliptic, ml.q_minus), P::Derived);
    r.expect("cone model isomorphic to the cone", true, certified(models.cone, ml.cone), P::Derived);
    r.expect("elliptic model is GQ(2,4)", true, check_gq(models.elliptic, 2, 4), P::Paper);

    int polar = 0, rank_one = 0;
    for (const auto& [name, obj] : corr.by_hyperplane) {
        if (obj.points.size() != 2) continue;
        const auto rep = polar_pair_check(ml, obj.points[0], obj.points[1]);
        if (obj.sector == Sector::Hyperbolic)
            polar += rep.is_polar_pair() && rep.equals_trace && rep.mutual_perp.size() == 9 && rep.induced_lines == 6;
        else
            rank_one += !rep.collinear && rep.equals_trace && rep.mutual_perp.size() == 5 && rep.induced_lines == 0 &&
                        rep.rank == 1;
    }
    r.expect("hyperbolic pairs are polar pairs (grid, rank 2)", 10, polar, P::Paper);
    r.expect("elliptic pairs meet in a rank-1 ovoid", 6, rank_one, P::Paper);

    r.expect("gamma spaces: W(5,2), Q+, Q-, core", true,
             check_gamma_space(w) && check_gamma_space(ml.q_plus.geometry) && check_gamma_space(ml.q_minus.geometry) &&
                 check_gamma_space(core_geom),
             P::Derived);
}

}  // namespace detail

/// Runs one suite by name: doily, veldkamp or magicline.
inline SuiteReport run_suite(const std::string& name) {
    SuiteReport r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    if (name == "doily") detail::doily_suite(r);
    else if (name == "veldkamp") detail::veldkamp_suite(r);
    else if (name == "magicline") detail::magicline_suite(r);
    else throw InputError("unknown suite: " + name);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// "all" runs every suite in order.
inline VerificationReport verify(const std::string& suite) {
    VerificationReport rep;
    if (suite == "all")
        for (const auto& n : suite_names()) rep.suites.push_back(run_suite(n));
    else
        rep.suites.push_back(run_suite(suite));
    return rep;
}

inline ordered_json to_json(const VerificationReport& rep, bool timings = false) {
    ordered_json out;
    out["suites"] = ordered_json::array();
    for (const auto& s : rep.suites) {
        ordered_json js;
        js["name"] = s.name;
        js["checks"] = ordered_json::array();
        for (const auto& c : s.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["expected"] = c.expected;
            jc["actual"] = c.actual;
            jc["passed"] = c.passed;
            jc["provenance"] = to_string(c.provenance);
            js["checks"].push_back(std::move(jc));
        }
        js["summary"] = {{"passed", static_cast<int>(s.checks.size()) - s.failed()}, {"failed", s.failed()}};
        if (timings) js["runtime_ms"] = s.runtime_ms;
        out["suites"].push_back(std::move(js));
    }
    out["summary"] = {{"passed", rep.passed()}, {"failed", rep.failed()}, {"status", rep.ok() ? "pass" : "fail"}};
    return out;
}

inline std::string to_text(const VerificationReport& rep, bool timings = true) {
    std::ostringstream os;
    for (const auto& s : rep.suites) {
        os << "== " << s.name;
        if (timings) os << " (" << static_cast<long long>(s.runtime_ms + 0.5) << " ms)";
        os << "\n";
        for (const auto& c : s.checks) {
            os << (c.passed ? "  PASS " : "  FAIL ") << c.name << " [" << to_string(c.provenance) << "]";
            os << ": expected " << c.expected.dump() << ", actual " << c.actual.dump() << "\n";
        }
    }
    os << rep.passed() << " passed, " << rep.failed() << " failed\n";
    return os.str();
}

}  // namespace finigeo
