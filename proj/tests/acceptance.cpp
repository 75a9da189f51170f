// Acceptance checks: one line per criterion, nonzero exit if any fails.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "finigeo/magic_line.hpp"
#include "finigeo/veldkamp.hpp"

using namespace finigeo;

namespace {

struct Criterion {
    std::string title;
    std::function<bool(std::string&)> run;
};

const MagicLine& ml() {
    static const MagicLine m = build_magic_line();
    return m;
}

bool doily_structure(std::string& why) {
    const auto& g = doily();
    bool ok = g.point_count() == 15 && g.line_count() == 15;
    for (const auto& l : g.lines()) ok &= l.size() == 3;
    for (int p = 0; p < 15; ++p) ok &= g.degree(p) == 3;
    ok &= check_gq(g, 2, 2) && is_triangle_free(g);
    why = "15 points, 15 lines, GQ(2,2), triangle-free";
    return ok;
}

bool hyperplane_census(std::string& why) {
    const auto hs = enumerate_hyperplanes(doily());
    int o = 0, p = 0, g = 0;
    bool ok = true;
    for (const auto& h : hs) {
        const int n = h.points.size();
        o += n == 5;
        g += n == 9;
        if (n == 7) {
            ++p;
            ok &= deep_points(doily(), h.points).size() == 1;
        }
    }
    why = std::to_string(hs.size()) + " hyperplanes: " + std::to_string(o) + " ovoids, " + std::to_string(p) +
          " perp-sets, " + std::to_string(g) + " grids";
    return ok && hs.size() == 31 && o == 6 && p == 15 && g == 10;
}

bool veldkamp_identities(std::string& why) {
    int pairs = 0, triples = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            pairs += veldkamp_sum(ovoid(i).points, ovoid(j).points, kDuadCount) == perp_set(i, j).points;
            for (int k = j + 1; k <= 6; ++k)
                triples += veldkamp_sum(veldkamp_sum(ovoid(i).points, ovoid(j).points, kDuadCount), ovoid(k).points,
                                        kDuadCount) == grid(i, j, k).points;
        }
    why = std::to_string(pairs) + "/15 perp-set and " + std::to_string(triples) + "/20 grid identities";
    return pairs == 15 && triples == 20;
}

bool veldkamp_space(std::string& why) {
    const auto vs = build_veldkamp_space(doily());
    const int n = static_cast<int>(vs.points.size());
    std::vector<std::vector<int>> on(n, std::vector<int>(n, 0));
    for (const auto& t : vs.lines)
        for (int a : t)
            for (int b : t)
                if (a != b) ++on[a][b];
    bool ok = n == 31 && vs.lines.size() == 155;
    for (int a = 0; a < n; ++a) {
        ok &= vs.lines_through(a).size() == 15;
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            ok &= on[a][b] == 1;
            ok &= vs.index_of(veldkamp_sum(vs.points[a], vs.points[b], kDuadCount)) >= 0;
        }
    }
    why = std::to_string(n) + " points, " + std::to_string(vs.lines.size()) + " lines, 15 per point, closed";
    return ok;
}

bool family_classification(std::string& why) {
    const auto census = family_census(doily_veldkamp_lines());
    const std::map<int, int> pinned{{4, 45}, {5, 15}, {6, 20}, {7, 60}, {8, 15}};
    std::map<int, int> got;
    int total = 0;
    why = "families";
    for (const auto& [f, n] : census) {
        got[family_number(f)] = n;
        total += n;
        why += " (" + std::to_string(family_number(f)) + ")=" + std::to_string(n);
    }
    why += ", total " + std::to_string(total);
    return got == pinned && total == 155;
}

bool quadric_counts(std::string& why) {
    const auto& m = ml();
    const int plus = m.q_plus.points.size(), minus = m.q_minus.points.size(), core = m.core.size(),
              cone = m.cone.points.size();
    const int hs = m.sector_points(Sector::Hyperbolic).size(), es = m.sector_points(Sector::Elliptic).size(),
              cs = m.sector_points(Sector::Cone).size() + 1;
    why = "Q+ " + std::to_string(plus) + ", Q- " + std::to_string(minus) + ", core " + std::to_string(core) +
          ", cone " + std::to_string(cone) + ", sectors " + std::to_string(hs) + "/" + std::to_string(es) + "/" +
          std::to_string(cs);
    return plus == 35 && minus == 27 && core == 15 && cone == 31 && hs == 20 && es == 12 && cs == 16;
}

bool core_isomorphism(std::string& why) {
    const auto sub = induced_structure(ml().w52.geometry, ml().core);
    const auto iso = find_isomorphism(sub.geometry, doily());
    if (!iso) {
        why = "no isomorphism found";
        return false;
    }
    std::set<int> hit;
    for (const auto& l : sub.geometry.lines()) {
        PointSet img;
        for (int x : l) img.insert((*iso)[x]);
        const int k = doily().find_line(img);
        if (k < 0) {
            why = "induced line not sent to a syntheme";
            return false;
        }
        hit.insert(k);
    }
    why = std::to_string(sub.geometry.line_count()) + " induced lines onto " + std::to_string(hit.size()) + " synthemes";
    return sub.geometry.line_count() == 15 && hit.size() == 15;
}

bool hyperbolic_sector(std::string& why) {
    const auto& m = ml();
    const auto& c = m.q_plus;
    bool ok = true;
    std::map<std::uint64_t, std::vector<int>> by_trace;
    for (int p : m.sector_points(Sector::Hyperbolic).to_vector()) {
        const int local = c.local_index(p);
        ok &= c.geometry.degree(local) == 9;
        for (int l : c.geometry.lines_through(local)) {
            int on_core = 0;
            for (int x : c.geometry.lines()[l]) on_core += m.core.contains(c.to_global[x]);
            ok &= on_core == 1;
        }
        const auto t = doily_trace(m, p);
        ok &= t->kind == HyperplaneKind::Grid;
        by_trace[t->points.bits()].push_back(p);
    }
    for (const auto& [bits, pts] : by_trace) ok &= pts.size() == 2;
    ok &= by_trace.size() == 10;
    const int a = m.find_label("146"), b = m.find_label("235");
    const bool spot = doily_trace(m, a)->name() == "g_146" && doily_trace(m, b)->name() == "g_146" &&
                      complementary_point(m, a) == b;
    why = std::to_string(by_trace.size()) + " pairs onto grids, 146/235 -> " + doily_trace(m, a)->name();
    return ok && spot;
}

bool elliptic_sector(std::string& why) {
    const auto& m = ml();
    const auto& c = m.q_minus;
    bool ok = true;
    std::map<std::uint64_t, int> by_trace;
    for (int p : m.sector_points(Sector::Elliptic).to_vector()) {
        const int local = c.local_index(p);
        ok &= c.geometry.degree(local) == 5;
        for (int l : c.geometry.lines_through(local)) {
            std::vector<PointLabel> off;
            PointLabel duad;
            for (int x : c.geometry.lines()[l]) {
                const int g = c.to_global[x];
                if (m.core.contains(g)) duad = m.labels[g];
                else off.push_back(m.labels[g]);
            }
            ok &= off.size() == 2 && off[0].primed != off[1].primed;
            if (off.size() == 2) {
                std::vector<int> ij{off[0].elements[0], off[1].elements[0]};
                std::sort(ij.begin(), ij.end());
                ok &= duad.elements == ij;
            }
        }
        const auto t = doily_trace(m, p);
        ok &= t->kind == HyperplaneKind::Ovoid;
        ++by_trace[t->points.bits()];
    }
    for (const auto& [bits, n] : by_trace) ok &= n == 2;
    ok &= by_trace.size() == 6;
    const int a = m.find_label("3"), b = m.find_label("3'");
    const bool spot = doily_trace(m, a)->name() == "o_3" && doily_trace(m, b)->name() == "o_3";
    why = std::to_string(by_trace.size()) + " pairs onto ovoids, lines {i, j', ij}, 3/3' -> o_3";
    return ok && spot;
}

bool cone_sector(std::string& why) {
    const auto& m = ml();
    bool ok = coordinate_string(point_vector(m.nucleus)) == "110000" && perp(m.w52.geometry, m.nucleus) == m.cone.points;
    std::set<std::uint64_t> traces;
    for (int p : m.sector_points(Sector::Cone).to_vector()) {
        const auto t = doily_trace(m, p);
        ok &= t->kind == HyperplaneKind::PerpSet;
        traces.insert(t->points.bits());
        // deep duad ij is the complement of the label klmn, and {123456, klmn, ij} is a line
        const int deep = deep_points(doily(), t->points).first();
        PointLabel expect;
        for (int x = 1; x <= 6; ++x)
            if (!duad_at(deep).contains(x)) expect.elements.push_back(x);
        ok &= m.labels[p].elements == expect.elements;
        ok &= m.w52.geometry.find_line(PointSet::of({m.nucleus, p, m.duad_to_core[deep]})) >= 0;
    }
    why = std::to_string(traces.size()) + " cone points onto perp-sets, nucleus " + coordinate_string(point_vector(m.nucleus));
    return ok && traces.size() == 15;
}

bool sector_images(std::string& why) {
    const auto corr = build_correspondence(ml());
    int matched = 0, total = 0;
    bool complement_law = true;
    for (const auto& l : doily_veldkamp_lines()) {
        ++total;
        const auto img = veldkamp_line_image(corr, l);
        matched += image_matches_pattern(ml(), img);
        if (img.family == VeldkampFamily::OvoidOvoidPerp) {
            // {i/i', j/j', klmn}: klmn is the complement of ij
            std::set<int> used{ml().labels[img.members[0].points[0]].elements[0],
                               ml().labels[img.members[1].points[0]].elements[0]};
            for (int x : ml().labels[img.members[2].points[0]].elements) used.insert(x);
            complement_law &= used.size() == 6;
        }
    }
    why = std::to_string(matched) + "/" + std::to_string(total) + " images match their family pattern";
    return matched == 155 && total == 155 && complement_law;
}

bool model_equivalence(std::string& why) {
    const auto models = build_sector_models(ml());
    bool ok = true;
    std::string names;
    for (const auto& [model, c] : {std::pair{&models.hyperbolic, &ml().q_plus}, std::pair{&models.elliptic, &ml().q_minus},
                                    std::pair{&models.cone, &ml().cone}}) {
        const auto iso = find_isomorphism(*model, c->geometry);
        const bool good = iso && is_isomorphism(*model, c->geometry, *iso);
        ok &= good;
        names += " " + c->name + (good ? " ok" : " FAIL");
    }
    const bool gq = check_gq(models.elliptic, 2, 4);
    why = "isomorphic:" + names + "; elliptic model GQ(2,4) " + (gq ? "ok" : "FAIL");
    return ok && gq;
}

bool polar_pairs(std::string& why) {
    const auto& m = ml();
    int hyp = 0, ell = 0;
    for (auto s : {Sector::Hyperbolic, Sector::Elliptic})
        for (int p : m.sector_points(s).to_vector()) {
            const int q = *complementary_point(m, p);
            if (q < p) continue;
            const auto r = polar_pair_check(m, p, q);
            if (s == Sector::Hyperbolic)
                hyp += r.mutual_perp.size() == 9 && r.equals_trace && r.trace.kind == HyperplaneKind::Grid &&
                       r.non_degenerate && r.rank == 2 && r.is_polar_pair();
            else
                ell += r.mutual_perp.size() == 5 && r.equals_trace && r.trace.kind == HyperplaneKind::Ovoid &&
                       r.induced_lines == 0;
        }
    why = std::to_string(hyp) + "/10 hyperbolic polar pairs, " + std::to_string(ell) + "/6 elliptic ovoid pairs";
    return hyp == 10 && ell == 6;
}

bool gamma_spaces(std::string& why) {
    const auto& m = ml();
    const bool a = check_gamma_space(doily()), b = check_gamma_space(m.q_plus.geometry),
               c = check_gamma_space(m.q_minus.geometry),
               d = check_gamma_space(induced_structure(m.w52.geometry, m.core).geometry),
               e = check_gamma_space(m.w52.geometry);
    why = std::string("doily ") + (a ? "ok" : "FAIL") + ", Q+ " + (b ? "ok" : "FAIL") + ", Q- " + (c ? "ok" : "FAIL") +
          ", core " + (d ? "ok" : "FAIL") + ", W(5,2) " + (e ? "ok" : "FAIL");
    return a && b && c && d && e;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"doily structure", doily_structure},
        {"hyperplane census", hyperplane_census},
        {"Veldkamp identities", veldkamp_identities},
        {"Veldkamp space", veldkamp_space},
        {"family classification", family_classification},
        {"quadric counts", quadric_counts},
        {"core isomorphism", core_isomorphism},
        {"hyperbolic sector", hyperbolic_sector},
        {"elliptic sector", elliptic_sector},
        {"cone sector", cone_sector},
        {"sector images", sector_images},
        {"combinatorial models", model_equivalence},
        {"polar pairs", polar_pairs},
        {"gamma spaces", gamma_spaces},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string why;
        bool ok = false;
        try {
            ok = criteria[i].run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        failed += !ok;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].title << ": " << why << "\n";
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
