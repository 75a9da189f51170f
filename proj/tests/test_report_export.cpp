#include <gtest/gtest.h>

#include "finigeo/export.hpp"
#include "finigeo/report.hpp"

using namespace finigeo;

namespace {

const MagicLine& ml() {
    static const MagicLine m = build_magic_line();
    return m;
}

int count_bold(const FigureGraph& g) {
    int n = 0;
    for (const auto& l : g.lines) n += l.bold;
    return n;
}

}  // namespace

TEST(Report, AllSuitesPass) {
    const auto rep = verify("all");
    ASSERT_EQ(rep.suites.size(), 3u);
    for (const auto& s : rep.suites)
        for (const auto& c : s.checks) EXPECT_TRUE(c.passed) << s.name << ": " << c.name << " expected " << c.expected << " got " << c.actual;
    EXPECT_TRUE(rep.ok());
    EXPECT_GT(rep.passed(), 0);
}

TEST(Report, SingleSuiteAndUnknownSuite) {
    EXPECT_EQ(verify("doily").suites.size(), 1u);
    EXPECT_THROW(verify("nope"), InputError);
}

TEST(Report, StructuredOutputRoundTrips) {
    const auto js = to_json(verify("veldkamp"));
    const std::string once = js.dump(2);
    EXPECT_EQ(ordered_json::parse(once).dump(2), once);
    EXPECT_EQ(js["summary"]["status"], "pass");
    EXPECT_FALSE(js["suites"][0].contains("runtime_ms"));
    EXPECT_TRUE(to_json(verify("veldkamp"), true)["suites"][0].contains("runtime_ms"));
}

TEST(Report, StructuredOutputIsDeterministic) {
    EXPECT_EQ(to_json(verify("all")).dump(), to_json(verify("all")).dump());
}

TEST(Report, FailedCheckIsReported) {
    SuiteReport s{"x", {}, 0.0};
    s.expect("one", 1, 2, Provenance::Derived);
    const VerificationReport rep{{s}};
    EXPECT_FALSE(rep.ok());
    EXPECT_EQ(to_json(rep)["summary"]["status"], "fail");
    EXPECT_NE(to_text(rep).find("one"), std::string::npos);
}

TEST(Export, HyperbolicFigure) {
    const auto g = build_figure(ml(), Sector::Hyperbolic, "146");
    EXPECT_EQ(g.trace, "g_146");
    EXPECT_EQ(g.nodes.size(), 35u);
    EXPECT_EQ(g.lines.size(), 105u);
    EXPECT_EQ(count_bold(g), 9);
    int trace_nodes = 0;
    for (const auto& n : g.nodes) trace_nodes += n.cls == "trace";
    EXPECT_EQ(trace_nodes, 9);
}

TEST(Export, EllipticFigure) {
    const auto g = build_figure(ml(), Sector::Elliptic, "3'");
    EXPECT_EQ(g.selected, "3′");
    EXPECT_EQ(g.trace, "o_3");
    EXPECT_EQ(count_bold(g), 5);
}

TEST(Export, ConeFigure) {
    const auto g = build_figure(ml(), Sector::Cone, "3456");
    EXPECT_EQ(g.trace, "p_12");
    bool vertex_line = false;
    for (const auto& l : g.lines) {
        std::set<std::string> pts(l.points.begin(), l.points.end());
        if (pts == std::set<std::string>{"123456", "3456", "12"}) vertex_line = l.vertex && l.bold;
    }
    EXPECT_TRUE(vertex_line);
}

TEST(Export, InvalidLabelListsValidOnes) {
    try {
        build_figure(ml(), Sector::Elliptic, "146");
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("valid labels"), std::string::npos);
        EXPECT_NE(msg.find("3′"), std::string::npos);
    }
    EXPECT_THROW(parse_sector("core"), InputError);
}

TEST(Export, LabelsBelongToTheConstituent) {
    for (const auto& [sector, label] : {std::pair{Sector::Hyperbolic, "123"}, {Sector::Elliptic, "1"}, {Sector::Cone, "1234"}}) {
        const auto g = build_figure(ml(), sector, label);
        const auto& c = ml().constituent_of(ml().find_label(label));
        for (const auto& l : g.lines)
            for (const auto& p : l.points) EXPECT_GE(c.geometry.index_of(p), 0) << p;
    }
}

TEST(Export, DotAndJsonEncodings) {
    const auto g = build_figure(ml(), Sector::Elliptic, "3");
    const auto clique = to_dot(g);
    const auto nodes = to_dot(g, true);
    EXPECT_EQ(clique.rfind("graph ", 0), 0u);
    EXPECT_NE(nodes.find("\"L0\""), std::string::npos);
    EXPECT_EQ(to_json(g)["edges"].size(), 45u * 3);
    EXPECT_EQ(to_json(g, true)["edges"].size(), 45u * 3);
    EXPECT_EQ(to_json(g)["lines"].size(), 45u);
}

TEST(Tables, RowCounts) {
    EXPECT_EQ(table("hyperplanes").size(), 31u);
    EXPECT_EQ(table("veldkamp_lines").size(), 155u);
    EXPECT_EQ(table("sector_maps").size(), 31u);
    EXPECT_THROW(table("nope"), InputError);
}

TEST(Tables, SectorMapText) {
    const auto rows = table("sector_maps");
    const auto text = table_text("sector_maps", rows);
    EXPECT_NE(text.find("o_3 ↦ pair 3/3′ (elliptic)\n"), std::string::npos);
    EXPECT_NE(text.find("p_12 ↦ point 3456 (cone)\n"), std::string::npos);
    EXPECT_NE(text.find("g_146 ↦ pair 146/235 (hyperbolic)\n"), std::string::npos);
}
