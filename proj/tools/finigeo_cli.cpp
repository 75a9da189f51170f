// finigeo: verification, figure export and tables for the doily, its
// Veldkamp space and the magic three-qubit Veldkamp line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "finigeo/export.hpp"
#include "finigeo/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw finigeo::InputError("cannot write " + out_path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Doily, Veldkamp space and magic Veldkamp line of W(5,2)"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all", verify_out, verify_format = "text";
    bool timings = false;
    verify->add_option("suite", suite, "doily | veldkamp | magicline | all")
        ->check(CLI::IsMember({"doily", "veldkamp", "magicline", "all"}));
    verify->add_option("--out", verify_out, "Write the report to FILE");
    verify->add_option("--format", verify_format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    verify->add_flag("--timings", timings, "Include per-suite runtimes in structured output");

    auto* exp = app.add_subcommand("export", "Export a highlighted constituent graph");
    std::string figure, point, exp_format = "dot", exp_out;
    bool line_nodes = false;
    exp->add_option("--figure", figure, "hyperbolic | elliptic | cone")->required();
    exp->add_option("--point", point, "Label of an off-core point of that sector")->required();
    exp->add_option("--format", exp_format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
    exp->add_flag("--line-nodes", line_nodes, "Emit each line as its own node");
    exp->add_option("--out", exp_out, "Write to FILE");

    auto* tables = app.add_subcommand("tables", "List hyperplanes, Veldkamp lines or sector maps");
    std::string what, tab_format = "text", tab_out;
    tables->add_option("what", what, "hyperplanes | veldkamp_lines | sector_maps")
        ->required()
        ->check(CLI::IsMember({"hyperplanes", "veldkamp_lines", "sector_maps"}));
    tables->add_option("--format", tab_format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    tables->add_option("--out", tab_out, "Write to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) {
            const auto rep = finigeo::verify(suite);
            if (verify_format == "structured")
                emit(finigeo::to_json(rep, timings).dump(2) + "\n", verify_out);
            else
                emit(finigeo::to_text(rep), verify_out);
            return rep.ok() ? kExitOk : kExitFailed;
        }
        if (*exp) {
            const auto sector = finigeo::parse_sector(figure);
            const auto ml = finigeo::build_magic_line();
            const auto g = finigeo::build_figure(ml, sector, point);
            emit(exp_format == "dot" ? finigeo::to_dot(g, line_nodes) : finigeo::to_json(g, line_nodes).dump(2) + "\n",
                 exp_out);
            return kExitOk;
        }
        if (*tables) {
            const auto rows = finigeo::table(what);
            emit(tab_format == "structured" ? rows.dump(2) + "\n" : finigeo::table_text(what, rows), tab_out);
            return kExitOk;
        }
    } catch (const finigeo::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}
