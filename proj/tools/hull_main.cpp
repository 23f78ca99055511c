#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hull/io.hpp"
#include "hull/outer_pcpp.hpp"
#include "hull/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // non-member / verification failure
constexpr int kExitUsage = 2;     // usage, parse, or contract errors

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hull::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hull::ParseError("cannot open output file: " + path);
    out << data;
}

hull::Point3 parse_point_args(const std::vector<std::string>& coords) {
    auto x = hull::parse_rational(coords[0]);
    auto y = hull::parse_rational(coords[1]);
    auto z = hull::parse_rational(coords[2]);
    if (!x || !y || !z) throw hull::ParseError("bad rational in --point");
    return hull::Point3{{*x, *y}, *z};
}

hull::ComplexDocument run_full(const hull::InputDocument& input, hull::Strategy strategy,
                               hull::EliminationTrace* trace_out = nullptr) {
    hull::EliminationTrace trace = hull::eliminate(input.points, strategy);
    hull::ComplexDocument doc;
    doc.complex = hull::hv_hull(trace.final_set);
    doc.extremal_points = hull::complex_extremal_points(doc.complex, trace.final_set);
    doc.scaffold_points = hull::scaffolding(trace.final_set, input.points);
    for (const auto& batch : trace.batches) doc.removed_per_step.push_back(batch.size());
    if (trace_out) *trace_out = std::move(trace);
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact separately convex hull of finite point sets in R^2 x R"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path, mesh_path, trace_path;
    std::string strategy_name = "batch";
    bool report = false;
    std::vector<std::string> point_args;
    int samples = 50;
    std::uint64_t seed = 1;

    auto* compute = app.add_subcommand("compute", "Run the full pipeline and write the complex");
    compute->add_option("input", in_path)->required();
    compute->add_option("--out", out_path, "complex JSON output path");
    compute->add_option("--mesh", mesh_path, "lossy OBJ export path");
    compute->add_option("--trace", trace_path, "elimination trace JSON path");
    compute->add_option("--strategy", strategy_name)->check(CLI::IsMember({"batch", "seq"}));
    compute->add_flag("--report", report, "run the verification suite afterwards");

    auto* member = app.add_subcommand("member", "Test membership of a point in the hull");
    member->add_option("input", in_path)->required();
    member->add_option("--point", point_args, "X Y Z")->expected(3)->required();

    auto* pcpp = app.add_subcommand("pcpp", "Test the shovel outer-approximation oracle");
    pcpp->add_option("input", in_path)->required();
    pcpp->add_option("--point", point_args, "X Y Z")->expected(3)->required();

    auto* grid_cmd = app.add_subcommand("grid", "Print grid sizes for the input set");
    grid_cmd->add_option("input", in_path)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    verify_cmd->add_option("input", in_path)->required();
    verify_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed);

    auto* scaffold = app.add_subcommand("scaffold", "Write the order-2 scaffolding point set");
    scaffold->add_option("input", in_path)->required();
    scaffold->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        hull::InputDocument input = hull::parse_input(read_file(in_path));
        hull::Strategy strategy =
            strategy_name == "seq" ? hull::Strategy::sequential_lex : hull::Strategy::batch;

        if (compute->parsed()) {
            hull::EliminationTrace trace;
            hull::ComplexDocument doc = run_full(input, strategy, &trace);
            std::string json = hull::serialize_complex(doc);
            if (out_path.empty())
                std::cout << json;
            else
                write_file(out_path, json);
            if (!mesh_path.empty()) write_file(mesh_path, hull::export_mesh(doc.complex));
            if (!trace_path.empty()) write_file(trace_path, hull::serialize_trace(trace));
            if (report) {
                auto rep = hull::verify_hull(input.points, trace, doc.complex, samples, seed);
                for (const auto& c : rep.checks)
                    std::cerr << (c.pass ? "pass " : "FAIL ") << c.name
                              << (c.details.empty() ? "" : ": " + c.details) << "\n";
                if (!rep.overall) return kExitNegative;
            }
            return kExitOk;
        }

        if (member->parsed()) {
            hull::Point3 p = parse_point_args(point_args);
            auto trace = hull::eliminate(input.points, strategy);
            bool is_member = hull::membership(hull::hv_hull(trace.final_set), p);
            std::cout << "member: " << (is_member ? "true" : "false") << "\n";
            return is_member ? kExitOk : kExitNegative;
        }

        if (pcpp->parsed()) {
            hull::Point3 p = parse_point_args(point_args);
            auto res = hull::pcpp_member(input.points, p);
            std::cout << "member: " << (res.member ? "true" : "false") << "\n";
            if (res.witness) {
                const auto& s = *res.witness;
                std::cout << "witness shovel: l(x,y) = " << hull::format_rational(s.a) << "*x + "
                          << hull::format_rational(s.b) << "*y + " << hull::format_rational(s.c)
                          << " > 0, " << (s.eps > 0 ? "+" : "-") << "(z - "
                          << hull::format_rational(s.z0) << ") > 0\n";
            }
            return res.member ? kExitOk : kExitNegative;
        }

        if (grid_cmd->parsed()) {
            auto pr = hull::project(input.points);
            auto derived = hull::first_derived_set(pr.planar);
            hull::Grid g = hull::build_grid(input.points);
            std::cout << "|F| = " << pr.planar.size() << "\n"
                      << "|F1| = " << derived.size() << "\n"
                      << "|H| = " << pr.heights.size() << "\n"
                      << "|G| = " << g.size() << "\n";
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            auto trace = hull::eliminate(input.points, hull::Strategy::batch);
            auto m = hull::hv_hull(trace.final_set);
            auto rep = hull::verify_hull(input.points, trace, m, samples, seed);
            for (const auto& c : rep.checks)
                std::cout << (c.pass ? "pass " : "FAIL ") << c.name
                          << (c.details.empty() ? "" : ": " + c.details) << "\n";
            std::cout << (rep.overall ? "all checks passed" : "verification failed") << "\n";
            return rep.overall ? kExitOk : kExitNegative;
        }

        if (scaffold->parsed()) {
            write_file(out_path, hull::serialize_points(hull::scaffolding(input.points)));
            return kExitOk;
        }
    } catch (const hull::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
