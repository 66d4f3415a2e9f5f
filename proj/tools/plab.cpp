#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plab/errors.hpp"
#include "plab/rota_baxter.hpp"
#include "plab/suite.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw plab::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

long search_budget(long cli_budget) {
    if (const char* env = std::getenv("PLAB_BUDGET")) {
        long v = std::atol(env);
        if (v > 0 && (cli_budget <= 0 || v < cli_budget)) return v;
    }
    return cli_budget > 0 ? cli_budget : 1000000;
}

std::vector<plab::Rational> parse_entries(const std::string& spec) {
    std::vector<plab::Rational> out;
    std::stringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto v = plab::Rational::parse(tok);
        if (!v) throw plab::Error("bad entry candidate '" + tok + "'");
        out.push_back(*v);
    }
    if (out.empty()) throw plab::Error("empty entry candidate list");
    return out;
}

int run_checks(const std::string& file, const std::string& suite_name, const std::string& format) {
    plab::Workspace ws = plab::parse_workspace(read_file(file));
    auto suite = plab::preset_suite(ws, suite_name);
    plab::Report rep = plab::run_suite(ws, suite);
    std::cout << plab::emit_report(rep, format);
    return rep.pass() ? 0 : 1;
}

// Enumerates square matrices over the candidate entries and reports those
// passing the target check.
int run_search(const std::string& file, const std::string& target, const std::string& entries_spec,
               long budget_opt) {
    plab::Workspace ws = plab::parse_workspace(read_file(file));
    auto entries = parse_entries(entries_spec);
    long budget = search_budget(budget_opt);
    int found = 0;
    for (const auto& [kind, name] : ws.order) {
        if (kind != "algebra") continue;
        const plab::Algebra& alg = ws.algebras.at(name);
        auto consider = [&](const std::string& what, const plab::Matrix& m, bool ok) {
            if (!ok) return;
            ++found;
            std::cout << what << " on " << name << ": " << m.str() << "\n";
        };
        long count = 0;
        auto within = [&]() {
            if (++count > budget)
                throw plab::SearchSpaceTooLarge("budget " + std::to_string(budget) + " exhausted");
            return true;
        };
        if (target == "averaging") {
            plab::enumerate_matrices(alg.dim, alg.dim, entries, [&](const plab::Matrix& m) {
                within();
                consider("averaging operator", m, plab::check_averaging(alg, m).pass());
                return true;
            });
        } else if (target == "rb") {
            plab::enumerate_matrices(alg.dim, alg.dim, entries, [&](const plab::Matrix& m) {
                within();
                consider("weight-0 rota-baxter operator", m,
                         plab::check_rb(alg, m, plab::Rational(0)).pass());
                return true;
            });
        } else if (target == "relative-rb") {
            // Relative operators on the coregular module, one search per
            // declared averaging operator on this algebra.
            for (const auto& [mk, mname] : ws.order) {
                if (mk != "map") continue;
                const plab::Matrix& p = ws.maps.at(mname);
                if (p.rows() != alg.dim || p.cols() != alg.dim) continue;
                if (!plab::check_averaging(alg, p).pass()) continue;
                plab::AveragingAlgebra avg{alg, p};
                plab::AvgRepresentation co;
                {
                    std::vector<plab::Matrix> rho, phi;
                    for (int i = 0; i < alg.dim; ++i) {
                        plab::Matrix li = alg.left_mult(i), ri = alg.right_mult(i);
                        rho.push_back(-(li - ri).transpose());
                        phi.push_back(ri.transpose());
                    }
                    co.rep = plab::make_representation(alg, alg.dim, std::move(rho),
                                                       std::move(phi));
                    co.alpha = p.transpose();
                }
                plab::enumerate_matrices(alg.dim, alg.dim, entries, [&](const plab::Matrix& m) {
                    within();
                    consider("relative rota-baxter operator (P = " + mname + ")", m,
                             plab::check_relative_rb(avg, co, m).pass());
                    return true;
                });
            }
        } else {
            throw plab::Error("unknown search target '" + target + "'");
        }
    }
    std::cout << "found " << found << " candidate(s)\n";
    return 0;
}

int run_derive(const std::string& file, const std::string& op, const std::string& out_path) {
    plab::Workspace ws = plab::parse_workspace(read_file(file));
    // `--op` is a derive line without the leading keyword, e.g.
    // "induced_leibniz UT2 R as L".
    plab::Workspace spec_ws = plab::parse_workspace("derive " + op + "\n");
    std::vector<plab::CheckDescriptor> suite = spec_ws.directives;
    plab::run_suite(ws, suite);
    std::string text = plab::print_workspace(ws);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw plab::Error("cannot open '" + out_path + "'");
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic checks for algebras with averaging operators"};
    app.require_subcommand(1);

    std::string file, suite_name = "all", format = "text", op, out_path, target,
                entries = "-1,0,1";
    long budget = 0;

    CLI::App* check = app.add_subcommand("check", "run a check suite on a workspace file");
    check->add_option("file", file, "workspace file")->required();
    check->add_option("--suite", suite_name,
                      "preset: preLie|averaging|bialgebra|cybe|rota-baxter|all");

    CLI::App* derive = app.add_subcommand("derive", "run a construction and print the workspace");
    derive->add_option("file", file, "workspace file")->required();
    derive->add_option("--op", op, "construction, e.g. 'induced_leibniz UT2 R as L'")->required();
    derive->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* search = app.add_subcommand("search", "enumerate operators over entry candidates");
    search->add_option("file", file, "workspace file")->required();
    search->add_option("--target", target, "averaging|rb|relative-rb")->required();
    search->add_option("--entries", entries, "comma-separated rational candidates");
    search->add_option("--budget", budget, "candidate budget (also via PLAB_BUDGET)");

    CLI::App* report = app.add_subcommand("report", "emit a machine-readable report");
    report->add_option("file", file, "workspace file")->required();
    report->add_option("--suite", suite_name,
                       "preset: preLie|averaging|bialgebra|cybe|rota-baxter|all");
    report->add_option("--format", format, "text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_checks(file, suite_name, "text");
        if (report->parsed()) return run_checks(file, suite_name, format);
        if (derive->parsed()) return run_derive(file, op, out_path);
        if (search->parsed()) return run_search(file, target, entries, budget);
    } catch (const plab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
