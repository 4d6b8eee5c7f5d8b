// Command-line harness: verification suites, grid export of cataloged solutions, group transport.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "riccati3d/export.hpp"
#include "riccati3d/verify.hpp"

using namespace riccati3d;

namespace {

struct SolutionFlags {
    std::string id = "rotational";
    double k = 1.0;
    double c = 0.0;
    double C = 1.0;
    double C1 = 0.0;
    double C2 = 2.718281828459045;
    double shift = 0.0;
    double margin = 0.1;
};

void add_solution_flags(CLI::App* cmd, SolutionFlags& f) {
    cmd->add_option("--solution", f.id, "rotational, conical or harmonic:<seed>")->capture_default_str();
    cmd->add_option("--k", f.k, "rotational k")->capture_default_str();
    cmd->add_option("--c", f.c, "rotational c")->capture_default_str();
    cmd->add_option("--C", f.C, "normalization of psi")->capture_default_str();
    cmd->add_option("--C1", f.C1, "conical C1")->capture_default_str();
    cmd->add_option("--C2", f.C2, "conical C2")->capture_default_str();
    cmd->add_option("--shift", f.shift, "additive shift of a harmonic seed")->capture_default_str();
    cmd->add_option("--margin", f.margin, "distance kept from singular sets")->capture_default_str();
}

CatalogSolution make_solution(const SolutionFlags& f) {
    if (!(f.margin > 0.0)) throw ConfigError("--margin must be positive");
    CatalogParams p;
    p.rotational.k = f.k;
    p.rotational.c = f.c;
    p.rotational.C = f.C;
    p.rotational.margin = f.margin;
    p.conical.C1 = f.C1;
    p.conical.C2 = f.C2;
    p.conical.C = f.C;
    p.conical.margin = f.margin;
    p.harmonic_shift = f.shift;
    p.margin = f.margin;
    try {
        return catalog_solution(f.id, p);
    } catch (const PreconditionError& e) {
        throw ConfigError(e.what());
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
}

std::pair<std::string, std::string> key_value(const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + kv + "'");
    return {kv.substr(0, eq), kv.substr(eq + 1)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for the biquaternionic Riccati equation DQ + |Q|^2 = q"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    std::string config_file;
    std::vector<std::string> sets;
    std::vector<std::string> tols;
    std::string report_file;
    std::string verify_format = "table";
    bool no_seconds = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    verify->add_option("--suite", suite, "algebra, operators, riccati, euler_picard, symmetry, solutions, oned or all")
        ->capture_default_str();
    verify->add_option("--config", config_file, "flat key=value configuration file");
    verify->add_option("--set", sets, "configuration override key=value (repeatable)");
    verify->add_option("--tol", tols, "tolerance override check=value (repeatable)");
    verify->add_option("--out", report_file, "also write the JSON report to this file");
    verify->add_option("--format", verify_format, "standard output format: table or json")->capture_default_str();
    verify->add_flag("--no-seconds", no_seconds, "omit timings from the JSON report");
    auto* seed_opt = verify->add_option("--seed", seed, "sampling seed");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a cataloged solution on a grid");
    SolutionFlags eval_sol;
    add_solution_flags(eval, eval_sol);
    std::string eval_grid, eval_fields, eval_out = "-", eval_format = "csv";
    double eval_h = DiffScheme{}.h;
    eval->add_option("--grid", eval_grid, "x0,x1,nx,y0,y1,ny,z0,z1,nz")->required();
    eval->add_option("--fields", eval_fields, "comma list of Q, q, psi, residuals (default: all available)");
    eval->add_option("--out", eval_out, "output path, - for standard output")->capture_default_str();
    eval->add_option("--format", eval_format, "csv or json")->capture_default_str();
    eval->add_option("--step", eval_h, "finite-difference step for residuals")->capture_default_str();
    eval->add_option("--seed", seed, "accepted for symmetry with verify; eval does not sample");

    // transform
    auto* transform = app.add_subcommand("transform", "transport a cataloged solution by a symmetry group");
    SolutionFlags tr_sol;
    add_solution_flags(transform, tr_sol);
    int group = 0;
    double lambda = 0.0;
    std::string tr_grid, tr_out = "-", tr_format = "csv";
    transform->add_option("--group", group, "group index 1..10")->required();
    transform->add_option("--lambda", lambda, "group parameter")->required();
    transform->add_option("--grid", tr_grid, "x0,x1,nx,y0,y1,ny,z0,z1,nz")->required();
    transform->add_option("--out", tr_out, "output path, - for standard output")->capture_default_str();
    transform->add_option("--format", tr_format, "csv or json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    seed_given = seed_opt->count() > 0;

    try {
        if (verify->parsed()) {
            RunConfig cfg;
            if (!config_file.empty()) cfg.load_file(config_file);
            for (const auto& kv : sets) {
                const auto [k, v] = key_value(kv);
                cfg.set(k, v);
            }
            for (const auto& kv : tols) {
                const auto [k, v] = key_value(kv);
                cfg.set("tol." + k, v);
            }
            if (seed_given) cfg.seed = seed;
            if (verify_format != "table" && verify_format != "json") throw ConfigError("--format must be table or json");
            const VerificationReport report = run_suite(suite, cfg);
            if (verify_format == "json") {
                std::cout << report.to_json(!no_seconds);
            } else {
                std::cout << report.to_table();
            }
            if (!report_file.empty()) write_output(report_file, report.to_json(!no_seconds));
            return report.overall_pass ? 0 : 1;
        }

        if (eval->parsed()) {
            if (eval_format != "csv" && eval_format != "json") throw ConfigError("--format must be csv or json");
            const CatalogSolution sol = make_solution(eval_sol);
            const Grid grid = Grid::parse(eval_grid);
            std::vector<std::string> fields = split(eval_fields, ',');
            if (fields.empty()) {
                fields = {"Q", "q"};
                if (sol.psi) fields.push_back("psi");
                fields.push_back("residuals");
            }
            DiffScheme s;
            s.h = eval_h;
            s.validate();
            const GridTable table = evaluate_on_grid(sol, grid, fields, s);
            write_output(eval_out, eval_format == "csv" ? table.to_csv() : table.to_json());
            return 0;
        }

        if (transform->parsed()) {
            if (tr_format != "csv" && tr_format != "json") throw ConfigError("--format must be csv or json");
            const CatalogSolution sol = make_solution(tr_sol);
            const Grid grid = Grid::parse(tr_grid);
            const TransformSummary sum = transform_on_grid(sol, {group, lambda}, grid);
            write_output(tr_out, tr_format == "csv" ? sum.table.to_csv() : sum.table.to_json());
            std::cerr << "rows " << sum.table.rows.size() << ", masked " << sum.table.masked_count()
                      << ", max residual " << sum.max_residual << ", max discrepancy " << sum.max_discrepancy;
            if (sum.max_printed_discrepancy) std::cerr << ", printed formula discrepancy " << *sum.max_printed_discrepancy;
            std::cerr << "\n";
            return sum.max_discrepancy > 1e-6 ? 1 : 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
