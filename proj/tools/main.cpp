#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "irrhlb/errors.hpp"
#include "irrhlb/generators.hpp"
#include "irrhlb/matrix_market.hpp"
#include "irrhlb/report.hpp"
#include "irrhlb/solver.hpp"

namespace {

irrhlb::SparseMatrix load_generator(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw irrhlb::ConfigError("--generate expects NAME:PARAM, got '" + spec + "'");
    const std::string name = spec.substr(0, colon);
    int param = 0;
    try {
        param = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw irrhlb::ConfigError("--generate parameter must be an integer: '" + spec + "'");
    }
    if (name == "clustered") return irrhlb::make_clustered_diag(param);
    if (name == "illcond") return irrhlb::make_illcond_diag(param);
    throw irrhlb::ConfigError("unknown generator '" + name + "' (clustered|illcond)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computes extreme singular triplets of a sparse matrix with "
                 "implicitly restarted Lanczos bidiagonalization"};

    std::string matrix_path, generate_spec, trace_path, out_path;
    irrhlb::SolverConfig config;
    std::string algorithm = "irrhlb", sigma = "SS", reorth = "both";
    bool emit_vectors = false;

    auto* opt_matrix = app.add_option("--matrix", matrix_path, "Matrix Market file to load");
    auto* opt_generate =
        app.add_option("--generate", generate_spec,
                       "Built-in test matrix NAME:PARAM (clustered:1..4, illcond:s)");
    opt_matrix->excludes(opt_generate);
    app.add_option("--algorithm", algorithm, "irrhlb|irhlb|irlb")
        ->check(CLI::IsMember({"irrhlb", "irhlb", "irlb"}));
    app.add_option("--k", config.k, "Number of desired triplets");
    app.add_option("--adjust", config.adjust, "Extra retained approximations");
    app.add_option("--m", config.m, "Bidiagonalization steps per cycle");
    app.add_option("--maxit", config.maxit, "Maximum restarts");
    app.add_option("--tol", config.tol, "Relative residual tolerance");
    app.add_option("--sigma", sigma, "SS for smallest, LS for largest")
        ->check(CLI::IsMember({"SS", "LS"}));
    app.add_option("--seed", config.seed, "Seed for the starting vector");
    app.add_option("--reorth", reorth, "both|q_only")
        ->check(CLI::IsMember({"both", "q_only"}));
    app.add_option("--trace", trace_path, "Write the per-restart CSV trace here");
    app.add_option("--out", out_path, "Write the JSON summary here (default stdout)");
    app.add_flag("--emit-vectors", emit_vectors, "Include singular vectors in the summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // --help exits clean, usage errors exit 1
    }

    try {
        if (matrix_path.empty() == generate_spec.empty()) {
            std::cerr << "error: exactly one of --matrix or --generate is required\n"
                      << app.help() << '\n';
            return 1;
        }

        config.algorithm = algorithm == "irrhlb"  ? irrhlb::Algorithm::Irrhlb
                           : algorithm == "irhlb" ? irrhlb::Algorithm::Irhlb
                                                  : irrhlb::Algorithm::Irlb;
        config.sigma =
            sigma == "SS" ? irrhlb::TargetEnd::Smallest : irrhlb::TargetEnd::Largest;
        config.reorth =
            reorth == "both" ? irrhlb::ReorthMode::Both : irrhlb::ReorthMode::QOnly;

        const irrhlb::SparseMatrix A = matrix_path.empty()
                                           ? load_generator(generate_spec)
                                           : irrhlb::read_matrix_market_file(matrix_path);
        irrhlb::MatrixSourceInfo info{matrix_path.empty() ? generate_spec : matrix_path,
                                      A.rows(), A.cols(), A.nonzeros()};

        const irrhlb::SolverResult result = irrhlb::solve(A, config);

        if (!trace_path.empty()) {
            std::ofstream trace(trace_path);
            if (!trace) {
                std::cerr << "error: cannot write trace to '" << trace_path << "'\n";
                return 1;
            }
            irrhlb::write_trace_csv(trace, result);
        }
        if (out_path.empty()) {
            irrhlb::write_summary_json(std::cout, result, config, info, emit_vectors);
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write summary to '" << out_path << "'\n";
                return 1;
            }
            irrhlb::write_summary_json(out, result, config, info, emit_vectors);
        }

        if (!result.converged) {
            std::cerr << "not converged after " << result.restarts_used << " restarts\n";
            return 2;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
