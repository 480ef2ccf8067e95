#include "irrhlb/report.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

namespace irrhlb {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string flag_tokens(const TraceRecord& rec) {
    std::string s;
    const auto add = [&s](const char* tok) {
        if (!s.empty()) s += '|';
        s += tok;
    };
    if (rec.breakdown) add("breakdown");
    if (rec.shift_fallback) add("shift_fallback");
    if (rec.filter_skipped) add("filter_skipped");
    if (rec.refined_degenerate) add("refined_degenerate");
    return s;
}

} // namespace

void write_trace_csv(std::ostream& out, const SolverResult& result) {
    out << "restart,triplet_index,rho,residual,shift_min,shift_max,"
           "n_replaced_shifts,a_norm_est,flags\n";
    for (const TraceRecord& rec : result.trace) {
        const std::string flags = flag_tokens(rec);
        for (std::size_t i = 0; i < rec.rhos.size(); ++i) {
            out << rec.restart << ',' << i + 1 << ',' << fmt(rec.rhos[i]) << ','
                << fmt(rec.residuals[i]) << ',';
            if (rec.n_shifts > 0)
                out << fmt(rec.shift_min) << ',' << fmt(rec.shift_max);
            else
                out << ',';
            out << ',' << rec.n_replaced_shifts << ',' << fmt(rec.a_norm_est) << ','
                << flags << '\n';
        }
    }
}

void write_summary_json(std::ostream& out, const SolverResult& result,
                        const SolverConfig& config, const MatrixSourceInfo& info,
                        bool emit_vectors) {
    nlohmann::ordered_json j;
    j["matrix"] = {{"source", info.source},
                   {"rows", info.rows},
                   {"cols", info.cols},
                   {"nonzeros", info.nonzeros}};
    j["config"] = {{"algorithm", to_string(config.algorithm)},
                   {"k", config.k},
                   {"adjust", config.adjust},
                   {"m", config.m},
                   {"maxit", config.maxit},
                   {"tol", config.tol},
                   {"sigma", to_string(config.sigma)},
                   {"seed", config.seed},
                   {"reorth", config.reorth == ReorthMode::Both ? "both" : "q_only"}};
    j["converged"] = result.converged;
    j["restarts_used"] = result.restarts_used;
    j["matvec_count"] = result.matvec_count;
    j["matvec_transpose_count"] = result.matvec_transpose_count;
    j["a_norm_est"] = result.a_norm_est;

    nlohmann::ordered_json triplets = nlohmann::ordered_json::array();
    for (const SingularTriplet& t : result.triplets) {
        nlohmann::ordered_json jt;
        jt["value"] = t.value;
        jt["residual"] = t.residual;
        if (emit_vectors) {
            jt["u"] = std::vector<double>(t.u.data(), t.u.data() + t.u.size());
            jt["v"] = std::vector<double>(t.v.data(), t.v.data() + t.v.size());
        }
        triplets.push_back(std::move(jt));
    }
    j["triplets"] = std::move(triplets);
    out << j.dump(2) << '\n';
}

} // namespace irrhlb
