#include "irrhlb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "irrhlb/errors.hpp"

namespace irrhlb {

namespace {

void validate_config(const SparseMatrix& A, const SolverConfig& c) {
    if (c.k < 1) throw ConfigError("k must be >= 1");
    if (c.adjust < 0) throw ConfigError("adjust must be >= 0");
    if (c.tol <= 0.0) throw ConfigError("tol must be positive");
    if (c.maxit < 0) throw ConfigError("maxit must be >= 0");
    if (c.k + c.adjust >= c.m)
        throw ConfigError("k + adjust must be smaller than m");
    if (static_cast<Index>(c.m) > std::min(A.rows(), A.cols()))
        throw ConfigError("m exceeds min(M, N)");
    if (c.sigma == TargetEnd::Largest && c.algorithm != Algorithm::Irlb)
        throw ConfigError(
            "sigma=LS requires algorithm=irlb: the harmonic variants are built for the "
            "smallest singular triplets and degrade on the largest; use Ritz extraction "
            "with exact shifts instead");
}

} // namespace

bool convergence_check(const DenseVector& residuals, double a_norm_est, double tol,
                       int k) {
    if (a_norm_est <= 0.0)
        throw std::invalid_argument("convergence_check: a_norm_est must be positive");
    if (residuals.size() < k)
        throw DimensionError("convergence_check: fewer residuals than k");
    return residuals.head(k).maxCoeff() / a_norm_est < tol;
}

SolverResult solve(const SparseMatrix& A_input, const SolverConfig& config) {
    // Wide matrices are handled through their transpose; u/v swap back below.
    const bool transposed = A_input.rows() < A_input.cols();
    SparseMatrix storage;
    if (transposed) storage = A_input.transposed();
    const SparseMatrix& A = transposed ? storage : A_input;

    validate_config(A, config);
    const Index k = config.k;
    const Index k_eff = config.k + config.adjust;
    const Index m = config.m;
    const bool largest = config.sigma == TargetEnd::Largest;
    // ascending extraction order; for LS the wanted triplets sit at the top
    const auto wanted = [&](Index i) { return largest ? m - 1 - i : i; };

    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> normal;
    DenseVector q1(A.cols());
    for (Index i = 0; i < q1.size(); ++i) q1(i) = normal(rng);
    q1 /= q1.norm();

    OperatorCounters counters;
    BidiagFactorization fact = bidiag_start(A, q1, &counters);
    bidiag_extend(A, fact, m, config.reorth, rng, &counters);

    SolverResult result;
    double a_norm_est = 0.0;
    int repairs_seen = 0;
    double best_score = std::numeric_limits<double>::infinity();
    std::vector<SingularTriplet> best_triplets;

    for (int cycle = 0;; ++cycle) {
        const BidiagonalMatrix B = fact.projected();
        const double beta_m = fact.beta_last();

        HarmonicSet hset;
        RitzSet rset;
        RefinedSet refined;
        std::vector<bool> refined_ok;
        bool all_refined_ok = true;
        if (config.algorithm == Algorithm::Irlb) {
            rset = ritz_extract(B, beta_m);
            a_norm_est = std::max(a_norm_est, rset.values(m - 1));
        } else {
            hset = harmonic_extract(B, beta_m);
            a_norm_est = std::max(a_norm_est, hset.thetas(m - 1));
            if (config.algorithm == Algorithm::Irrhlb) {
                // column by column: a collapsed split (heavily unbalanced
                // minimizer, seen mid-convergence when beta_m dwarfs rho_i)
                // falls back to the harmonic pair for that triplet only
                refined.X.resize(m, k_eff);
                refined.Y.resize(m, k_eff);
                refined.min_residuals.resize(k_eff);
                refined.residuals.resize(k_eff);
                refined_ok.assign(static_cast<std::size_t>(k_eff), true);
                for (Index i = 0; i < k_eff; ++i) {
                    try {
                        const RefinedSet one =
                            refined_extract(B, beta_m, hset.rhos.segment(i, 1));
                        refined.X.col(i) = one.X.col(0);
                        refined.Y.col(i) = one.Y.col(0);
                        refined.min_residuals(i) = one.min_residuals(0);
                        refined.residuals(i) = one.residuals(0);
                    } catch (const DegeneracyError&) {
                        refined_ok[static_cast<std::size_t>(i)] = false;
                        all_refined_ok = false;
                        refined.X.col(i) = hset.S.col(i);
                        refined.Y.col(i) = hset.W.col(i);
                        refined.min_residuals(i) = hset.residuals(i);
                        refined.residuals(i) = hset.residuals(i);
                    }
                }
            }
        }

        const auto value_of = [&](Index i) {
            return config.algorithm == Algorithm::Irlb ? rset.values(wanted(i))
                                                       : hset.rhos(i);
        };
        const auto resid_of = [&](Index i) {
            switch (config.algorithm) {
                case Algorithm::Irlb: return rset.residuals(wanted(i));
                case Algorithm::Irhlb: return hset.residuals(i);
                default:
                    return i < k_eff ? refined.residuals(i) : hset.residuals(i);
            }
        };

        DenseVector stop_resid(k);
        for (Index i = 0; i < k; ++i) stop_resid(i) = resid_of(i);

        TraceRecord rec;
        rec.restart = cycle;
        rec.a_norm_est = a_norm_est;
        rec.breakdown = fact.breakdown_repairs > repairs_seen;
        rec.refined_degenerate = !all_refined_ok;
        repairs_seen = fact.breakdown_repairs;
        for (Index i = 0; i < k; ++i) {
            rec.rhos.push_back(value_of(i));
            rec.residuals.push_back(resid_of(i));
        }

        const auto assemble_current = [&]() {
            std::vector<SingularTriplet> triplets;
            triplets.reserve(static_cast<std::size_t>(k));
            for (Index i = 0; i < k; ++i) {
                DenseVector cl, cr;
                switch (config.algorithm) {
                    case Algorithm::Irlb:
                        cl = rset.S.col(wanted(i));
                        cr = rset.W.col(wanted(i));
                        break;
                    case Algorithm::Irhlb:
                        cl = hset.S.col(i);
                        cr = hset.W.col(i);
                        break;
                    default:
                        cl = refined.X.col(i);
                        cr = refined.Y.col(i);
                        break;
                }
                auto [u, v] = assemble_long_vectors(fact.P, fact.Q.leftCols(m), cl, cr);
                u /= u.norm();
                v /= v.norm();
                triplets.push_back({value_of(i), std::move(u), std::move(v), resid_of(i)});
            }
            std::stable_sort(triplets.begin(), triplets.end(),
                             [&](const SingularTriplet& a, const SingularTriplet& b) {
                                 return largest ? a.value > b.value : a.value < b.value;
                             });
            return triplets;
        };

        const bool converged = convergence_check(stop_resid, a_norm_est, config.tol, config.k);
        const double score = stop_resid.maxCoeff() / a_norm_est;

        if (converged || cycle == config.maxit) {
            result.converged = converged;
            result.restarts_used = cycle;
            result.triplets = (converged || score <= best_score) ? assemble_current()
                                                                 : std::move(best_triplets);
            result.trace.push_back(std::move(rec));
            break;
        }
        if (score < best_score) {
            best_score = score;
            best_triplets = assemble_current();
        }

        ShiftSet shifts;
        switch (config.algorithm) {
            case Algorithm::Irlb:
                shifts = exact_shifts(rset, k_eff, config.sigma);
                break;
            case Algorithm::Irhlb:
                shifts = harmonic_shifts(hset, k_eff);
                break;
            default:
                if (all_refined_ok) {
                    try {
                        shifts = refined_harmonic_shifts(B, beta_m, refined);
                    } catch (const DegeneracyError&) {
                        shifts = harmonic_shifts(hset, k_eff);
                        rec.shift_fallback = true;
                    }
                } else {
                    shifts = harmonic_shifts(hset, k_eff);
                    rec.shift_fallback = true;
                }
                break;
        }

        const double rho_k = value_of(k - 1);
        const double eps_k = resid_of(k - 1);
        rec.filter_skipped = rho_k == 0.0;
        const ShiftSet filtered = adaptive_filter(shifts, rho_k, eps_k);

        rec.n_shifts = static_cast<int>(filtered.size());
        rec.shift_min = filtered.values.minCoeff();
        rec.shift_max = filtered.values.maxCoeff();
        rec.n_replaced_shifts = static_cast<int>(
            std::count(filtered.provenance.begin(), filtered.provenance.end(),
                       ShiftProvenance::ReplacedByMax));
        result.trace.push_back(std::move(rec));

        const SweepResult sweep = implicit_qr_sweep(B, filtered);
        truncate_and_restart(fact, sweep, k_eff, rng);
        bidiag_extend(A, fact, m, config.reorth, rng, &counters);
    }

    result.matvec_count = counters.matvec;
    result.matvec_transpose_count = counters.matvec_transpose;
    result.a_norm_est = a_norm_est;
    if (transposed) {
        std::swap(result.matvec_count, result.matvec_transpose_count);
        for (auto& t : result.triplets) std::swap(t.u, t.v);
    }
    return result;
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Irrhlb: return "irrhlb";
        case Algorithm::Irhlb: return "irhlb";
        default: return "irlb";
    }
}

std::string to_string(TargetEnd t) {
    return t == TargetEnd::Smallest ? "SS" : "LS";
}

} // namespace irrhlb
