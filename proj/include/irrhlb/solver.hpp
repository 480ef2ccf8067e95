#ifndef IRRHLB_SOLVER_HPP
#define IRRHLB_SOLVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "irrhlb/bidiag.hpp"
#include "irrhlb/restart.hpp"
#include "irrhlb/sparse_matrix.hpp"

namespace irrhlb {

enum class Algorithm { Irrhlb, Irhlb, Irlb };

struct SolverConfig {
    int k = 6;             // desired triplets
    int adjust = 3;        // extra retained approximations
    int m = 20;            // bidiagonalization steps per cycle
    int maxit = 300;       // restart cap
    double tol = 1e-6;     // relative residual tolerance
    TargetEnd sigma = TargetEnd::Smallest;
    std::uint64_t seed = 42;
    Algorithm algorithm = Algorithm::Irrhlb;
    ReorthMode reorth = ReorthMode::Both;
};

struct SingularTriplet {
    double value;
    DenseVector u;
    DenseVector v;
    double residual;
};

struct TraceRecord {
    int restart = 0;
    std::vector<double> rhos;       // first k approximations
    std::vector<double> residuals;  // their residual norms
    double shift_min = 0.0;         // of the shifts chosen at cycle end
    double shift_max = 0.0;
    int n_shifts = 0;               // 0 on the final record
    int n_replaced_shifts = 0;
    double a_norm_est = 0.0;
    bool breakdown = false;           // a repair happened while extending
    bool shift_fallback = false;      // refined shifts degenerated to harmonic
    bool filter_skipped = false;      // rho_k = 0, adaptive rule not applied
    bool refined_degenerate = false;  // some refined split collapsed this cycle
};

struct SolverResult {
    std::vector<SingularTriplet> triplets;
    bool converged = false;
    int restarts_used = 0;
    long long matvec_count = 0;
    long long matvec_transpose_count = 0;
    double a_norm_est = 0.0;
    std::vector<TraceRecord> trace;  // one record per cycle, initial included
};

/// true iff max residuals[0..k) / a_norm_est < tol.
bool convergence_check(const DenseVector& residuals, double a_norm_est,
                       double tol, int k);

/// Restarted solve for the k smallest (or, with Ritz extraction, largest)
/// singular triplets of A. Wide matrices are transposed internally and the
/// returned u/v swapped back.
SolverResult solve(const SparseMatrix& A, const SolverConfig& config);

std::string to_string(Algorithm a);
std::string to_string(TargetEnd t);

} // namespace irrhlb

#endif
