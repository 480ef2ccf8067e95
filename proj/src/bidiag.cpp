#include "irrhlb/bidiag.hpp"

#include <cmath>
#include <string>

#include "internal.hpp"
#include "irrhlb/dense_kernels.hpp"
#include "irrhlb/errors.hpp"

namespace irrhlb {

using detail::kBreakdownScale;
using detail::random_direction_orthogonal_to;
using detail::reorthogonalize;

BidiagFactorization bidiag_start(const SparseMatrix& A, const DenseVector& q1,
                                 OperatorCounters* counters) {
    if (q1.size() != A.cols())
        throw DimensionError("bidiag_start: q1 length " + std::to_string(q1.size()) +
                             " does not match ncols " + std::to_string(A.cols()));
    const double q1norm = q1.norm();
    if (q1norm == 0.0) throw std::invalid_argument("bidiag_start: zero starting vector");
    if (std::abs(q1norm - 1.0) > 1e-6)
        throw std::invalid_argument("bidiag_start: starting vector must have unit norm");

    BidiagFactorization fact;
    fact.Q.resize(A.cols(), 2);
    fact.Q.col(0) = q1;

    DenseVector p = A.multiply(q1);
    if (counters) ++counters->matvec;
    const double alpha = p.norm();
    if (alpha == 0.0)
        throw BreakdownError("bidiag_start: A q1 = 0 (starting vector in the null space)");
    p /= alpha;
    fact.P.resize(A.rows(), 1);
    fact.P.col(0) = p;
    fact.anorm_est = alpha;

    DenseVector r = A.multiply_transpose(p);
    if (counters) ++counters->matvec_transpose;
    r -= alpha * q1;
    reorthogonalize(r, fact.Q.leftCols(1));
    const double beta = r.norm();
    if (beta < kBreakdownScale * fact.anorm_est) {
        std::mt19937_64 repair_rng(0x9e3779b97f4a7c15ull);
        fact.Q.col(1) = random_direction_orthogonal_to(repair_rng, fact.Q.leftCols(1), A.cols());
        ++fact.breakdown_repairs;
    } else {
        fact.Q.col(1) = r / beta;
    }

    fact.alphas.resize(1);
    fact.betas.resize(1);
    fact.alphas(0) = alpha;
    fact.betas(0) = beta;
    return fact;
}

void bidiag_extend(const SparseMatrix& A, BidiagFactorization& fact, Index target_m,
                   ReorthMode mode, std::mt19937_64& rng, OperatorCounters* counters) {
    const Index j0 = fact.steps();
    if (target_m <= j0)
        throw std::invalid_argument("bidiag_extend: target_m must exceed the current step");
    if (target_m > std::min(A.rows(), A.cols()))
        throw std::invalid_argument("bidiag_extend: target_m exceeds min(M, N)");

    // Monotone sigma_max(B) estimate drives the breakdown threshold.
    {
        const SvdResult svd = dense_svd(fact.projected().to_dense());
        fact.anorm_est = std::max(fact.anorm_est, svd.singular_values(j0 - 1));
    }
    const double breakdown_tol = kBreakdownScale * fact.anorm_est;

    fact.P.conservativeResize(Eigen::NoChange, target_m);
    fact.Q.conservativeResize(Eigen::NoChange, target_m + 1);
    fact.alphas.conservativeResize(target_m);
    fact.betas.conservativeResize(target_m);

    for (Index j = j0; j < target_m; ++j) {
        DenseVector z = A.multiply(fact.Q.col(j));
        if (counters) ++counters->matvec;
        z -= fact.betas(j - 1) * fact.P.col(j - 1);
        if (mode == ReorthMode::Both) reorthogonalize(z, fact.P.leftCols(j));
        const double alpha = z.norm();
        if (alpha < breakdown_tol) {
            fact.P.col(j) = random_direction_orthogonal_to(rng, fact.P.leftCols(j), A.rows());
            ++fact.breakdown_repairs;
        } else {
            fact.P.col(j) = z / alpha;
        }
        fact.alphas(j) = alpha;

        DenseVector r = A.multiply_transpose(fact.P.col(j));
        if (counters) ++counters->matvec_transpose;
        r -= alpha * fact.Q.col(j);
        reorthogonalize(r, fact.Q.leftCols(j + 1));
        const double beta = r.norm();
        if (beta < breakdown_tol) {
            if (j + 1 >= A.cols()) {
                // the q basis spans the whole space; beta = 0 retires the
                // residual term and the extra column is never used
                fact.Q.col(j + 1).setZero();
            } else {
                fact.Q.col(j + 1) =
                    random_direction_orthogonal_to(rng, fact.Q.leftCols(j + 1), A.cols());
                ++fact.breakdown_repairs;
            }
        } else {
            fact.Q.col(j + 1) = r / beta;
        }
        fact.betas(j) = beta;
    }
}

} // namespace irrhlb
