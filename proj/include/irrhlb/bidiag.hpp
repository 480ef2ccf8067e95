#ifndef IRRHLB_BIDIAG_HPP
#define IRRHLB_BIDIAG_HPP

#include <random>

#include "irrhlb/sparse_matrix.hpp"
#include "irrhlb/types.hpp"

namespace irrhlb {

enum class ReorthMode { Both, QOnly };

struct OperatorCounters {
    long long matvec = 0;
    long long matvec_transpose = 0;
};

/// Partial Lanczos bidiagonalization A Q_j = P_j B_j,
/// A^T P_j = Q_j B_j^T + beta_j q_{j+1} e_j^T, kept orthonormal by
/// classical Gram-Schmidt applied twice per new vector.
///
/// After j steps P has j columns, Q has j+1, and betas(j-1) couples the
/// residual direction q_{j+1}.
struct BidiagFactorization {
    DenseMatrix P;        // M x j
    DenseMatrix Q;        // N x (j+1)
    DenseVector alphas;   // j, positive away from breakdowns
    DenseVector betas;    // j, nonnegative

    double anorm_est = 0.0;     // monotone estimate of sigma_max(A)
    int breakdown_repairs = 0;  // replaced directions so far

    Index steps() const { return alphas.size(); }
    double beta_last() const { return betas(betas.size() - 1); }

    /// B_j as a compact bidiagonal (diag = alphas, super = betas 1..j-1).
    BidiagonalMatrix projected() const {
        BidiagonalMatrix B;
        B.diag = alphas;
        B.super = betas.head(steps() - 1);
        return B;
    }
};

/// One-step factorization from a unit starting vector. Throws
/// std::invalid_argument for a non-unit q1 and BreakdownError when
/// A q1 = 0.
BidiagFactorization bidiag_start(const SparseMatrix& A, const DenseVector& q1,
                                 OperatorCounters* counters = nullptr);

/// Extends the factorization to target_m steps. A vanishing alpha or beta
/// (below eps^(2/3) * anorm_est) is repaired by a random unit direction
/// orthogonalized against the current basis, keeping the tiny coefficient;
/// the repair is counted on the factorization.
void bidiag_extend(const SparseMatrix& A, BidiagFactorization& fact, Index target_m,
                   ReorthMode mode, std::mt19937_64& rng,
                   OperatorCounters* counters = nullptr);

} // namespace irrhlb

#endif
