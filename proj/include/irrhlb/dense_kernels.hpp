#ifndef IRRHLB_DENSE_KERNELS_HPP
#define IRRHLB_DENSE_KERNELS_HPP

#include "irrhlb/types.hpp"

namespace irrhlb {

/// Thin SVD with singular values ascending. Sign convention: the
/// largest-magnitude entry of each right singular vector is positive
/// (first index wins ties); left vectors are flipped along with it.
struct SvdResult {
    DenseVector singular_values;  // ascending, size min(rows, cols)
    DenseMatrix left_vectors;     // rows x min
    DenseMatrix right_vectors;    // cols x min
};

SvdResult dense_svd(const DenseMatrix& C);

/// Back substitution with B upper bidiagonal, O(m). Throws BreakdownError
/// on a zero diagonal entry.
DenseVector solve_upper_bidiag(const BidiagonalMatrix& B, const DenseVector& rhs);

/// Full Householder QR of an m x k matrix, k <= m: C = Q [R; 0] with Q
/// m x m. Columns k+1..m of Q span the orthogonal complement of range(C).
/// Rank-deficient input is permitted.
struct QrFull {
    DenseMatrix Q;  // m x m
    DenseMatrix R;  // m x k upper triangular
};

QrFull householder_qr_full(const DenseMatrix& C);

/// All eigenpairs of F g = lambda G g with F symmetric and G symmetric
/// positive definite, via Cholesky reduction G = L L^T. Eigenvalues
/// ascending. Throws DegeneracyError when the Cholesky fails.
struct GenEigResult {
    DenseVector eigenvalues;
    DenseMatrix eigenvectors;  // columns g_i
};

GenEigResult spd_generalized_eig(const DenseMatrix& F, const DenseMatrix& G);

/// Smallest singular value and its right singular vector; requires
/// rows >= cols. Shares the dense_svd code path, so sigma_min equals
/// dense_svd(C).singular_values[0] bit for bit.
struct SingularPair {
    double sigma_min;
    DenseVector right_vector;
};

SingularPair smallest_singular_pair(const DenseMatrix& C);

} // namespace irrhlb

#endif
