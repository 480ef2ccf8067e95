#include "irrhlb/extract.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "irrhlb/dense_kernels.hpp"
#include "irrhlb/errors.hpp"

namespace irrhlb {

HarmonicSet harmonic_extract(const BidiagonalMatrix& B, double beta_m) {
    const Index m = B.size();
    for (Index i = 0; i < m; ++i)
        if (B.diag(i) == 0.0)
            throw BreakdownError("harmonic_extract: singular B (alpha_" +
                                 std::to_string(i + 1) + " = 0)");

    // Half-sized problem: theta_i and s_i are the singular values and right
    // singular vectors of [B^T; beta_m e_m^T].
    DenseMatrix C = DenseMatrix::Zero(m + 1, m);
    C.topRows(m) = B.to_dense().transpose();
    C(m, m - 1) = beta_m;
    const SvdResult svd = dense_svd(C);

    HarmonicSet out;
    out.thetas = svd.singular_values;
    out.S = svd.right_vectors;
    out.W.resize(m, m);
    out.rhos.resize(m);
    out.residuals.resize(m);
    for (Index i = 0; i < m; ++i) {
        DenseVector w = out.thetas(i) * solve_upper_bidiag(B, out.S.col(i));
        out.W.col(i) = w / w.norm();
        const DenseVector Bw = B.apply(out.W.col(i));
        out.rhos(i) = out.S.col(i).dot(Bw);
        const double r1 = (Bw - out.rhos(i) * out.S.col(i)).norm();
        const double r2 = (B.apply_transpose(out.S.col(i)) - out.rhos(i) * out.W.col(i)).norm();
        const double tail = beta_m * out.S(m - 1, i);
        out.residuals(i) = std::sqrt(r1 * r1 + r2 * r2 + tail * tail);
    }
    return out;
}

RefinedSet refined_extract(const BidiagonalMatrix& B, double beta_m,
                           const DenseVector& rhos) {
    const Index m = B.size();
    const Index kp = rhos.size();
    const double split_floor = std::sqrt(std::numeric_limits<double>::epsilon());

    // (2m+1) x 2m residual matrix; only the shifted diagonals change with i.
    DenseMatrix M = DenseMatrix::Zero(2 * m + 1, 2 * m);
    M.topRightCorner(m, m) = B.to_dense();
    M.block(m, 0, m, m) = M.topRightCorner(m, m).transpose();
    M(2 * m, m - 1) = beta_m;

    RefinedSet out;
    out.X.resize(m, kp);
    out.Y.resize(m, kp);
    out.min_residuals.resize(kp);
    out.residuals.resize(kp);
    for (Index i = 0; i < kp; ++i) {
        const double rho = rhos(i);
        M.topLeftCorner(m, m).diagonal().setConstant(-rho);
        M.block(m, m, m, m).diagonal().setConstant(-rho);

        const SingularPair pair = smallest_singular_pair(M);
        const DenseVector x = pair.right_vector.head(m);
        const DenseVector y = pair.right_vector.tail(m);
        const double xn = x.norm(), yn = y.norm();
        if (xn < split_floor || yn < split_floor)
            throw DegeneracyError("refined_extract: minimizer has no left or right component");
        out.X.col(i) = x / xn;
        out.Y.col(i) = y / yn;
        out.min_residuals(i) = pair.sigma_min;

        const double r1 = (B.apply(out.Y.col(i)) - rho * out.X.col(i)).norm();
        const double r2 = (B.apply_transpose(out.X.col(i)) - rho * out.Y.col(i)).norm();
        const double tail = beta_m * out.X(m - 1, i);
        out.residuals(i) = std::sqrt(r1 * r1 + r2 * r2 + tail * tail);
    }
    return out;
}

RitzSet ritz_extract(const BidiagonalMatrix& B, double beta_m) {
    const Index m = B.size();
    const SvdResult svd = dense_svd(B.to_dense());
    RitzSet out;
    out.values = svd.singular_values;
    out.S = svd.left_vectors;
    out.W = svd.right_vectors;
    out.residuals = (beta_m * svd.left_vectors.row(m - 1)).cwiseAbs().transpose();
    return out;
}

std::pair<DenseVector, DenseVector> assemble_long_vectors(
    const DenseMatrix& P, const DenseMatrix& Q,
    const DenseVector& coeffs_left, const DenseVector& coeffs_right) {
    if (P.cols() != coeffs_left.size() || Q.cols() != coeffs_right.size())
        throw DimensionError("assemble_long_vectors: coefficient length mismatch");
    return {P * coeffs_left, Q * coeffs_right};
}

} // namespace irrhlb
