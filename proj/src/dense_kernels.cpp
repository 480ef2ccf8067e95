#include "irrhlb/dense_kernels.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "irrhlb/errors.hpp"

namespace irrhlb {

namespace {

// Jacobi below this size for its accuracy on tiny problems, divide and
// conquer above for speed; the projected problems here stay under ~130.
constexpr Index kJacobiLimit = 32;

void check_finite(const DenseMatrix& C, const char* where) {
    if (!C.allFinite())
        throw std::invalid_argument(std::string(where) + ": non-finite input");
}

// Largest-magnitude entry of each right singular vector made positive
// (first index wins ties); the left vector flips with it.
void fix_signs(DenseMatrix& U, DenseMatrix& V) {
    for (Index j = 0; j < V.cols(); ++j) {
        Index imax = 0;
        double amax = -1.0;
        for (Index i = 0; i < V.rows(); ++i) {
            const double a = std::abs(V(i, j));
            if (a > amax) {
                amax = a;
                imax = i;
            }
        }
        if (V(imax, j) < 0.0) {
            V.col(j) = -V.col(j);
            if (j < U.cols()) U.col(j) = -U.col(j);
        }
    }
}

} // namespace

SvdResult dense_svd(const DenseMatrix& C) {
    if (C.rows() < 1 || C.cols() < 1)
        throw DimensionError("dense_svd: empty matrix");
    check_finite(C, "dense_svd");

    const Index n = std::min(C.rows(), C.cols());
    SvdResult out;
    DenseVector sv;
    DenseMatrix U, V;
    if (std::max(C.rows(), C.cols()) <= kJacobiLimit) {
        Eigen::JacobiSVD<DenseMatrix> svd(C, Eigen::ComputeThinU | Eigen::ComputeThinV);
        sv = svd.singularValues();
        U = svd.matrixU();
        V = svd.matrixV();
    } else {
        Eigen::BDCSVD<DenseMatrix> svd(C, Eigen::ComputeThinU | Eigen::ComputeThinV);
        sv = svd.singularValues();
        U = svd.matrixU();
        V = svd.matrixV();
    }

    // Eigen sorts descending; flip to ascending.
    out.singular_values.resize(n);
    out.left_vectors.resize(C.rows(), n);
    out.right_vectors.resize(C.cols(), n);
    for (Index j = 0; j < n; ++j) {
        out.singular_values(j) = sv(n - 1 - j);
        out.left_vectors.col(j) = U.col(n - 1 - j);
        out.right_vectors.col(j) = V.col(n - 1 - j);
    }
    fix_signs(out.left_vectors, out.right_vectors);
    return out;
}

DenseVector solve_upper_bidiag(const BidiagonalMatrix& B, const DenseVector& rhs) {
    const Index m = B.size();
    if (rhs.size() != m)
        throw DimensionError("solve_upper_bidiag: rhs length mismatch");
    DenseVector w(m);
    for (Index i = m - 1; i >= 0; --i) {
        if (B.diag(i) == 0.0)
            throw BreakdownError("solve_upper_bidiag: zero diagonal at " + std::to_string(i));
        double t = rhs(i);
        if (i + 1 < m) t -= B.super(i) * w(i + 1);
        w(i) = t / B.diag(i);
    }
    return w;
}

QrFull householder_qr_full(const DenseMatrix& C) {
    const Index m = C.rows(), k = C.cols();
    if (k > m) throw DimensionError("householder_qr_full: needs k <= m");
    check_finite(C, "householder_qr_full");
    Eigen::HouseholderQR<DenseMatrix> qr(C);
    QrFull out;
    out.Q = qr.householderQ() * DenseMatrix::Identity(m, m);
    out.R = DenseMatrix::Zero(m, k);
    out.R.topRows(k) = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    return out;
}

GenEigResult spd_generalized_eig(const DenseMatrix& F, const DenseMatrix& G) {
    if (F.rows() != F.cols() || G.rows() != G.cols() || F.rows() != G.rows())
        throw DimensionError("spd_generalized_eig: shape mismatch");
    check_finite(F, "spd_generalized_eig");
    check_finite(G, "spd_generalized_eig");

    Eigen::LLT<DenseMatrix> llt(G);
    if (llt.info() != Eigen::Success)
        throw DegeneracyError("spd_generalized_eig: G is not positive definite");
    const DenseMatrix L = llt.matrixL();

    // L^-1 F L^-T, then the standard symmetric problem.
    DenseMatrix T = L.triangularView<Eigen::Lower>().solve(F);
    T = L.triangularView<Eigen::Lower>().solve(T.transpose()).transpose();
    T = 0.5 * (T + T.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(T);
    if (es.info() != Eigen::Success)
        throw DegeneracyError("spd_generalized_eig: eigensolver failed");

    GenEigResult out;
    out.eigenvalues = es.eigenvalues();  // ascending
    out.eigenvectors = L.transpose().triangularView<Eigen::Upper>().solve(es.eigenvectors());
    return out;
}

SingularPair smallest_singular_pair(const DenseMatrix& C) {
    if (C.rows() < C.cols())
        throw DimensionError("smallest_singular_pair: needs rows >= cols");
    const SvdResult svd = dense_svd(C);
    return {svd.singular_values(0), svd.right_vectors.col(0)};
}

} // namespace irrhlb
