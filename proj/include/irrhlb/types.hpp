#ifndef IRRHLB_TYPES_HPP
#define IRRHLB_TYPES_HPP

#include <Eigen/Dense>

namespace irrhlb {

using Index = Eigen::Index;
using DenseVector = Eigen::VectorXd;
using DenseMatrix = Eigen::MatrixXd;

/// Square upper bidiagonal matrix, stored as its diagonal and superdiagonal.
struct BidiagonalMatrix {
    DenseVector diag;   // size m
    DenseVector super;  // size m-1

    Index size() const { return diag.size(); }

    DenseMatrix to_dense() const {
        const Index m = size();
        DenseMatrix B = DenseMatrix::Zero(m, m);
        B.diagonal() = diag;
        if (m > 1) B.diagonal(1) = super;
        return B;
    }

    /// y = B x
    DenseVector apply(const DenseVector& x) const {
        const Index m = size();
        DenseVector y = diag.cwiseProduct(x);
        for (Index i = 0; i + 1 < m; ++i) y(i) += super(i) * x(i + 1);
        return y;
    }

    /// y = B^T x
    DenseVector apply_transpose(const DenseVector& x) const {
        const Index m = size();
        DenseVector y = diag.cwiseProduct(x);
        for (Index i = 1; i < m; ++i) y(i) += super(i - 1) * x(i - 1);
        return y;
    }
};

} // namespace irrhlb

#endif
