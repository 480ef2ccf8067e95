#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <random>

#include "irrhlb/dense_kernels.hpp"
#include "irrhlb/errors.hpp"
#include "test_support.hpp"

using namespace irrhlb;
using namespace irrhlb::testing;

namespace {
const double eps = std::numeric_limits<double>::epsilon();
}

TEST_CASE("dense_svd: diagonal values come back ascending") {
    DenseMatrix C = DenseMatrix::Zero(3, 3);
    C(0, 0) = 3.0;
    C(1, 1) = 1.0;
    C(2, 2) = 2.0;
    const SvdResult svd = dense_svd(C);
    CHECK(svd.singular_values(0) == doctest::Approx(1.0));
    CHECK(svd.singular_values(1) == doctest::Approx(2.0));
    CHECK(svd.singular_values(2) == doctest::Approx(3.0));
}

TEST_CASE("dense_svd: 2x1 column norm") {
    DenseMatrix C(2, 1);
    C << 3.0, 4.0;
    CHECK(dense_svd(C).singular_values(0) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("dense_svd: values match the Gram-matrix eigensolver oracle") {
    std::mt19937_64 rng(21);
    const DenseMatrix C = random_matrix(11, 10, rng);
    const SvdResult svd = dense_svd(C);
    const DenseVector oracle = gram_singular_values(C);
    for (Index i = 0; i < 10; ++i)
        CHECK(svd.singular_values(i) ==
              doctest::Approx(oracle(i)).epsilon(1e-12));
}

TEST_CASE("dense_svd: reconstruction, orthonormality, sign convention") {
    std::mt19937_64 rng(22);
    for (const auto [r, c] : {std::pair<Index, Index>{9, 6}, {40, 37}, {6, 6}}) {
        const DenseMatrix C = random_matrix(r, c, rng);
        const SvdResult svd = dense_svd(C);
        const Index n = std::min(r, c);
        const double tol_svd = 100.0 * eps * static_cast<double>(std::max(r, c));
        const DenseMatrix R = svd.left_vectors * svd.singular_values.asDiagonal() *
                              svd.right_vectors.transpose();
        CHECK((C - R).norm() <= tol_svd * C.norm());
        CHECK(orthonormality_error(svd.left_vectors) <= 10 * eps * std::max(r, c));
        CHECK(orthonormality_error(svd.right_vectors) <= 10 * eps * std::max(r, c));
        for (Index j = 0; j < n; ++j) {
            CHECK((C * svd.right_vectors.col(j) -
                   svd.singular_values(j) * svd.left_vectors.col(j))
                      .norm() <= 10 * eps * C.norm() * 10);
            Index imax = 0;
            svd.right_vectors.col(j).cwiseAbs().maxCoeff(&imax);
            CHECK(svd.right_vectors(imax, j) > 0.0);
        }
    }
}

TEST_CASE("dense_svd: rejects non-finite input") {
    DenseMatrix C = DenseMatrix::Zero(2, 2);
    C(1, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(dense_svd(C), std::invalid_argument);
}

TEST_CASE("solve_upper_bidiag: hand cases") {
    BidiagonalMatrix B;
    B.diag.resize(2);
    B.super.resize(1);
    B.diag << 2.0, 4.0;
    B.super << 0.0;
    DenseVector rhs(2);
    rhs << 2.0, 4.0;
    DenseVector w = solve_upper_bidiag(B, rhs);
    CHECK(w(0) == 1.0);
    CHECK(w(1) == 1.0);

    B.diag << 1.0, 1.0;
    B.super << 1.0;
    rhs << 2.0, 1.0;
    w = solve_upper_bidiag(B, rhs);
    CHECK(w(0) == 1.0);
    CHECK(w(1) == 1.0);
}

TEST_CASE("solve_upper_bidiag: random residual and breakdown") {
    std::mt19937_64 rng(23);
    const BidiagonalMatrix B = random_bidiagonal(10, rng);
    const DenseVector rhs = random_vector(10, rng);
    const DenseVector w = solve_upper_bidiag(B, rhs);
    CHECK((B.apply(w) - rhs).norm() <= 1e-13 * rhs.norm());

    BidiagonalMatrix Z = B;
    Z.diag(4) = 0.0;
    CHECK_THROWS_AS(solve_upper_bidiag(Z, rhs), BreakdownError);
}

TEST_CASE("householder_qr_full: complement of e1") {
    DenseMatrix C = DenseMatrix::Zero(3, 1);
    C(0, 0) = 1.0;
    const QrFull qr = householder_qr_full(C);
    CHECK(std::abs(qr.Q.col(1).dot(C.col(0))) <= 1e-15);
    CHECK(std::abs(qr.Q.col(2).dot(C.col(0))) <= 1e-15);
}

TEST_CASE("householder_qr_full: orthonormal input gives R = I up to signs") {
    std::mt19937_64 rng(24);
    const QrFull base = householder_qr_full(random_matrix(4, 2, rng));
    const DenseMatrix C = base.Q.leftCols(2);  // orthonormal 4x2
    const QrFull qr = householder_qr_full(C);
    CHECK(std::abs(std::abs(qr.R(0, 0)) - 1.0) <= 1e-14);
    CHECK(std::abs(std::abs(qr.R(1, 1)) - 1.0) <= 1e-14);
    CHECK(std::abs(qr.R(0, 1)) <= 1e-14);
}

TEST_CASE("householder_qr_full: reconstruction and full orthogonality") {
    std::mt19937_64 rng(25);
    const DenseMatrix C = random_matrix(12, 5, rng);
    const QrFull qr = householder_qr_full(C);
    CHECK(orthonormality_error(qr.Q) <= 1e-13);
    CHECK((C - qr.Q * qr.R).norm() <= 1e-13 * C.norm());
    // the trailing columns span the orthogonal complement of range(C)
    CHECK((qr.Q.rightCols(7).transpose() * C).norm() <= 1e-13 * C.norm());
}

TEST_CASE("householder_qr_full: rank-deficient input is permitted") {
    std::mt19937_64 rng(26);
    DenseMatrix C = random_matrix(8, 3, rng);
    C.col(2) = C.col(0) + C.col(1);
    const QrFull qr = householder_qr_full(C);
    CHECK((C - qr.Q * qr.R).norm() <= 1e-13 * C.norm());
}

TEST_CASE("spd_generalized_eig: diagonal cases") {
    DenseMatrix F = DenseMatrix::Zero(2, 2), G = DenseMatrix::Identity(2, 2);
    F(0, 0) = 2.0;
    F(1, 1) = 6.0;
    GenEigResult eig = spd_generalized_eig(F, G);
    CHECK(eig.eigenvalues(0) == doctest::Approx(2.0));
    CHECK(eig.eigenvalues(1) == doctest::Approx(6.0));

    G = 2.0 * DenseMatrix::Identity(2, 2);
    eig = spd_generalized_eig(F, G);
    CHECK(eig.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(eig.eigenvalues(1) == doctest::Approx(3.0));
}

TEST_CASE("spd_generalized_eig: residuals on a random SPD pair") {
    std::mt19937_64 rng(27);
    const DenseMatrix Fb = random_matrix(8, 8, rng);
    const DenseMatrix F = Fb + Fb.transpose();
    const DenseMatrix Gb = random_matrix(8, 8, rng);
    const DenseMatrix G =
        Gb * Gb.transpose() + 0.5 * DenseMatrix::Identity(8, 8);
    const GenEigResult eig = spd_generalized_eig(F, G);
    for (Index i = 0; i < 8; ++i) {
        const double lambda = eig.eigenvalues(i);
        const DenseVector g = eig.eigenvectors.col(i);
        CHECK((F * g - lambda * G * g).norm() <=
              1e-12 * (F.norm() + std::abs(lambda) * G.norm()));
    }
}

TEST_CASE("spd_generalized_eig: G = I reduces to the symmetric eigenproblem") {
    std::mt19937_64 rng(28);
    const DenseMatrix Fb = random_matrix(6, 6, rng);
    const DenseMatrix F = Fb + Fb.transpose();
    const GenEigResult eig = spd_generalized_eig(F, DenseMatrix::Identity(6, 6));
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(F);
    CHECK((eig.eigenvalues - es.eigenvalues()).cwiseAbs().maxCoeff() <=
          1e-12 * F.norm());
}

TEST_CASE("spd_generalized_eig: indefinite G is a degeneracy") {
    DenseMatrix F = DenseMatrix::Identity(2, 2);
    DenseMatrix G = DenseMatrix::Identity(2, 2);
    G(1, 1) = -1.0;
    CHECK_THROWS_AS(spd_generalized_eig(F, G), DegeneracyError);
}

TEST_CASE("smallest_singular_pair: padded diagonal and zero column") {
    DenseMatrix C = DenseMatrix::Zero(4, 3);
    C(0, 0) = 5.0;
    C(1, 1) = 2.0;
    C(2, 2) = 9.0;
    const SingularPair p = smallest_singular_pair(C);
    CHECK(p.sigma_min == doctest::Approx(2.0));
    CHECK(std::abs(p.right_vector(1)) == doctest::Approx(1.0));

    C.col(1).setZero();
    const SingularPair z = smallest_singular_pair(C);
    CHECK(z.sigma_min == doctest::Approx(0.0));
    CHECK(std::abs(z.right_vector(1)) == doctest::Approx(1.0));
}

TEST_CASE("smallest_singular_pair: agrees bit-for-bit with dense_svd") {
    std::mt19937_64 rng(29);
    const DenseMatrix C = random_matrix(21, 20, rng);
    const SingularPair p = smallest_singular_pair(C);
    const SvdResult svd = dense_svd(C);
    CHECK(p.sigma_min == svd.singular_values(0));
    CHECK((p.right_vector - svd.right_vectors.col(0)).norm() == 0.0);
    CHECK_THROWS_AS(smallest_singular_pair(DenseMatrix::Zero(2, 3)), DimensionError);
}
