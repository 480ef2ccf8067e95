#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "irrhlb/bidiag.hpp"
#include "irrhlb/dense_kernels.hpp"
#include "irrhlb/errors.hpp"
#include "irrhlb/generators.hpp"
#include "test_support.hpp"

using namespace irrhlb;
using namespace irrhlb::testing;

namespace {

SparseMatrix diag_matrix(std::initializer_list<double> d) {
    std::vector<MatrixEntry> entries;
    Index i = 0;
    for (double v : d) entries.push_back({i, i, v}), ++i;
    return SparseMatrix::from_triplets(i, i, std::move(entries));
}

} // namespace

TEST_CASE("bidiag_start: eigen-direction start on a diagonal matrix") {
    const SparseMatrix A = diag_matrix({2.0, 3.0});
    DenseVector q1(2);
    q1 << 1.0, 0.0;
    const BidiagFactorization f = bidiag_start(A, q1);
    CHECK(f.alphas(0) == 2.0);
    CHECK(f.betas(0) == 0.0);  // invariant direction: beta vanishes
    CHECK(f.breakdown_repairs == 1);
    CHECK((f.P.col(0) - q1).norm() == 0.0);
}

TEST_CASE("bidiag_start: mixed start, alpha is the image norm") {
    const SparseMatrix A = diag_matrix({2.0, 3.0});
    DenseVector q1(2);
    q1 << 1.0, 1.0;
    q1 /= std::sqrt(2.0);
    const BidiagFactorization f = bidiag_start(A, q1);
    CHECK(f.alphas(0) == doctest::Approx(std::sqrt(13.0 / 2.0)).epsilon(1e-15));
}

TEST_CASE("bidiag_start: input validation") {
    const SparseMatrix A = diag_matrix({2.0, 3.0});
    CHECK_THROWS_AS(bidiag_start(A, DenseVector::Zero(2)), std::invalid_argument);
    DenseVector long_q(3);
    long_q << 1, 0, 0;
    CHECK_THROWS_AS(bidiag_start(A, long_q), DimensionError);
    DenseVector big(2);
    big << 2.0, 0.0;
    CHECK_THROWS_AS(bidiag_start(A, big), std::invalid_argument);

    // a genuinely rank-deficient matrix exposes the null-space start
    const SparseMatrix R = SparseMatrix::from_triplets(2, 2, {{0, 0, 1.0}});
    DenseVector e2(2);
    e2 << 0.0, 1.0;
    CHECK_THROWS_AS(bidiag_start(R, e2), BreakdownError);
}

TEST_CASE("bidiag_extend: factorization identities on a random matrix") {
    std::mt19937_64 rng(31);
    const SparseMatrix A = random_sparse(30, 20, 17);
    const DenseVector q1 = random_unit_vector(20, rng);
    BidiagFactorization f = bidiag_start(A, q1);
    bidiag_extend(A, f, 10, ReorthMode::Both, rng);
    REQUIRE(f.steps() == 10);

    const auto res = factorization_residuals(A, f);
    CHECK(res.forward <= 1e-12 * f.anorm_est);
    CHECK(res.backward <= 1e-12 * f.anorm_est);
    CHECK(orthonormality_error(f.P) <= 1e-10);
    CHECK(orthonormality_error(f.Q) <= 1e-10);
    CHECK(f.alphas.minCoeff() > 0.0);
}

TEST_CASE("bidiag_extend: matvec counting") {
    std::mt19937_64 rng(32);
    const SparseMatrix A = random_sparse(30, 20, 18);
    OperatorCounters counters;
    BidiagFactorization f = bidiag_start(A, random_unit_vector(20, rng), &counters);
    bidiag_extend(A, f, 12, ReorthMode::Both, rng, &counters);
    CHECK(counters.matvec == 12);  // one product with A per step
    CHECK(counters.matvec_transpose == 12);
}

TEST_CASE("bidiag_extend: invariant subspace triggers breakdown handling") {
    const SparseMatrix A = diag_matrix({1.0, 2.0, 3.0, 4.0, 5.0});
    DenseVector q1 = DenseVector::Zero(5);
    q1(2) = 1.0;
    std::mt19937_64 rng(33);
    BidiagFactorization f = bidiag_start(A, q1);
    CHECK(f.breakdown_repairs >= 1);
    CHECK(f.betas(0) <= 1e-12);
    // the repaired direction lets the process continue
    bidiag_extend(A, f, 4, ReorthMode::Both, rng);
    CHECK(orthonormality_error(f.Q) <= 1e-10);
    const auto res = factorization_residuals(A, f);
    CHECK(res.backward <= 1e-9 * f.anorm_est);  // repaired columns are inexact
}

TEST_CASE("bidiag_extend: orthogonality audit at depth on clustered spectrum") {
    std::mt19937_64 rng(34);
    const SparseMatrix A = make_clustered_diag(1);
    BidiagFactorization f = bidiag_start(A, random_unit_vector(1000, rng));
    bidiag_extend(A, f, 20, ReorthMode::Both, rng);
    CHECK(orthonormality_error(f.Q) <= 1e-10);
    CHECK(orthonormality_error(f.P) <= 1e-10);
}

TEST_CASE("bidiag_extend: projected singular values interlace the matrix's") {
    std::mt19937_64 rng(35);
    const SparseMatrix A = random_sparse(40, 25, 19);
    BidiagFactorization f = bidiag_start(A, random_unit_vector(25, rng));
    bidiag_extend(A, f, 10, ReorthMode::Both, rng);

    const DenseVector ritz = dense_svd(f.projected().to_dense()).singular_values;
    const DenseVector sigma = jacobi_singular_values(A.to_dense());  // 25 values
    const Index N = 25, m = 10;
    for (Index i = 0; i < m; ++i) {
        CHECK(ritz(i) >= sigma(i) - 1e-10 * sigma(N - 1));
        CHECK(ritz(i) <= sigma(N - m + i) + 1e-10 * sigma(N - 1));
    }
}

TEST_CASE("bidiag_extend: q_only mode keeps the factorization identities") {
    std::mt19937_64 rng(36);
    const SparseMatrix A = random_sparse(200, 30, 20);
    BidiagFactorization f = bidiag_start(A, random_unit_vector(30, rng));
    bidiag_extend(A, f, 15, ReorthMode::QOnly, rng);
    const auto res = factorization_residuals(A, f);
    CHECK(res.forward <= 1e-11 * f.anorm_est);
    CHECK(res.backward <= 1e-11 * f.anorm_est);
    CHECK(orthonormality_error(f.Q) <= 1e-10);
}

TEST_CASE("bidiag_extend: argument validation") {
    std::mt19937_64 rng(37);
    const SparseMatrix A = random_sparse(30, 20, 21);
    BidiagFactorization f = bidiag_start(A, random_unit_vector(20, rng));
    CHECK_THROWS_AS(bidiag_extend(A, f, 1, ReorthMode::Both, rng), std::invalid_argument);
    CHECK_THROWS_AS(bidiag_extend(A, f, 21, ReorthMode::Both, rng), std::invalid_argument);
}
