#include "irrhlb/restart.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "internal.hpp"
#include "irrhlb/dense_kernels.hpp"
#include "irrhlb/errors.hpp"

namespace irrhlb {

namespace {

struct Rotation {
    double c;
    double s;
};

// (a, b) -> (r, 0) with r = hypot(a, b); the zero vector maps to identity.
Rotation make_rotation(double a, double b) {
    const double r = std::hypot(a, b);
    if (r == 0.0) return {1.0, 0.0};
    return {a / r, b / r};
}

// M <- M G with G = [[c, -s], [s, c]] acting on columns (j, j+1).
void rotate_columns(DenseMatrix& M, Index j, const Rotation& g) {
    for (Index i = 0; i < M.rows(); ++i) {
        const double a = M(i, j), b = M(i, j + 1);
        M(i, j) = g.c * a + g.s * b;
        M(i, j + 1) = -g.s * a + g.c * b;
    }
}

// Diagonal sign scalings making d > 0 and f >= 0, absorbed into the
// rotation accumulations.
void normalize_signs(DenseVector& d, DenseVector& f, DenseMatrix& Pt, DenseMatrix& Qt) {
    const Index m = d.size();
    double tcol = 1.0;
    for (Index i = 0; i < m; ++i) {
        const double srow = (d(i) >= 0.0 ? 1.0 : -1.0) * tcol;
        d(i) = std::abs(d(i));
        if (srow < 0.0) Pt.col(i) = -Pt.col(i);
        if (tcol < 0.0) Qt.col(i) = -Qt.col(i);
        if (i + 1 < m) {
            tcol = (srow * f(i) >= 0.0) ? 1.0 : -1.0;
            f(i) = std::abs(f(i));
        }
    }
}

} // namespace

SweepResult identity_sweep(Index m) {
    SweepResult out;
    out.B_plus.diag.resize(m);
    out.B_plus.super.resize(m - 1);
    out.P_tilde = DenseMatrix::Identity(m, m);
    out.Q_tilde = DenseMatrix::Identity(m, m);
    return out;
}

SweepResult implicit_qr_sweep(const BidiagonalMatrix& B, const ShiftSet& shifts) {
    const Index m = B.size();
    for (Index i = 0; i < shifts.size(); ++i)
        if (!std::isfinite(shifts.values(i)))
            throw std::invalid_argument("implicit_qr_sweep: non-finite shift");

    DenseVector d = B.diag;
    DenseVector f = B.super;
    DenseMatrix Pt = DenseMatrix::Identity(m, m);
    DenseMatrix Qt = DenseMatrix::Identity(m, m);

    std::vector<double> order(shifts.values.data(), shifts.values.data() + shifts.size());
    std::sort(order.begin(), order.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });

    for (const double mu : order) {
        if (m == 1) continue;  // a 1x1 step is the identity
        double x = d(0) * d(0) - mu * mu;
        double z = d(0) * f(0);
        double bulge = 0.0;
        for (Index k = 0; k + 1 < m; ++k) {
            // Right rotation kills z against x (the first one realizes the
            // leading column of B^T B - mu^2 I).
            Rotation g = make_rotation(x, z);
            if (k > 0) f(k - 1) = g.c * f(k - 1) + g.s * bulge;
            const double dk = d(k), fk = f(k), dk1 = d(k + 1);
            d(k) = g.c * dk + g.s * fk;
            f(k) = -g.s * dk + g.c * fk;
            bulge = g.s * dk1;
            d(k + 1) = g.c * dk1;
            rotate_columns(Qt, k, g);

            // Left rotation chases the bulge out of column k.
            g = make_rotation(d(k), bulge);
            d(k) = g.c * d(k) + g.s * bulge;
            const double fk2 = f(k), dk2 = d(k + 1);
            f(k) = g.c * fk2 + g.s * dk2;
            d(k + 1) = -g.s * fk2 + g.c * dk2;
            if (k + 2 < m) {
                const double fk1 = f(k + 1);
                bulge = g.s * fk1;
                f(k + 1) = g.c * fk1;
                x = f(k);
                z = bulge;
            }
            rotate_columns(Pt, k, g);
        }
    }

    normalize_signs(d, f, Pt, Qt);

    SweepResult out;
    out.B_plus.diag = d;
    out.B_plus.super = f;
    out.P_tilde = std::move(Pt);
    out.Q_tilde = std::move(Qt);
    return out;
}

void truncate_and_restart(BidiagFactorization& fact, const SweepResult& sweep,
                          Index k_eff, std::mt19937_64& rng) {
    const Index m = fact.steps();
    if (sweep.B_plus.size() != m)
        throw DimensionError("truncate_and_restart: sweep size mismatch");
    if (k_eff < 1 || k_eff >= m)
        throw std::invalid_argument("truncate_and_restart: need 1 <= k_eff < m");

    const double beta_m = fact.betas(m - 1);
    const DenseVector q_extra = fact.Q.col(m);

    DenseMatrix newP = fact.P * sweep.P_tilde.leftCols(k_eff);
    DenseMatrix newQ(fact.Q.rows(), k_eff + 1);
    newQ.leftCols(k_eff) = fact.Q.leftCols(m) * sweep.Q_tilde.leftCols(k_eff);

    // r = beta_m p~_{m,k} q_{m+1} + beta+_k q+_{k+1}; orthogonal to the kept
    // columns in exact arithmetic, cleaned up here before normalizing.
    DenseVector r = beta_m * sweep.P_tilde(m - 1, k_eff - 1) * q_extra +
                    sweep.B_plus.super(k_eff - 1) * (fact.Q.leftCols(m) * sweep.Q_tilde.col(k_eff));
    detail::reorthogonalize(r, newQ.leftCols(k_eff));
    const double beta_new = r.norm();
    if (beta_new < detail::kBreakdownScale * fact.anorm_est) {
        newQ.col(k_eff) =
            detail::random_direction_orthogonal_to(rng, newQ.leftCols(k_eff), fact.Q.rows());
        ++fact.breakdown_repairs;
    } else {
        newQ.col(k_eff) = r / beta_new;
    }

    fact.P = std::move(newP);
    fact.Q = std::move(newQ);
    fact.alphas = sweep.B_plus.diag.head(k_eff);
    DenseVector betas(k_eff);
    betas.head(k_eff - 1) = sweep.B_plus.super.head(k_eff - 1);
    betas(k_eff - 1) = beta_new;
    fact.betas = std::move(betas);
}

ShiftSet harmonic_shifts(const HarmonicSet& hset, Index k_eff) {
    const Index m = hset.thetas.size();
    if (k_eff < 0 || k_eff > m) throw std::invalid_argument("harmonic_shifts: bad k_eff");
    ShiftSet out;
    out.values = hset.thetas.tail(m - k_eff);
    out.provenance.assign(static_cast<std::size_t>(m - k_eff), ShiftProvenance::Harmonic);
    return out;
}

ShiftSet exact_shifts(const RitzSet& rset, Index k_eff, TargetEnd which) {
    const Index m = rset.values.size();
    if (k_eff < 0 || k_eff > m) throw std::invalid_argument("exact_shifts: bad k_eff");
    ShiftSet out;
    out.values = which == TargetEnd::Smallest ? rset.values.tail(m - k_eff).eval()
                                              : rset.values.head(m - k_eff).eval();
    out.provenance.assign(static_cast<std::size_t>(m - k_eff), ShiftProvenance::Exact);
    return out;
}

ShiftSet refined_harmonic_shifts(const BidiagonalMatrix& B, double beta_m,
                                 const RefinedSet& refined) {
    const Index m = B.size();
    const Index k = refined.X.cols();
    const Index l = m - k;
    if (l < 1) throw std::invalid_argument("refined_harmonic_shifts: no unwanted directions");

    DenseMatrix BtX(m, k), BY(m, k);
    for (Index j = 0; j < k; ++j) {
        BtX.col(j) = B.apply_transpose(refined.X.col(j));
        BY.col(j) = B.apply(refined.Y.col(j));
    }
    const QrFull qx = householder_qr_full(BtX);
    const QrFull qy = householder_qr_full(BY);
    const DenseMatrix QX2 = qx.Q.rightCols(l);
    const DenseMatrix QY2 = qy.Q.rightCols(l);

    DenseMatrix BQX2(m, l), BtQY2(m, l);
    for (Index j = 0; j < l; ++j) {
        BQX2.col(j) = B.apply(QX2.col(j));
        BtQY2.col(j) = B.apply_transpose(QY2.col(j));
    }

    const DenseMatrix C = QY2.transpose() * BQX2;
    const DenseMatrix F = C + C.transpose();

    // G is symmetric; assemble only its upper triangle from the products
    // already at hand.
    DenseMatrix G = DenseMatrix::Zero(l, l);
    G.selfadjointView<Eigen::Upper>().rankUpdate(BtQY2.transpose());
    G.selfadjointView<Eigen::Upper>().rankUpdate(BQX2.transpose());
    G.selfadjointView<Eigen::Upper>().rankUpdate(QY2.row(m - 1).transpose(), beta_m * beta_m);
    const DenseMatrix Gfull = G.selfadjointView<Eigen::Upper>();

    const GenEigResult eig = spd_generalized_eig(F, Gfull);  // eigenvalues 1/xi

    ShiftSet out;
    out.values.resize(l);
    for (Index i = 0; i < l; ++i) {
        const double lambda = eig.eigenvalues(i);
        if (lambda == 0.0 || !std::isfinite(1.0 / lambda))
            throw DegeneracyError("refined_harmonic_shifts: reciprocal eigenvalue overflow");
        out.values(i) = std::abs(1.0 / lambda);
    }
    std::sort(out.values.data(), out.values.data() + l);
    out.provenance.assign(static_cast<std::size_t>(l), ShiftProvenance::RefinedHarmonic);
    return out;
}

ShiftSet adaptive_filter(const ShiftSet& shifts, double rho_k, double eps_k) {
    if (shifts.size() == 0 || rho_k == 0.0) return shifts;
    ShiftSet out = shifts;
    const double target = rho_k - eps_k;  // the sigma_k estimate to protect
    const double mx = shifts.values.maxCoeff();
    for (Index i = 0; i < out.size(); ++i) {
        const double relgap = std::abs((target - shifts.values(i)) / rho_k);
        if (relgap <= 1e-3) {
            out.values(i) = mx;
            out.provenance[static_cast<std::size_t>(i)] = ShiftProvenance::ReplacedByMax;
        }
    }
    return out;
}

} // namespace irrhlb
