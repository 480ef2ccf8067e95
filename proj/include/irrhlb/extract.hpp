#ifndef IRRHLB_EXTRACT_HPP
#define IRRHLB_EXTRACT_HPP

#include <utility>

#include "irrhlb/types.hpp"

namespace irrhlb {

/// Harmonic Ritz approximations of the projected problem. thetas come from
/// the SVD of the (m+1) x m matrix [B^T; beta_m e_m^T]; the w vectors from
/// the O(m) bidiagonal solves B w_i = theta_i s_i. Residuals use the
/// Rayleigh quotients rho_i, not theta_i.
struct HarmonicSet {
    DenseVector thetas;     // ascending, size m
    DenseMatrix S;          // m x m, unit columns  s~_i
    DenseMatrix W;          // m x m, unit columns  w~_i
    DenseVector rhos;       // rho_i = s~_i^T B w~_i
    DenseVector residuals;  // sqrt(|Bw-rho s|^2 + |B^T s-rho w|^2 + beta^2 s_m^2)
};

HarmonicSet harmonic_extract(const BidiagonalMatrix& B, double beta_m);

/// Refined harmonic approximations: per rho_i the smallest singular pair of
/// the (2m+1) x 2m residual matrix, split into x / y halves and
/// renormalized.
struct RefinedSet {
    DenseMatrix X;               // m x k', unit columns x^_i
    DenseMatrix Y;               // m x k', unit columns y^_i
    DenseVector min_residuals;   // sigma_min per triplet (joint minimizer)
    DenseVector residuals;       // split-normalized residual per triplet
};

RefinedSet refined_extract(const BidiagonalMatrix& B, double beta_m,
                           const DenseVector& rhos);

/// Ritz approximations: the SVD of B_m itself. The first two residual
/// terms vanish exactly, leaving beta_m |e_m^T s_i|.
struct RitzSet {
    DenseVector values;     // ascending
    DenseMatrix S;          // left coefficient vectors
    DenseMatrix W;          // right coefficient vectors
    DenseVector residuals;  // beta_m |e_m^T s_i|
};

RitzSet ritz_extract(const BidiagonalMatrix& B, double beta_m);

/// (u, v) = (P c_left, Q c_right) for unit coefficient vectors.
std::pair<DenseVector, DenseVector> assemble_long_vectors(
    const DenseMatrix& P, const DenseMatrix& Q,
    const DenseVector& coeffs_left, const DenseVector& coeffs_right);

} // namespace irrhlb

#endif
