#ifndef IRRHLB_RESTART_HPP
#define IRRHLB_RESTART_HPP

#include <random>
#include <vector>

#include "irrhlb/bidiag.hpp"
#include "irrhlb/extract.hpp"
#include "irrhlb/types.hpp"

namespace irrhlb {

enum class ShiftProvenance { Harmonic, RefinedHarmonic, Exact, ReplacedByMax };

struct ShiftSet {
    DenseVector values;
    std::vector<ShiftProvenance> provenance;

    Index size() const { return values.size(); }
};

/// Accumulated result of l implicit Golub-Kahan QR steps on B: B_plus is
/// again upper bidiagonal with nonnegative entries, and
/// B_plus = P_tilde^T B Q_tilde with both accumulations orthogonal.
struct SweepResult {
    BidiagonalMatrix B_plus;
    DenseMatrix P_tilde;  // m x m
    DenseMatrix Q_tilde;  // m x m
};

/// One implicit QR step per shift mu (shift mu^2 on B^T B), realized as a
/// Givens bulge chase on B directly. Shifts are applied in descending
/// magnitude. The first rotation of each step comes from the 2-vector
/// (alpha_1^2 - mu^2, alpha_1 beta_1).
SweepResult implicit_qr_sweep(const BidiagonalMatrix& B, const ShiftSet& shifts);

/// No-op sweep (P_tilde = Q_tilde = I), the l = 0 passthrough.
SweepResult identity_sweep(Index m);

/// Truncates the swept factorization to k_eff steps. The new residual
/// direction is r = beta_m p~_{m,k} q_{m+1} + beta+_k q+_{k+1},
/// reorthogonalized against the kept Q columns.
void truncate_and_restart(BidiagFactorization& fact, const SweepResult& sweep,
                          Index k_eff, std::mt19937_64& rng);

/// The l = m - k_eff largest harmonic Ritz values.
ShiftSet harmonic_shifts(const HarmonicSet& hset, Index k_eff);

/// Refined harmonic shifts |xi_i| from the l x l pencil (F, G) built out of
/// the full QR decompositions of B^T X and B Y. Throws DegeneracyError when
/// G loses definiteness (callers fall back to harmonic shifts).
ShiftSet refined_harmonic_shifts(const BidiagonalMatrix& B, double beta_m,
                                 const RefinedSet& refined);

enum class TargetEnd { Smallest, Largest };

/// The l unwanted Ritz values: largest l when seeking the smallest
/// triplets, smallest l when seeking the largest.
ShiftSet exact_shifts(const RitzSet& rset, Index k_eff, TargetEnd which);

/// Replaces any shift with relgap = |((rho_k - eps_k) - mu)/rho_k| <= 1e-3
/// by the largest original shift. rho_k = 0 leaves the set untouched.
ShiftSet adaptive_filter(const ShiftSet& shifts, double rho_k, double eps_k);

} // namespace irrhlb

#endif
