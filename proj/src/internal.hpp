#ifndef IRRHLB_SRC_INTERNAL_HPP
#define IRRHLB_SRC_INTERNAL_HPP

#include <cmath>
#include <limits>
#include <random>

#include "irrhlb/errors.hpp"
#include "irrhlb/types.hpp"

namespace irrhlb::detail {

// eps^(2/3): below this (times ||A||est) a new direction is treated as an
// invariant-subspace breakdown rather than genuine information.
inline const double kBreakdownScale =
    std::pow(std::numeric_limits<double>::epsilon(), 2.0 / 3.0);

// Classical Gram-Schmidt against the given columns, applied twice.
template <typename Block>
void reorthogonalize(DenseVector& v, const Block& basis) {
    if (basis.cols() == 0) return;
    for (int pass = 0; pass < 2; ++pass)
        v.noalias() -= basis * (basis.transpose() * v);
}

template <typename Block>
DenseVector random_direction_orthogonal_to(std::mt19937_64& rng, const Block& basis,
                                           Index n) {
    std::normal_distribution<double> normal;
    for (int attempt = 0; attempt < 64; ++attempt) {
        DenseVector v(n);
        for (Index i = 0; i < n; ++i) v(i) = normal(rng);
        reorthogonalize(v, basis);
        const double nrm = v.norm();
        if (nrm > 1e-8) return v / nrm;
    }
    throw BreakdownError("could not draw a direction outside the current basis");
}

} // namespace irrhlb::detail

#endif
