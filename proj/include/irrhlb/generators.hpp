#ifndef IRRHLB_GENERATORS_HPP
#define IRRHLB_GENERATORS_HPP

#include "irrhlb/sparse_matrix.hpp"

namespace irrhlb {

/// 1000x1000 diagonal matrix whose ten smallest diagonal entries are
/// 1, 1+10^-s, ..., 1+9*10^-s followed by 2, 3, ..., 991. The smallest
/// singular value is exactly 1 and the condition number 991 for every s.
/// Requires 1 <= s <= 4.
SparseMatrix make_clustered_diag(int s);

/// 1000x1000 diagonal matrix with diagonal linspace(1, 10^s, 1000); the
/// endpoint is hit exactly, so kappa = 10^s. Requires s >= 1.
SparseMatrix make_illcond_diag(int s);

} // namespace irrhlb

#endif
