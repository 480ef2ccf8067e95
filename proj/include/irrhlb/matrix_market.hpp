#ifndef IRRHLB_MATRIX_MARKET_HPP
#define IRRHLB_MATRIX_MARKET_HPP

#include <iosfwd>
#include <string>

#include "irrhlb/sparse_matrix.hpp"

namespace irrhlb {

/// Reads `matrix coordinate real {general|symmetric}`. Symmetric
/// off-diagonal entries are mirrored; 1-based indices become 0-based;
/// duplicates are summed. `pattern` and `complex` files are rejected.
SparseMatrix read_matrix_market(std::istream& in);
SparseMatrix read_matrix_market_file(const std::string& path);

/// Writes coordinate real general with 1-based indices.
void write_matrix_market(std::ostream& out, const SparseMatrix& A);

} // namespace irrhlb

#endif
