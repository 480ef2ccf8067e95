#ifndef IRRHLB_SPARSE_MATRIX_HPP
#define IRRHLB_SPARSE_MATRIX_HPP

#include <vector>

#include "irrhlb/types.hpp"

namespace irrhlb {

struct MatrixEntry {
    Index row;
    Index col;
    double value;
};

/// Immutable sparse matrix in compressed-row form. The matrix is touched
/// only through products with A and A^T; transposed products run a
/// column-scatter pass over the same storage instead of keeping a second
/// copy.
class SparseMatrix {
public:
    SparseMatrix() = default;

    /// Assembles from coordinate entries. Duplicate (row, col) pairs are
    /// summed. Throws DimensionError on out-of-range indices and
    /// std::invalid_argument on non-finite values.
    static SparseMatrix from_triplets(Index nrows, Index ncols,
                                      std::vector<MatrixEntry> entries);

    Index rows() const { return nrows_; }
    Index cols() const { return ncols_; }
    Index nonzeros() const { return static_cast<Index>(values_.size()); }

    /// y = A x
    DenseVector multiply(const DenseVector& x) const;
    /// y = A^T x
    DenseVector multiply_transpose(const DenseVector& x) const;

    SparseMatrix transposed() const;
    DenseMatrix to_dense() const;

    const std::vector<Index>& row_offsets() const { return row_offsets_; }
    const std::vector<Index>& col_indices() const { return col_indices_; }
    const std::vector<double>& values() const { return values_; }

private:
    Index nrows_ = 0;
    Index ncols_ = 0;
    std::vector<Index> row_offsets_;  // size nrows+1
    std::vector<Index> col_indices_;
    std::vector<double> values_;
};

DenseVector matvec(const SparseMatrix& A, const DenseVector& x);
DenseVector matvec_transpose(const SparseMatrix& A, const DenseVector& x);

} // namespace irrhlb

#endif
