#include "irrhlb/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "irrhlb/errors.hpp"

namespace irrhlb {

SparseMatrix SparseMatrix::from_triplets(Index nrows, Index ncols,
                                         std::vector<MatrixEntry> entries) {
    if (nrows < 0 || ncols < 0)
        throw DimensionError("matrix dimensions must be nonnegative");
    for (const auto& e : entries) {
        if (e.row < 0 || e.row >= nrows || e.col < 0 || e.col >= ncols)
            throw DimensionError("entry (" + std::to_string(e.row) + ", " +
                                 std::to_string(e.col) + ") outside " +
                                 std::to_string(nrows) + "x" + std::to_string(ncols));
        if (!std::isfinite(e.value))
            throw std::invalid_argument("non-finite matrix entry");
    }

    std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix A;
    A.nrows_ = nrows;
    A.ncols_ = ncols;
    A.row_offsets_.assign(static_cast<std::size_t>(nrows) + 1, 0);
    A.col_indices_.reserve(entries.size());
    A.values_.reserve(entries.size());

    for (std::size_t i = 0; i < entries.size();) {
        const Index r = entries[i].row;
        const Index c = entries[i].col;
        double sum = 0.0;
        while (i < entries.size() && entries[i].row == r && entries[i].col == c)
            sum += entries[i++].value;  // coordinate duplicates accumulate
        A.col_indices_.push_back(c);
        A.values_.push_back(sum);
        ++A.row_offsets_[static_cast<std::size_t>(r) + 1];
    }
    for (Index r = 0; r < nrows; ++r)
        A.row_offsets_[static_cast<std::size_t>(r) + 1] += A.row_offsets_[static_cast<std::size_t>(r)];
    return A;
}

DenseVector SparseMatrix::multiply(const DenseVector& x) const {
    if (x.size() != ncols_)
        throw DimensionError("matvec: x has length " + std::to_string(x.size()) +
                             ", expected " + std::to_string(ncols_));
    DenseVector y = DenseVector::Zero(nrows_);
    for (Index r = 0; r < nrows_; ++r) {
        double acc = 0.0;
        const Index end = row_offsets_[static_cast<std::size_t>(r) + 1];
        for (Index p = row_offsets_[static_cast<std::size_t>(r)]; p < end; ++p)
            acc += values_[static_cast<std::size_t>(p)] * x(col_indices_[static_cast<std::size_t>(p)]);
        y(r) = acc;
    }
    return y;
}

DenseVector SparseMatrix::multiply_transpose(const DenseVector& x) const {
    if (x.size() != nrows_)
        throw DimensionError("matvec_transpose: x has length " + std::to_string(x.size()) +
                             ", expected " + std::to_string(nrows_));
    DenseVector y = DenseVector::Zero(ncols_);
    for (Index r = 0; r < nrows_; ++r) {
        const double xr = x(r);
        if (xr == 0.0) continue;
        const Index end = row_offsets_[static_cast<std::size_t>(r) + 1];
        for (Index p = row_offsets_[static_cast<std::size_t>(r)]; p < end; ++p)
            y(col_indices_[static_cast<std::size_t>(p)]) += values_[static_cast<std::size_t>(p)] * xr;
    }
    return y;
}

SparseMatrix SparseMatrix::transposed() const {
    std::vector<MatrixEntry> entries;
    entries.reserve(values_.size());
    for (Index r = 0; r < nrows_; ++r) {
        const Index end = row_offsets_[static_cast<std::size_t>(r) + 1];
        for (Index p = row_offsets_[static_cast<std::size_t>(r)]; p < end; ++p)
            entries.push_back({col_indices_[static_cast<std::size_t>(p)], r,
                               values_[static_cast<std::size_t>(p)]});
    }
    return from_triplets(ncols_, nrows_, std::move(entries));
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix D = DenseMatrix::Zero(nrows_, ncols_);
    for (Index r = 0; r < nrows_; ++r) {
        const Index end = row_offsets_[static_cast<std::size_t>(r) + 1];
        for (Index p = row_offsets_[static_cast<std::size_t>(r)]; p < end; ++p)
            D(r, col_indices_[static_cast<std::size_t>(p)]) += values_[static_cast<std::size_t>(p)];
    }
    return D;
}

DenseVector matvec(const SparseMatrix& A, const DenseVector& x) { return A.multiply(x); }

DenseVector matvec_transpose(const SparseMatrix& A, const DenseVector& x) {
    return A.multiply_transpose(x);
}

} // namespace irrhlb
