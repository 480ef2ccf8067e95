#include "irrhlb/generators.hpp"

#include <cmath>
#include <string>

#include "irrhlb/errors.hpp"

namespace irrhlb {

namespace {

constexpr Index kOrder = 1000;

SparseMatrix diagonal_matrix(const std::vector<double>& d) {
    std::vector<MatrixEntry> entries;
    entries.reserve(d.size());
    for (Index i = 0; i < static_cast<Index>(d.size()); ++i)
        entries.push_back({i, i, d[static_cast<std::size_t>(i)]});
    return SparseMatrix::from_triplets(kOrder, kOrder, std::move(entries));
}

} // namespace

SparseMatrix make_clustered_diag(int s) {
    if (s < 1 || s > 4)
        throw std::invalid_argument("make_clustered_diag: s must be in 1..4, got " +
                                    std::to_string(s));
    // Ten clustered values then 2, 3, ...; the candidate list is longer than
    // the order, so it is truncated to the first 1000 entries (max 991).
    std::vector<double> d;
    d.reserve(kOrder);
    const double step = std::pow(10.0, -s);
    for (int i = 0; i < 10; ++i) d.push_back(1.0 + i * step);
    for (int v = 2; static_cast<Index>(d.size()) < kOrder; ++v) d.push_back(v);
    return diagonal_matrix(d);
}

SparseMatrix make_illcond_diag(int s) {
    if (s < 1)
        throw std::invalid_argument("make_illcond_diag: s must be >= 1, got " +
                                    std::to_string(s));
    const double top = std::pow(10.0, s);
    std::vector<double> d(kOrder);
    for (Index i = 0; i < kOrder; ++i)
        d[static_cast<std::size_t>(i)] = 1.0 + static_cast<double>(i) * (top - 1.0) / (kOrder - 1);
    d.back() = top;  // hit the endpoint exactly
    return diagonal_matrix(d);
}

} // namespace irrhlb
