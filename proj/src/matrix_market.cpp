#include "irrhlb/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "irrhlb/errors.hpp"

namespace irrhlb {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

SparseMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty Matrix Market stream");

    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket")
        throw ParseError("missing %%MatrixMarket banner");
    if (lower(object) != "matrix" || lower(format) != "coordinate")
        throw ParseError("only 'matrix coordinate' files are supported");
    field = lower(field);
    symmetry = lower(symmetry);
    if (field != "real")
        throw ParseError("unsupported field '" + field + "' (only real)");
    const bool symmetric = symmetry == "symmetric";
    if (!symmetric && symmetry != "general")
        throw ParseError("unsupported symmetry '" + symmetry + "'");

    // comments, then the size line
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        break;
    }
    long long nrows = 0, ncols = 0, nnz = 0;
    if (std::sscanf(line.c_str(), "%lld %lld %lld", &nrows, &ncols, &nnz) != 3)
        throw ParseError("malformed size line: '" + line + "'");
    if (nrows <= 0 || ncols <= 0 || nnz < 0)
        throw ParseError("invalid matrix dimensions");

    std::vector<MatrixEntry> entries;
    entries.reserve(static_cast<std::size_t>(symmetric ? 2 * nnz : nnz));
    for (long long k = 0; k < nnz; ++k) {
        long long i = 0, j = 0;
        double v = 0.0;
        if (!(in >> i >> j >> v))
            throw ParseError("truncated entry list (expected " + std::to_string(nnz) +
                             " entries, got " + std::to_string(k) + ")");
        if (i < 1 || i > nrows || j < 1 || j > ncols)
            throw ParseError("entry index (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") out of bounds");
        if (!std::isfinite(v)) throw ParseError("non-finite entry value");
        entries.push_back({static_cast<Index>(i - 1), static_cast<Index>(j - 1), v});
        if (symmetric && i != j)
            entries.push_back({static_cast<Index>(j - 1), static_cast<Index>(i - 1), v});
    }
    return SparseMatrix::from_triplets(static_cast<Index>(nrows), static_cast<Index>(ncols),
                                       std::move(entries));
}

SparseMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseMatrix& A) {
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << A.rows() << " " << A.cols() << " " << A.nonzeros() << "\n";
    char buf[64];
    for (Index r = 0; r < A.rows(); ++r) {
        const Index end = A.row_offsets()[static_cast<std::size_t>(r) + 1];
        for (Index p = A.row_offsets()[static_cast<std::size_t>(r)]; p < end; ++p) {
            std::snprintf(buf, sizeof buf, "%.17g", A.values()[static_cast<std::size_t>(p)]);
            out << (r + 1) << " " << (A.col_indices()[static_cast<std::size_t>(p)] + 1) << " "
                << buf << "\n";
        }
    }
}

} // namespace irrhlb
