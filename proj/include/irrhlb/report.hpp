#ifndef IRRHLB_REPORT_HPP
#define IRRHLB_REPORT_HPP

#include <iosfwd>
#include <string>

#include "irrhlb/solver.hpp"

namespace irrhlb {

/// Per-restart convergence table, one row per (restart, triplet_index).
/// Header: restart,triplet_index,rho,residual,shift_min,shift_max,
/// n_replaced_shifts,a_norm_est,flags. Shift columns are empty on the
/// final record. Doubles print as %.17g, so identical runs produce
/// identical bytes.
void write_trace_csv(std::ostream& out, const SolverResult& result);

struct MatrixSourceInfo {
    std::string source;  // file path or generator spec
    Index rows = 0;
    Index cols = 0;
    Index nonzeros = 0;
};

void write_summary_json(std::ostream& out, const SolverResult& result,
                        const SolverConfig& config, const MatrixSourceInfo& info,
                        bool emit_vectors);

} // namespace irrhlb

#endif
