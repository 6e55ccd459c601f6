#pragma once

#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "esrhd/config.hpp"
#include "esrhd/diagnostics.hpp"
#include "esrhd/grid.hpp"
#include "esrhd/types.hpp"

namespace esrhd {

struct RunOutcome {
    int dim = 1;
    double t = 0.0;
    int steps = 0;
    Grid<1> grid1;
    Grid<2> grid2;
    std::vector<Prim1> prims1;
    std::vector<Prim2> prims2;
    EntropyTrace trace;
    std::optional<ErrorNorms> errors;  // against the exact solution, if the case has one
    std::vector<std::string> files;    // artifacts written
};

/// Execute one configuration. With write_files, artifacts go to cfg.output_dir:
/// solution.csv, solution_t<time>.csv / solution_step<n>.csv snapshots,
/// entropy.csv, errors.csv (exact-reference cases), reference.csv (llf cases
/// with reference=on) and run.cfg.
RunOutcome run(const RunConfig& cfg, bool write_files = true);

/// Convergence study over nx values (ny = nx in 2D). Writes errors.csv.
std::vector<ErrorRow> sweep(const RunConfig& base, const std::vector<int>& ns, bool write_files = true);

/// Several configurations on one grid; each writes to output_dir/<label>
/// where label is the scheme name (suffixed on duplicates). A single
/// configuration behaves exactly as run().
std::vector<RunOutcome> compare(const std::vector<RunConfig>& cfgs, bool write_files = true);

/// 0 success; 2 config error; 3 recovery failure; 4 relaxation failure; 1 other.
int exit_code_for(const std::exception& e);

}  // namespace esrhd
