#pragma once

#include <string>
#include <vector>

#include "esrhd/diagnostics.hpp"
#include "esrhd/eos.hpp"
#include "esrhd/grid.hpp"
#include "esrhd/types.hpp"

namespace esrhd {

/// Header x,rho,v1,p,D,m1,E; 17 significant digits.
void write_solution_1d(const std::string& path, const Grid<1>& grid, const std::vector<Prim1>& prims,
                       const EosModel& eos);
/// Header x,y,rho,v1,v2,p; rows ordered j-major.
void write_solution_2d(const std::string& path, const Grid<2>& grid, const std::vector<Prim2>& prims);
/// Header t,total_entropy[,gamma_n].
void write_entropy_trace(const std::string& path, const EntropyTrace& trace);
/// Header N,l1,l1_order,l2,l2_order; empty order fields for undefined rates.
void write_errors_table(const std::string& path, const std::vector<ErrorRow>& rows);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    /// Column index by name; throws DomainError if absent.
    std::size_t column(const std::string& name) const;
    std::vector<double> values(const std::string& name) const;
};

/// Numeric CSV with a header line. Empty fields read as NaN.
CsvTable read_csv(const std::string& path);

}  // namespace esrhd
