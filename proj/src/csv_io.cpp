#include "esrhd/csv_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <fmt/format.h>

#include "esrhd/errors.hpp"
#include "esrhd/state.hpp"

namespace esrhd {

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw DomainError("cannot open '" + path + "' for writing");
    return os;
}

}  // namespace

void write_solution_1d(const std::string& path, const Grid<1>& grid, const std::vector<Prim1>& prims,
                       const EosModel& eos) {
    auto os = open_out(path);
    os << "x,rho,v1,p,D,m1,E\n";
    for (int i = 0; i < grid.n[0]; ++i) {
        const Prim1& V = prims[i];
        const Vec<1> U = prim_to_cons(eos, V);
        os << num(grid.center(0, i)) << ',' << num(V.rho) << ',' << num(V.v[0]) << ',' << num(V.p) << ','
           << num(U[0]) << ',' << num(U[1]) << ',' << num(U[2]) << '\n';
    }
}

void write_solution_2d(const std::string& path, const Grid<2>& grid, const std::vector<Prim2>& prims) {
    auto os = open_out(path);
    os << "x,y,rho,v1,v2,p\n";
    for (int j = 0; j < grid.n[1]; ++j) {
        for (int i = 0; i < grid.n[0]; ++i) {
            const Prim2& V = prims[grid.interior_index(i, j)];
            os << num(grid.center(0, i)) << ',' << num(grid.center(1, j)) << ',' << num(V.rho) << ','
               << num(V.v[0]) << ',' << num(V.v[1]) << ',' << num(V.p) << '\n';
        }
    }
}

void write_entropy_trace(const std::string& path, const EntropyTrace& trace) {
    auto os = open_out(path);
    const bool g = trace.has_gamma();
    os << (g ? "t,total_entropy,gamma_n\n" : "t,total_entropy\n");
    for (const auto& s : trace.samples()) {
        os << num(s.t) << ',' << num(s.total);
        if (g) os << ',' << (s.gamma_n ? num(*s.gamma_n) : num(1.0));
        os << '\n';
    }
}

void write_errors_table(const std::string& path, const std::vector<ErrorRow>& rows) {
    auto os = open_out(path);
    os << "N,l1,l1_order,l2,l2_order\n";
    for (const auto& r : rows) {
        os << r.n << ',' << num(r.l1) << ',' << (r.l1_order ? num(*r.l1_order) : "") << ',' << num(r.l2) << ','
           << (r.l2_order ? num(*r.l2_order) : "") << '\n';
    }
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw DomainError("csv: missing column '" + name + "'");
}

std::vector<double> CsvTable::values(const std::string& name) const {
    const std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.at(c));
    return out;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw DomainError("cannot open '" + path + "'");
    CsvTable t;
    std::string line;
    if (!std::getline(is, line)) throw DomainError("csv: empty file '" + path + "'");
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) t.header.push_back(cell);
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t end = line.find(',', start);
            const std::string cell = line.substr(start, end == std::string::npos ? std::string::npos : end - start);
            row.push_back(cell.empty() ? std::numeric_limits<double>::quiet_NaN() : std::stod(cell));
            if (end == std::string::npos) break;
            start = end + 1;
        }
        if (row.size() != t.header.size()) throw DomainError("csv: ragged row in '" + path + "'");
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace esrhd
