#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "esrhd/eos.hpp"
#include "esrhd/grid.hpp"
#include "esrhd/types.hpp"

namespace esrhd {

/// Fixed-order pairwise summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> x);

/// Sum of eta over interior cells times the cell volume.
template <int Dim>
double total_entropy(const Field<Dim>& f, const EosModel& eos);

struct EntropySample {
    double t = 0.0;
    double total = 0.0;
    std::optional<double> gamma_n;
};

/// Time series of the discrete total entropy.
class EntropyTrace {
public:
    /// Throws DomainError if t goes backwards.
    void append(double t, double total, std::optional<double> gamma_n = {});
    const std::vector<EntropySample>& samples() const { return samples_; }
    bool empty() const { return samples_.empty(); }
    /// max |S(t) - S(0)| / |S(0)|.
    double max_relative_drift() const;
    /// Number of steps with S(t_{n+1}) - S(t_n) > tol.
    int increases(double tol = 0.0) const;
    /// Number of steps with S(t_{n+1}) - S(t_n) < -tol.
    int decreases(double tol = 0.0) const;
    bool has_gamma() const;

private:
    std::vector<EntropySample> samples_;
};

struct ErrorNorms {
    double l1 = 0.0;
    double l2 = 0.0;
};

/// Volume-weighted l1 and l2 norms of (numerical - exact) over interior cells.
template <int Dim>
ErrorNorms error_norms(const Grid<Dim>& grid, std::span<const double> numerical,
                       const std::function<double(const std::array<double, Dim>&)>& exact);

struct ErrorRow {
    int n = 0;
    double l1 = 0.0;
    double l2 = 0.0;
    std::optional<double> l1_order;  // empty for the first row or a zero error
    std::optional<double> l2_order;
};

/// Observed orders log(e_a/e_b)/log(n_b/n_a) between consecutive rows.
std::vector<ErrorRow> convergence_rates(const std::vector<std::pair<int, ErrorNorms>>& table);

}  // namespace esrhd
