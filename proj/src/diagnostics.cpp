#include "esrhd/diagnostics.hpp"

#include <cmath>

#include "esrhd/errors.hpp"
#include "esrhd/state.hpp"

namespace esrhd {

double pairwise_sum(std::span<const double> x) {
    if (x.size() <= 8) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    const std::size_t h = x.size() / 2;
    return pairwise_sum(x.first(h)) + pairwise_sum(x.subspan(h));
}

template <int Dim>
double total_entropy(const Field<Dim>& f, const EosModel& eos) {
    const Grid<Dim>& g = f.grid;
    std::vector<double> eta(g.interior_cells());
    const int rows = Dim == 2 ? g.n[Dim - 1] : 1;
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < g.n[0]; ++i)
            eta[g.interior_index(i, j)] = entropy_eta(eos, f.V[g.index(i, j)]);
    return pairwise_sum(eta) * g.cell_volume();
}

void EntropyTrace::append(double t, double total, std::optional<double> gamma_n) {
    if (!samples_.empty() && t < samples_.back().t)
        throw DomainError("EntropyTrace: time must be non-decreasing");
    samples_.push_back({t, total, gamma_n});
}

double EntropyTrace::max_relative_drift() const {
    if (samples_.empty()) return 0.0;
    const double s0 = samples_.front().total;
    double m = 0.0;
    for (const auto& s : samples_) m = std::max(m, std::abs(s.total - s0));
    return s0 != 0.0 ? m / std::abs(s0) : m;
}

int EntropyTrace::increases(double tol) const {
    int c = 0;
    for (std::size_t i = 1; i < samples_.size(); ++i)
        if (samples_[i].total - samples_[i - 1].total > tol) ++c;
    return c;
}

int EntropyTrace::decreases(double tol) const {
    int c = 0;
    for (std::size_t i = 1; i < samples_.size(); ++i)
        if (samples_[i].total - samples_[i - 1].total < -tol) ++c;
    return c;
}

bool EntropyTrace::has_gamma() const {
    for (const auto& s : samples_)
        if (s.gamma_n) return true;
    return false;
}

template <int Dim>
ErrorNorms error_norms(const Grid<Dim>& grid, std::span<const double> numerical,
                       const std::function<double(const std::array<double, Dim>&)>& exact) {
    if (numerical.size() != grid.interior_cells())
        throw DomainError("error_norms: size mismatch");
    std::vector<double> a(numerical.size()), b(numerical.size());
    const int rows = Dim == 2 ? grid.n[Dim - 1] : 1;
    for (int j = 0; j < rows; ++j) {
        for (int i = 0; i < grid.n[0]; ++i) {
            std::array<double, Dim> x;
            x[0] = grid.center(0, i);
            if constexpr (Dim == 2) x[1] = grid.center(1, j);
            const std::size_t c = grid.interior_index(i, j);
            const double e = numerical[c] - exact(x);
            a[c] = std::abs(e);
            b[c] = e * e;
        }
    }
    const double vol = grid.cell_volume();
    return {pairwise_sum(a) * vol, std::sqrt(pairwise_sum(b) * vol)};
}

std::vector<ErrorRow> convergence_rates(const std::vector<std::pair<int, ErrorNorms>>& table) {
    std::vector<ErrorRow> rows;
    for (std::size_t k = 0; k < table.size(); ++k) {
        ErrorRow r;
        r.n = table[k].first;
        r.l1 = table[k].second.l1;
        r.l2 = table[k].second.l2;
        if (k > 0) {
            const double ratio = std::log(static_cast<double>(r.n) / table[k - 1].first);
            const auto order = [&](double prev, double cur) -> std::optional<double> {
                if (!(prev > 0.0) || !(cur > 0.0) || ratio == 0.0) return std::nullopt;
                return std::log(prev / cur) / ratio;
            };
            r.l1_order = order(table[k - 1].second.l1, r.l1);
            r.l2_order = order(table[k - 1].second.l2, r.l2);
        }
        rows.push_back(r);
    }
    return rows;
}

template double total_entropy<1>(const Field<1>&, const EosModel&);
template double total_entropy<2>(const Field<2>&, const EosModel&);
template ErrorNorms error_norms<1>(const Grid<1>&, std::span<const double>,
                                   const std::function<double(const std::array<double, 1>&)>&);
template ErrorNorms error_norms<2>(const Grid<2>&, std::span<const double>,
                                   const std::function<double(const std::array<double, 2>&)>&);

}  // namespace esrhd
