#include "esrhd/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "esrhd/diagnostics.hpp"
#include "esrhd/errors.hpp"
#include "esrhd/state.hpp"

namespace esrhd {

double non_es_coefficient(NonEsVariant variant, double t) {
    if (variant == NonEsVariant::RF) return 3.0 / 5.0 * std::sin(50.0 * t);
    return 6.0 / 5.0 * std::sin(7.6 * t + 0.1);
}

const std::vector<std::string>& Scheme::names() {
    static const std::vector<std::string> n{"ec2", "ec4", "ec6", "es4", "es5", "llf", "nones5_rf", "nones5_rp3"};
    return n;
}

Scheme Scheme::custom(int k, bool dissipative, ReconKind recon) {
    if (k < 1 || k > ComboCoeffs::kMax) throw DomainError("scheme: k must be 1..3");
    Scheme s;
    s.kind = SchemeKind::Custom;
    s.k = k;
    s.dissipative = dissipative;
    s.recon = recon;
    return s;
}

Scheme Scheme::from_name(const std::string& name) {
    Scheme s;
    if (name == "ec2") {
        s = custom(1, false, ReconKind::Jump);
        s.kind = SchemeKind::EC2;
    } else if (name == "ec4") {
        s = custom(2, false, ReconKind::Jump);
        s.kind = SchemeKind::EC4;
    } else if (name == "ec6") {
        s = custom(3, false, ReconKind::Jump);
        s.kind = SchemeKind::EC6;
    } else if (name == "es4") {
        s = custom(2, true, ReconKind::Eno4);
        s.kind = SchemeKind::ES4;
    } else if (name == "es5") {
        s = custom(3, true, ReconKind::Weno5);
        s.kind = SchemeKind::ES5;
    } else if (name == "nones5_rf") {
        s = custom(3, true, ReconKind::Weno5);
        s.kind = SchemeKind::NonES5RF;
    } else if (name == "nones5_rp3") {
        s = custom(3, true, ReconKind::Weno5);
        s.kind = SchemeKind::NonES5RP3;
    } else if (name == "llf") {
        s.kind = SchemeKind::LLF;
        s.llf = true;
    } else {
        std::string valid;
        for (const auto& n : names()) valid += (valid.empty() ? "" : ", ") + n;
        throw DomainError("unknown scheme '" + name + "' (valid: " + valid + ")");
    }
    return s;
}

std::string Scheme::name() const {
    switch (kind) {
        case SchemeKind::EC2: return "ec2";
        case SchemeKind::EC4: return "ec4";
        case SchemeKind::EC6: return "ec6";
        case SchemeKind::ES4: return "es4";
        case SchemeKind::ES5: return "es5";
        case SchemeKind::LLF: return "llf";
        case SchemeKind::NonES5RF: return "nones5_rf";
        case SchemeKind::NonES5RP3: return "nones5_rp3";
        case SchemeKind::Custom: break;
    }
    return "custom_k" + std::to_string(k) + (dissipative ? "_diss" : "");
}

double Scheme::dissipation_coef(double t) const {
    if (!dissipative) return 0.0;
    if (kind == SchemeKind::NonES5RF) return non_es_coefficient(NonEsVariant::RF, t);
    if (kind == SchemeKind::NonES5RP3) return non_es_coefficient(NonEsVariant::RP3, t);
    return 0.5;
}

int Scheme::half_width() const {
    if (llf) return 1;
    return std::max(k, dissipative ? recon_half_width(recon) : 1);
}

double OdeSystem::entropy_change(std::span<const double> u, std::span<const double> d, double g) {
    std::vector<double> w(u.begin(), u.end());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += g * d[i];
    return entropy(w) - entropy(u);
}

std::function<double(double)> OdeSystem::entropy_change_fn(std::span<const double> u, std::span<const double> d) {
    return [this, u, d](double g) { return entropy_change(u, d, g); };
}

template <int Dim>
SemiDiscrete<Dim>::SemiDiscrete(const Grid<Dim>& grid, const EosModel& eos, const Scheme& scheme,
                                DissipationMode mode, const BoundarySpec<Dim>& bc)
    : field_(grid), eos_(eos), scheme_(scheme), mode_(mode), bc_(bc) {
    bc_.validate();
    if (grid.ghost < scheme.half_width())
        throw DomainError("SemiDiscrete: ghost width " + std::to_string(grid.ghost) + " < stencil half width " +
                          std::to_string(scheme.half_width()));
    p_guess_.assign(grid.interior_cells(), -1.0);
    z_.resize(grid.padded_cells());
    W_.resize(grid.padded_cells());
    cell_work_.resize(grid.interior_cells());
}

template <int Dim>
Prim<Dim> SemiDiscrete<Dim>::recover(const Vec<Dim>& U, std::size_t cell, bool store) {
    const double guess = p_guess_[cell];
    const Prim<Dim> V = cons_to_prim<Dim>(eos_, U, guess > 0.0 ? std::optional<double>(guess) : std::nullopt,
                                          static_cast<std::ptrdiff_t>(cell));
    if (store) p_guess_[cell] = V.p;
    return V;
}

template <int Dim>
void SemiDiscrete<Dim>::load(std::span<const double> u) {
    const Grid<Dim>& g = field_.grid;
    if (u.size() != size()) throw DomainError("SemiDiscrete::load: size mismatch");
    const int rows = Dim == 2 ? g.n[Dim - 1] : 1;
    for (int j = 0; j < rows; ++j) {
        for (int i = 0; i < g.n[0]; ++i) {
            const std::size_t c = g.interior_index(i, j);
            const std::size_t p = g.index(i, j);
            Vec<Dim>& U = field_.U[p];
            for (int q = 0; q < kVars; ++q) U[q] = u[c * kVars + q];
            field_.V[p] = recover(U, c, true);
        }
    }
    apply_bc(field_, bc_, eos_);
}

template <int Dim>
void SemiDiscrete<Dim>::prepare_cells() {
    if (scheme_.llf) return;
    for (std::size_t p = 0; p < field_.V.size(); ++p) {
        z_[p] = param_vars(field_.V[p]);
        if (scheme_.dissipative) W_[p] = entropy_vars(eos_, field_.V[p]);
    }
}

template <int Dim>
void SemiDiscrete<Dim>::line_fluxes(double t, int dir, int line, std::vector<Vec<Dim>>& F) {
    const Grid<Dim>& g = field_.grid;
    const int n = g.n[dir];
    const int G = g.ghost;
    line_idx_.resize(n + 2 * G);
    for (int a = -G; a < n + G; ++a)
        line_idx_[a + G] = dir == 0 ? g.index(a, line) : g.index(line, a);
    const auto at = [&](int a) { return line_idx_[a + G]; };
    F.resize(n + 1);

    if (scheme_.llf) {
        phys_.resize(n + 2);
        speed_.resize(n + 2);
        for (int a = -1; a <= n; ++a) {
            const Prim<Dim>& V = field_.V[at(a)];
            phys_[a + 1] = flux(eos_, V, dir);
            speed_[a + 1] = max_speed(eos_, V, dir);
        }
        for (int i = -1; i < n; ++i) {
            const double alpha = std::max(speed_[i + 1], speed_[i + 2]);
            F[i + 1] = 0.5 * (phys_[i + 1] + phys_[i + 2]) - 0.5 * alpha * (field_.U[at(i + 1)] - field_.U[at(i)]);
        }
        return;
    }

    const int k = scheme_.k;
    for (int r = 1; r <= k; ++r) {
        auto& T = two_point_[r - 1];
        T.resize(n + k);
        for (int a = -k; a < n; ++a) T[a + k] = ec_flux<Dim>(eos_, z_[at(a)], z_[at(a + r)], dir);
    }
    for (int i = -1; i < n; ++i) {
        Vec<Dim> f = Vec<Dim>::Zero();
        for (int r = 1; r <= k; ++r) {
            Vec<Dim> part = Vec<Dim>::Zero();
            for (int s = 0; s < r; ++s) part += two_point_[r - 1][i - s + k];
            f += ComboCoeffs::alpha(k, r) * part;
        }
        F[i + 1] = f;
    }

    const double coef = scheme_.dissipation_coef(t);
    if (!scheme_.dissipative || coef == 0.0) return;
    const int w = recon_half_width(scheme_.recon);
    Vec<Dim> omega[8];
    for (int i = -1; i < n; ++i) {
        const ScaledEigs<Dim> eigs =
            scaled_eigenvectors<Dim>(interface_average(eos_, field_.V[at(i)], field_.V[at(i + 1)]), dir);
        for (int j = 0; j < 2 * w; ++j) omega[j] = eigs.R.transpose() * W_[at(i - w + 1 + j)];
        const Vec<Dim> jmp = scaled_jump<Dim>(scheme_.recon, std::span<const Vec<Dim>>(omega, 2 * w));
        F[i + 1] -= coef * (eigs.R * (abs_lambda(eigs, mode_).asDiagonal() * jmp));
    }
}

template <int Dim>
double SemiDiscrete<Dim>::rhs(double t, std::span<const double> u, std::span<double> dudt) {
    load(u);
    prepare_cells();
    const Grid<Dim>& g = field_.grid;
    std::fill(dudt.begin(), dudt.end(), 0.0);
    for (int dir = 0; dir < Dim; ++dir) {
        const int lines = Dim == 2 ? g.n[1 - dir] : 1;
        const double inv = 1.0 / g.dx(dir);
        for (int line = 0; line < lines; ++line) {
            line_fluxes(t, dir, line, flux_buf_);
            for (int a = 0; a < g.n[dir]; ++a) {
                const std::size_t c = dir == 0 ? g.interior_index(a, line) : g.interior_index(line, a);
                const Vec<Dim> diff = (flux_buf_[a + 1] - flux_buf_[a]) * inv;
                for (int q = 0; q < kVars; ++q) dudt[c * kVars + q] -= diff[q];
            }
        }
    }
    // entropy production sum_i W_i . L_i
    const int rows = Dim == 2 ? g.n[Dim - 1] : 1;
    for (int j = 0; j < rows; ++j) {
        for (int i = 0; i < g.n[0]; ++i) {
            const std::size_t c = g.interior_index(i, j);
            const Vec<Dim> W = entropy_vars(eos_, field_.V[g.index(i, j)]);
            double s = 0.0;
            for (int q = 0; q < kVars; ++q) s += W[q] * dudt[c * kVars + q];
            cell_work_[c] = s;
        }
    }
    return pairwise_sum(cell_work_) * g.cell_volume();
}

template <int Dim>
double SemiDiscrete<Dim>::entropy(std::span<const double> u) {
    const std::size_t n = field_.grid.interior_cells();
    for (std::size_t c = 0; c < n; ++c) {
        const Vec<Dim> U = Eigen::Map<const Vec<Dim>>(u.data() + c * kVars);
        cell_work_[c] = entropy_eta(eos_, recover(U, c, false));
    }
    return pairwise_sum(cell_work_) * field_.grid.cell_volume();
}

template <int Dim>
double SemiDiscrete<Dim>::entropy_change(std::span<const double> u, std::span<const double> d, double g) {
    const std::size_t n = field_.grid.interior_cells();
    // Small updates: eta(U + g dU) - eta(U) = int_0^g W(U + s dU) . dU ds, so
    // rounding stays relative to the change instead of to eta itself. Large
    // updates (W far from linear along the segment) use the plain difference.
    using Quad = boost::math::quadrature::gauss<double, 5>;
    for (std::size_t c = 0; c < n; ++c) {
        const Vec<Dim> U = Eigen::Map<const Vec<Dim>>(u.data() + c * kVars);
        const Vec<Dim> dU = Eigen::Map<const Vec<Dim>>(d.data() + c * kVars);
        const double rel = std::abs(g) * dU.template lpNorm<Eigen::Infinity>() / U.template lpNorm<Eigen::Infinity>();
        if (rel < 1e-3) {
            cell_work_[c] = Quad::integrate(
                [&](double s) { return entropy_vars(eos_, recover(U + s * dU, c, false)).dot(dU); }, 0.0, g);
        } else {
            cell_work_[c] = entropy_eta(eos_, recover(U + g * dU, c, false)) - entropy_eta(eos_, recover(U, c, false));
        }
    }
    return pairwise_sum(cell_work_) * field_.grid.cell_volume();
}

template <int Dim>
std::function<double(double)> SemiDiscrete<Dim>::entropy_change_fn(std::span<const double> u,
                                                                   std::span<const double> d) {
    // Cells with small updates contribute int_0^g P(s) ds, where
    // P(s) = sum_c W(U_c + s dU_c) . dU_c is smooth in s. P is sampled once at
    // Chebyshev points on [0, kSpan] and its interpolant integrated exactly,
    // so each evaluation only touches the cells with large updates.
    constexpr int kNodes = 6;
    constexpr double kSpan = 1.5;
    const std::size_t n = field_.grid.interior_cells();
    const double vol = field_.grid.cell_volume();

    std::array<double, kNodes> s{}, bw{}, P{};
    for (int k = 0; k < kNodes; ++k) {
        s[k] = 0.5 * kSpan * (1.0 - std::cos(M_PI * k / (kNodes - 1)));
        bw[k] = (k % 2 ? -1.0 : 1.0) * ((k == 0 || k == kNodes - 1) ? 0.5 : 1.0);
    }
    std::vector<std::size_t> large;
    std::vector<std::vector<double>> per(kNodes, std::vector<double>(n, 0.0));
    for (std::size_t c = 0; c < n; ++c) {
        const Vec<Dim> U = Eigen::Map<const Vec<Dim>>(u.data() + c * kVars);
        const Vec<Dim> dU = Eigen::Map<const Vec<Dim>>(d.data() + c * kVars);
        const double rel = kSpan * dU.template lpNorm<Eigen::Infinity>() / U.template lpNorm<Eigen::Infinity>();
        if (rel >= 1e-3) {
            large.push_back(c);
            continue;
        }
        for (int k = 0; k < kNodes; ++k) per[k][c] = entropy_vars(eos_, recover(U + s[k] * dU, c, false)).dot(dU);
    }
    for (int k = 0; k < kNodes; ++k) P[k] = pairwise_sum(per[k]) * vol;

    return [this, u, d, s, bw, P, large = std::move(large), vol](double g) {
        if (!(g >= 0.0 && g <= kSpan)) return entropy_change(u, d, g);
        const auto interp = [&](double x) {
            double num = 0.0, den = 0.0;
            for (int k = 0; k < kNodes; ++k) {
                if (x == s[k]) return P[k];
                const double w = bw[k] / (x - s[k]);
                num += w * P[k];
                den += w;
            }
            return num / den;
        };
        // 3-point Gauss is exact for the degree-5 interpolant
        static const double xg[3] = {-std::sqrt(0.6), 0.0, std::sqrt(0.6)};
        static const double wg[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
        double smooth = 0.0;
        for (int q = 0; q < 3; ++q) smooth += wg[q] * interp(0.5 * g * (xg[q] + 1.0));
        smooth *= 0.5 * g;

        std::vector<double> big(large.size());
        for (std::size_t m = 0; m < large.size(); ++m) {
            const std::size_t c = large[m];
            const Vec<Dim> U = Eigen::Map<const Vec<Dim>>(u.data() + c * kVars);
            const Vec<Dim> dU = Eigen::Map<const Vec<Dim>>(d.data() + c * kVars);
            big[m] = entropy_eta(eos_, recover(U + g * dU, c, false)) - entropy_eta(eos_, recover(U, c, false));
        }
        return smooth + pairwise_sum(big) * vol;
    };
}

template <int Dim>
double SemiDiscrete<Dim>::max_rate() const {
    const Grid<Dim>& g = field_.grid;
    const int rows = Dim == 2 ? g.n[Dim - 1] : 1;
    double rate = 0.0;
    for (int dir = 0; dir < Dim; ++dir) {
        double m = 0.0;
        for (int j = 0; j < rows; ++j)
            for (int i = 0; i < g.n[0]; ++i) m = std::max(m, max_speed(eos_, field_.V[g.index(i, j)], dir));
        rate += m / g.dx(dir);
    }
    return rate;
}

template <int Dim>
double SemiDiscrete<Dim>::cfl_dt(std::span<const double> u, double cfl) {
    load(u);
    return cfl / max_rate();
}

template <int Dim>
std::vector<double> SemiDiscrete<Dim>::pack(const std::vector<Prim<Dim>>& prims) const {
    if (prims.size() != field_.grid.interior_cells()) throw DomainError("pack: size mismatch");
    std::vector<double> u(size());
    for (std::size_t c = 0; c < prims.size(); ++c) {
        require_admissible(prims[c]);
        const Vec<Dim> U = prim_to_cons(eos_, prims[c]);
        for (int q = 0; q < kVars; ++q) u[c * kVars + q] = U[q];
    }
    return u;
}

template <int Dim>
std::vector<Prim<Dim>> SemiDiscrete<Dim>::unpack(std::span<const double> u) {
    load(u);
    const Grid<Dim>& g = field_.grid;
    std::vector<Prim<Dim>> out(g.interior_cells());
    const int rows = Dim == 2 ? g.n[Dim - 1] : 1;
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < g.n[0]; ++i) out[g.interior_index(i, j)] = field_.V[g.index(i, j)];
    return out;
}

template class SemiDiscrete<1>;
template class SemiDiscrete<2>;

}  // namespace esrhd
