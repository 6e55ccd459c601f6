#pragma once

#include <array>
#include <span>

#include "esrhd/eos.hpp"
#include "esrhd/means.hpp"
#include "esrhd/state.hpp"

namespace esrhd {

/// z1 = rho, z2 = rho/p, u = g v, and the Lorentz factor g.
template <int Dim>
struct ParamVars {
    double z1 = 1.0;
    double z2 = 1.0;
    std::array<double, Dim> u{};
    double g = 1.0;
};

template <int Dim>
ParamVars<Dim> param_vars(const Prim<Dim>& V) {
    ParamVars<Dim> z;
    z.z1 = V.rho;
    z.z2 = V.rho / V.p;
    z.g = V.lorentz();
    for (int k = 0; k < Dim; ++k) z.u[k] = z.g * V.v[k];
    return z;
}

/// Two-point entropy conservative flux in direction `dir`.
template <int Dim>
Vec<Dim> ec_flux(const EosModel& eos, const ParamVars<Dim>& L, const ParamVars<Dim>& R, int dir) {
    const double z1ln = logmean(L.z1, R.z1);
    const double pbar = amean(L.z1, R.z1) / amean(L.z2, R.z2);
    const double gbar = amean(L.g, R.g);
    std::array<double, Dim> ubar;
    double den = gbar * gbar;
    for (int k = 0; k < Dim; ++k) {
        ubar[k] = amean(L.u[k], R.u[k]);
        den -= ubar[k] * ubar[k];
    }
    if (!(den > 0.0)) throw InvariantError("ec_flux: non-positive denominator");
    const double rh = (pbar + z1ln * eos.ec_coefficient(L.z2, R.z2)) / den;
    const double ud = ubar[dir];
    Vec<Dim> F;
    F[0] = z1ln * ud;
    for (int k = 0; k < Dim; ++k) F[1 + k] = rh * ud * ubar[k];
    F[1 + dir] += pbar;
    F[Dim + 1] = rh * gbar * ud;
    return F;
}

template <int Dim>
Vec<Dim> ec_flux(const EosModel& eos, const Prim<Dim>& L, const Prim<Dim>& R, int dir) {
    return ec_flux<Dim>(eos, param_vars(L), param_vars(R), dir);
}

inline Vec<1> ec_flux_1d(const EosModel& eos, const Prim1& L, const Prim1& R) {
    return ec_flux<1>(eos, L, R, 0);
}

inline Vec<2> ec_flux_2d(const EosModel& eos, const Prim2& L, const Prim2& R, int dir) {
    return ec_flux<2>(eos, L, R, dir);
}

/// Numerical entropy flux {{W}}.F - {{psi}} paired with ec_flux.
template <int Dim>
double ec_entropy_flux(const EosModel& eos, const Prim<Dim>& L, const Prim<Dim>& R, int dir) {
    const Vec<Dim> Wm = 0.5 * (entropy_vars(eos, L) + entropy_vars(eos, R));
    return Wm.dot(ec_flux(eos, L, R, dir)) - amean(potential_psi(L, dir), potential_psi(R, dir));
}

/// Coefficients alpha_{k,r} of the order-2k combination, as exact rationals.
struct ComboCoeffs {
    struct Rational {
        long num;
        long den;
        constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    };
    static constexpr int kMax = 3;
    static constexpr std::array<std::array<Rational, 3>, 3> table{{
        {{{1, 1}, {0, 1}, {0, 1}}},
        {{{4, 3}, {-1, 6}, {0, 1}}},
        {{{3, 2}, {-3, 10}, {1, 30}}},
    }};
    static double alpha(int k, int r) { return table[k - 1][r - 1].value(); }
};

/// Order-2k EC flux at the interface between stencil[k-1] and stencil[k].
template <int Dim>
Vec<Dim> highorder_ec_flux(const EosModel& eos, std::span<const Prim<Dim>> stencil, int k, int dir) {
    if (k < 1 || k > ComboCoeffs::kMax || static_cast<int>(stencil.size()) != 2 * k)
        throw DomainError("highorder_ec_flux: need 2k stencil states, 1 <= k <= 3");
    Vec<Dim> F = Vec<Dim>::Zero();
    const int i = k - 1;
    for (int r = 1; r <= k; ++r) {
        Vec<Dim> part = Vec<Dim>::Zero();
        for (int s = 0; s < r; ++s) part += ec_flux(eos, stencil[i - s], stencil[i - s + r], dir);
        F += ComboCoeffs::alpha(k, r) * part;
    }
    return F;
}

template <int Dim>
double highorder_ec_entropy_flux(const EosModel& eos, std::span<const Prim<Dim>> stencil, int k, int dir) {
    if (k < 1 || k > ComboCoeffs::kMax || static_cast<int>(stencil.size()) != 2 * k)
        throw DomainError("highorder_ec_entropy_flux: need 2k stencil states, 1 <= k <= 3");
    double q = 0.0;
    const int i = k - 1;
    for (int r = 1; r <= k; ++r) {
        double part = 0.0;
        for (int s = 0; s < r; ++s) part += ec_entropy_flux(eos, stencil[i - s], stencil[i - s + r], dir);
        q += ComboCoeffs::alpha(k, r) * part;
    }
    return q;
}

}  // namespace esrhd
