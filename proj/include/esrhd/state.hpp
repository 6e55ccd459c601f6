#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "esrhd/eos.hpp"
#include "esrhd/errors.hpp"
#include "esrhd/types.hpp"

namespace esrhd {

/// Largest admissible speed accepted on ingestion.
inline constexpr double kMaxSpeed = 1.0 - 1e-10;

template <int Dim>
bool is_admissible(const Prim<Dim>& V) {
    return V.rho > 0.0 && V.p > 0.0 && std::isfinite(V.rho) && std::isfinite(V.p) &&
           std::sqrt(V.v2()) <= kMaxSpeed;
}

template <int Dim>
void require_admissible(const Prim<Dim>& V) {
    if (!is_admissible(V))
        throw DomainError("state: inadmissible primitive state (rho=" + std::to_string(V.rho) +
                          ", p=" + std::to_string(V.p) +
                          ", |v|=" + std::to_string(std::sqrt(V.v2())) + ")");
}

/// (D, m, E) = (rho g, rho h g^2 v, rho h g^2 - p).
template <int Dim>
Vec<Dim> prim_to_cons(const EosModel& eos, const Prim<Dim>& V) {
    const double g2 = 1.0 / (1.0 - V.v2());
    const double w = V.rho * eos.enthalpy(V.theta()) * g2;
    Vec<Dim> U;
    U[0] = V.rho * std::sqrt(g2);
    for (int k = 0; k < Dim; ++k) U[1 + k] = w * V.v[k];
    U[Dim + 1] = w - V.p;
    return U;
}

/// Physical flux in direction `dir`.
template <int Dim>
Vec<Dim> flux(const EosModel& eos, const Prim<Dim>& V, int dir) {
    const Vec<Dim> U = prim_to_cons(eos, V);
    const double vd = V.v[dir];
    Vec<Dim> F;
    F[0] = U[0] * vd;
    for (int k = 0; k < Dim; ++k) F[1 + k] = U[1 + k] * vd;
    F[1 + dir] += V.p;
    F[Dim + 1] = U[1 + dir];
    return F;
}

template <int Dim>
double entropy_eta(const EosModel& eos, const Prim<Dim>& V) {
    return -V.rho * V.lorentz() * eos.entropy_S(V.rho, V.theta());
}

template <int Dim>
double entropy_flux_q(const EosModel& eos, const Prim<Dim>& V, int dir) {
    return entropy_eta(eos, V) * V.v[dir];
}

/// W = (h - theta S, g v, -g) / theta.
template <int Dim>
Vec<Dim> entropy_vars(const EosModel& eos, const Prim<Dim>& V) {
    const double t = V.theta();
    const double g = V.lorentz();
    Vec<Dim> W;
    W[0] = (eos.enthalpy(t) - t * eos.entropy_S(V.rho, t)) / t;
    for (int k = 0; k < Dim; ++k) W[1 + k] = g * V.v[k] / t;
    W[Dim + 1] = -g / t;
    return W;
}

template <int Dim>
double potential_psi(const Prim<Dim>& V, int dir) {
    return V.rho * V.lorentz() * V.v[dir];
}

/// Analytic symmetric positive definite dU/dW.
template <int Dim>
Mat<Dim> dU_dW(const EosModel& eos, const Prim<Dim>& V) {
    const double r = V.rho, t = V.theta();
    const double h = eos.enthalpy(t), ep = eos.e_prime(t);
    const double v1 = V.v[0];
    const double v2 = Dim == 2 ? V.v[Dim - 1] : 0.0;
    const double vv = v1 * v1 + v2 * v2;
    const double g = 1.0 / std::sqrt(1.0 - vv);
    const double g3 = r * g * g * g;
    const double a = t * t * (1.0 + ep);
    const double s1 = a * v1 * v1 + t * h + h * h * v1 * v1 - t * h * v2 * v2;
    const double s2 = a + t * h + h * h;
    const double s3 = a * v2 * v2 + t * h + h * h * v2 * v2 - t * h * v1 * v1;
    const double s4 = a + h * h + t * h * vv;
    const double rhg = r * h * g * g;
    const double e0 = r * (h * g * g - t);

    Mat<Dim> P;
    const int E = Dim + 1;
    P(0, 0) = r * g;
    P(0, 1) = P(1, 0) = rhg * v1;
    P(0, E) = P(E, 0) = e0;
    P(1, 1) = g3 * s1;
    P(1, E) = P(E, 1) = g3 * v1 * s4;
    P(E, E) = g3 * (s4 - 2.0 * t * h * (1.0 - vv));
    if constexpr (Dim == 2) {
        P(0, 2) = P(2, 0) = rhg * v2;
        P(1, 2) = P(2, 1) = g3 * v1 * v2 * s2;
        P(2, 2) = g3 * s3;
        P(2, E) = P(E, 2) = g3 * v2 * s4;
    }
    return P;
}

struct RecoveryOptions {
    int max_iter = 200;
    double rel_tol = 1e-15;
};

/// Conservative to primitive recovery by safeguarded Newton iteration on p.
///
/// Residual g(p) = h(p g / D) - sqrt((E+p)^2 - |m|^2) / D, bracketed on
/// p > max(0, |m| - E). `guess` is an optional warm start (e.g. last step).
template <int Dim>
Prim<Dim> cons_to_prim(const EosModel& eos, const Vec<Dim>& U, std::optional<double> guess = {},
                       std::ptrdiff_t cell = -1, const RecoveryOptions& opt = {}) {
    const double D = U[0], E = U[Dim + 1];
    double M2 = 0.0;
    for (int k = 0; k < Dim; ++k) M2 += U[1 + k] * U[1 + k];
    const double M = std::sqrt(M2);
    if (!(D > 0.0) || !std::isfinite(E) || !std::isfinite(M))
        throw RecoveryError("cons_to_prim: D <= 0 or non-finite state", cell);

    // residual and derivative at p
    auto eval = [&](double p, double& dg) {
        const double ep = E + p;
        const double Q = std::sqrt((ep - M) * (ep + M));
        const double g = ep / Q;
        const double th = p * g / D;
        const double dth = (g - p * M2 / (Q * Q * Q)) / D;
        dg = (1.0 + eos.e_prime(th)) * dth - g / D;
        return eos.enthalpy(th) - Q / D;
    };

    double lo = std::max(1e-300, (M - E) * (1.0 + 1e-10));
    double dg = 0.0;
    double glo = eval(lo, dg);
    if (!(glo < 0.0)) {
        if (glo == 0.0) lo = std::nextafter(lo, 0.0);
        else throw RecoveryError("cons_to_prim: cannot bracket pressure (E + p <= |m|)", cell);
    }

    double p = (guess && *guess > lo) ? *guess : std::max(lo * 2.0, (E - D) / 3.0);
    if (!(p > lo)) p = 2.0 * lo + 1e-300;
    double gp = eval(p, dg);
    double dgp = dg;
    double hi = p;
    if (gp < 0.0) {
        lo = p;
        double ghi = gp;
        int grow = 0;
        while (ghi < 0.0) {
            if (ghi < 0.0) lo = hi;
            hi *= 4.0;
            ghi = eval(hi, dg);
            if (++grow > 600 || !std::isfinite(ghi))
                throw RecoveryError("cons_to_prim: no upper pressure bracket", cell);
        }
    }
    dg = dgp;

    bool converged = gp == 0.0;
    for (int it = 0; it < opt.max_iter && !converged; ++it) {
        double pn = p - gp / dg;
        if (!(pn > lo && pn < hi) || !std::isfinite(pn)) pn = 0.5 * (lo + hi);
        const double step = std::abs(pn - p);
        p = pn;
        gp = eval(p, dg);
        if (gp == 0.0 || step <= opt.rel_tol * p) converged = true;
        else if (gp < 0.0) lo = p;
        else hi = p;
        if (hi - lo <= opt.rel_tol * hi) converged = true;
    }
    if (!converged) throw RecoveryError("cons_to_prim: Newton iteration did not converge", cell);

    Prim<Dim> V;
    const double ep = E + p;
    for (int k = 0; k < Dim; ++k) V.v[k] = U[1 + k] / ep;
    V.rho = D * std::sqrt((ep - M) * (ep + M)) / ep;
    V.p = p;
    if (!is_admissible(V))
        throw RecoveryError("cons_to_prim: recovered state is not admissible", cell);
    return V;
}

}  // namespace esrhd
