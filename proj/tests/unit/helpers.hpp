#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "esrhd/eos.hpp"
#include "esrhd/types.hpp"

namespace testing {

inline const std::vector<esrhd::EosModel>& all_eos() {
    static const std::vector<esrhd::EosModel> v{esrhd::EosModel(esrhd::EosKind::ID), esrhd::EosModel(esrhd::EosKind::RC),
                                                esrhd::EosModel(esrhd::EosKind::IP), esrhd::EosModel(esrhd::EosKind::TM)};
    return v;
}

/// Log-uniform rho and theta, |v| <= vmax in a random direction.
template <int Dim>
esrhd::Prim<Dim> random_state(std::mt19937_64& rng, double vmax = 0.99, double th_lo = 1e-3, double th_hi = 1e3) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    esrhd::Prim<Dim> V;
    V.rho = std::exp(std::log(1e-2) + u(rng) * std::log(1e4));
    const double th = std::exp(std::log(th_lo) + u(rng) * std::log(th_hi / th_lo));
    V.p = V.rho * th;
    const double speed = vmax * u(rng);
    if constexpr (Dim == 1) {
        V.v[0] = u(rng) < 0.5 ? -speed : speed;
    } else {
        const double a = 2.0 * M_PI * u(rng);
        V.v = {speed * std::cos(a), speed * std::sin(a)};
    }
    return V;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace testing
