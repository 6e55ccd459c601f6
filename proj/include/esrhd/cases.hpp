#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "esrhd/eos.hpp"
#include "esrhd/grid.hpp"
#include "esrhd/solver.hpp"
#include "esrhd/types.hpp"

namespace esrhd {

enum class ReferencePolicy { Exact, Llf, None };

struct CaseSpec {
    std::string id;
    std::string description;
    int dim = 1;
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{1.0, 1.0};
    std::array<int, 2> n{400, 1};
    std::string eos = "id";
    double gamma = 5.0 / 3.0;
    double t_final = 0.4;
    double cfl = 0.4;
    ReferencePolicy reference = ReferencePolicy::None;
    BoundarySpec<1> bc1 = BoundarySpec<1>::all(BcKind::Outflow);
    BoundarySpec<2> bc2 = BoundarySpec<2>::all(BcKind::Outflow);
    /// Primitive state at (x, t); only t = 0 is required unless reference is Exact.
    std::function<Prim1(double x, double t)> sample1;
    std::function<Prim2(double x, double y, double t)> sample2;
    std::vector<double> snapshot_times;

    EosModel eos_model() const { return EosModel::from_name(eos, gamma); }
};

const std::vector<CaseSpec>& catalog();
/// Throws DomainError naming the known ids.
const CaseSpec& find_case(const std::string& id);

/// J- = atanh(v) - ln((sqrt(G-1) + c)/(sqrt(G-1) - c)) / sqrt(G-1) for the ideal EOS.
double riemann_invariant_minus(double gamma, double v, double cs);

/// Velocity of the isentropic pulse at density rho with p = K rho^gamma,
/// holding J- at its value for the ambient state (rho = 1, v = 0).
double isentropic_velocity(double gamma, double K, double rho);

/// F_ec - c(t) D [[W]] with c(t) = 3/5 sin(50t) (RF) or 6/5 sin(7.6t + 0.1) (RP3).
template <int Dim>
Vec<Dim> non_es_flux(NonEsVariant variant, double t, const Vec<Dim>& f_ec, const Mat<Dim>& D, const Vec<Dim>& dW) {
    return f_ec - non_es_coefficient(variant, t) * (D * dW);
}

}  // namespace esrhd
