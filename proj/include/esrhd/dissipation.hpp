#pragma once

#include <string>

#include "esrhd/eos.hpp"
#include "esrhd/state.hpp"
#include "esrhd/types.hpp"

namespace esrhd {

enum class DissipationMode { Roe, Rusanov };

DissipationMode dissipation_from_name(const std::string& name);
std::string dissipation_name(DissipationMode mode);

/// State data the eigenstructure is built from.  For a physical state h is
/// h(theta); at an interface h is the contact-preserving average instead.
template <int Dim>
struct EigenInput {
    double rho = 1.0;
    double theta = 1.0;
    std::array<double, Dim> v{};
    double h = 1.0;
    double ep = 1.0;   // e'(theta)
    double cs2 = 0.0;  // theta (1 + e') / (h e')
};

template <int Dim>
EigenInput<Dim> eigen_input(const EosModel& eos, const Prim<Dim>& V);

/// Interface state: log-mean rho, theta = 1/logmean(z2), arithmetic-mean v,
/// h = E(z2L, z2R) + theta.
template <int Dim>
EigenInput<Dim> interface_average(const EosModel& eos, const Prim<Dim>& L, const Prim<Dim>& R);

template <int Dim>
struct ScaledEigs {
    Mat<Dim> R;        // R R^T = dU/dW
    Vec<Dim> lambda;   // eigenvalues in printed order
    Vec<Dim> d;        // scaling coefficients, R = Rtilde sqrt(diag(d))
};

template <int Dim>
Vec<Dim> eigenvalues(const EigenInput<Dim>& s, int dir);

template <int Dim>
Vec<Dim> eigenvalues(const EosModel& eos, const Prim<Dim>& V, int dir) {
    return eigenvalues<Dim>(eigen_input(eos, V), dir);
}

/// Throws InvariantError if a scaling coefficient is negative.
template <int Dim>
ScaledEigs<Dim> scaled_eigenvectors(const EigenInput<Dim>& s, int dir);

template <int Dim>
ScaledEigs<Dim> scaled_eigenvectors(const EosModel& eos, const Prim<Dim>& V, int dir) {
    return scaled_eigenvectors<Dim>(eigen_input(eos, V), dir);
}

template <> Vec<1> eigenvalues<1>(const EigenInput<1>& s, int dir);
template <> Vec<2> eigenvalues<2>(const EigenInput<2>& s, int dir);
template <> ScaledEigs<1> scaled_eigenvectors<1>(const EigenInput<1>& s, int dir);
template <> ScaledEigs<2> scaled_eigenvectors<2>(const EigenInput<2>& s, int dir);

/// Diagonal of |Lambda| for the chosen mode.
template <int Dim>
Vec<Dim> abs_lambda(const ScaledEigs<Dim>& eigs, DissipationMode mode) {
    Vec<Dim> a = eigs.lambda.cwiseAbs();
    if (mode == DissipationMode::Rusanov) a.setConstant(a.maxCoeff());
    return a;
}

/// D = R |Lambda| R^T.
template <int Dim>
Mat<Dim> dissipation_matrix(const ScaledEigs<Dim>& eigs, DissipationMode mode) {
    return eigs.R * abs_lambda(eigs, mode).asDiagonal() * eigs.R.transpose();
}

/// max |lambda| over the eigenvalues of a physical state.
template <int Dim>
double max_speed(const EosModel& eos, const Prim<Dim>& V, int dir) {
    return eigenvalues(eos, V, dir).cwiseAbs().maxCoeff();
}

/// First-order entropy stable flux: F_ec - 1/2 D [[W]] at the averaged interface.
template <int Dim>
Vec<Dim> es_flux_first_order(const EosModel& eos, const Prim<Dim>& L, const Prim<Dim>& R, int dir,
                             DissipationMode mode);

}  // namespace esrhd
