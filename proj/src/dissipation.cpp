#include "esrhd/dissipation.hpp"

#include <cmath>
#include <sstream>

#include "esrhd/flux_ec.hpp"
#include "esrhd/means.hpp"

namespace esrhd {

DissipationMode dissipation_from_name(const std::string& name) {
    if (name == "roe") return DissipationMode::Roe;
    if (name == "rusanov") return DissipationMode::Rusanov;
    throw DomainError("unknown dissipation '" + name + "' (valid: roe, rusanov)");
}

std::string dissipation_name(DissipationMode mode) {
    return mode == DissipationMode::Roe ? "roe" : "rusanov";
}

template <int Dim>
EigenInput<Dim> eigen_input(const EosModel& eos, const Prim<Dim>& V) {
    EigenInput<Dim> s;
    s.rho = V.rho;
    s.theta = V.theta();
    s.v = V.v;
    s.h = eos.enthalpy(s.theta);
    s.ep = eos.e_prime(s.theta);
    s.cs2 = eos.sound_speed_sq(s.theta);
    return s;
}

template <int Dim>
EigenInput<Dim> interface_average(const EosModel& eos, const Prim<Dim>& L, const Prim<Dim>& R) {
    const double z2L = L.rho / L.p, z2R = R.rho / R.p;
    EigenInput<Dim> s;
    s.rho = logmean(L.rho, R.rho);
    s.theta = 1.0 / logmean(z2L, z2R);
    for (int k = 0; k < Dim; ++k) s.v[k] = amean(L.v[k], R.v[k]);
    s.h = eos.ec_coefficient(z2L, z2R) + s.theta;
    s.ep = eos.e_prime(s.theta);
    s.cs2 = s.theta * (1.0 + s.ep) / (s.h * s.ep);
    if (!(s.cs2 > 0.0 && s.cs2 < 1.0))
        throw InvariantError("interface_average: averaged sound speed outside (0,1)");
    return s;
}

namespace {

std::string dump_state(const double* v, int n, double rho, double theta, double h) {
    std::ostringstream os;
    os.precision(17);
    os << " [rho=" << rho << " theta=" << theta << " h=" << h << " v=(";
    for (int k = 0; k < n; ++k) os << (k ? "," : "") << v[k];
    os << ")]";
    return os.str();
}

// x-direction eigenvalues for velocity (a, b), a being the normal component.
void normal_eigenvalues(double a, double b, double c2, double& lm, double& lp) {
    const double c = std::sqrt(c2);
    const double vv = a * a + b * b;
    const double q = std::sqrt((1.0 - vv) * (1.0 - a * a - b * b * c2));
    const double den = 1.0 - vv * c2;
    lm = (a * (1.0 - c2) - c * q) / den;
    lp = (a * (1.0 - c2) + c * q) / den;
}

}  // namespace

template <>
Vec<1> eigenvalues<1>(const EigenInput<1>& s, int) {
    const double c = std::sqrt(s.cs2), v = s.v[0];
    return Vec<1>((v - c) / (1.0 - v * c), v, (v + c) / (1.0 + v * c));
}

template <>
Vec<2> eigenvalues<2>(const EigenInput<2>& s, int dir) {
    const double a = s.v[dir], b = s.v[1 - dir];
    double lm, lp;
    normal_eigenvalues(a, b, s.cs2, lm, lp);
    return Vec<2>(lm, a, a, lp);
}

template <>
ScaledEigs<1> scaled_eigenvectors<1>(const EigenInput<1>& s, int) {
    const double r = s.rho, t = s.theta, h = s.h, ep = s.ep, v = s.v[0];
    const double c = std::sqrt(s.cs2);
    const double g = 1.0 / std::sqrt(1.0 - v * v);
    const double dth = h - t * (1.0 + ep);
    Mat<1> Rt;
    Rt << 1.0, 1.0, 1.0,
          (v - c) * h * g, dth * g * v, (v + c) * h * g,
          (1.0 - v * c) * h * g, dth * g, (1.0 + v * c) * h * g;
    const double base = r * ep / (2.0 * (1.0 + ep));
    const double skew = r * t * v / (2.0 * c * h);
    ScaledEigs<1> out;
    out.d << (base - skew) * g, r * g / (1.0 + ep), (base + skew) * g;
    if ((out.d.array() < 0.0).any())
        throw InvariantError("scaled_eigenvectors: negative scaling coefficient" +
                             dump_state(s.v.data(), 1, r, t, h));
    out.R = Rt * out.d.cwiseSqrt().asDiagonal();
    out.lambda = eigenvalues<1>(s, 0);
    return out;
}

template <>
ScaledEigs<2> scaled_eigenvectors<2>(const EigenInput<2>& s, int dir) {
    const double r = s.rho, t = s.theta, h = s.h, ep = s.ep, c2 = s.cs2;
    const double c = std::sqrt(c2);
    // build in the frame where the normal velocity comes first
    const double v1 = s.v[dir], v2 = s.v[1 - dir];
    const double vv = v1 * v1 + v2 * v2;
    const double g = 1.0 / std::sqrt(1.0 - vv);
    double l1, l4;
    normal_eigenvalues(v1, v2, c2, l1, l4);
    const double n1 = std::max(1.0 - v1 * v1, 1e-14);
    const double D1 = n1 / (1.0 - v1 * l1);
    const double D4 = n1 / (1.0 - v1 * l4);
    const double dth = h - t * (1.0 + ep);
    Mat<2> Rt;
    Rt << 1.0, 1.0 / g, g * v2, 1.0,
          h * g * D1 * l1, dth * v1, 2.0 * h * g * g * v1 * v2, h * g * D4 * l4,
          h * g * v2, dth * v2, h * (1.0 + 2.0 * g * g * v2 * v2), h * g * v2,
          h * g * D1, dth, 2.0 * h * g * g * v2, h * g * D4;
    const double M = r * g * (ep / (1.0 + ep) - t * v2 * v2 / (h * n1));
    const double N = r * t * v1 * std::sqrt(1.0 - v1 * v1 - v2 * v2 * c2) / (h * c * n1);
    ScaledEigs<2> out;
    out.d << 0.5 * (M - N), r * g * g * g / (1.0 + ep), r * t / (h * n1 * g), 0.5 * (M + N);
    if ((out.d.array() < 0.0).any())
        throw InvariantError("scaled_eigenvectors: negative scaling coefficient" +
                             dump_state(s.v.data(), 2, r, t, h));
    out.R = Rt * out.d.cwiseSqrt().asDiagonal();
    if (dir == 1) out.R.row(1).swap(out.R.row(2));
    out.lambda << l1, v1, v1, l4;
    return out;
}

template <int Dim>
Vec<Dim> es_flux_first_order(const EosModel& eos, const Prim<Dim>& L, const Prim<Dim>& R, int dir,
                             DissipationMode mode) {
    const ScaledEigs<Dim> eigs = scaled_eigenvectors<Dim>(interface_average(eos, L, R), dir);
    const Vec<Dim> dW = entropy_vars(eos, R) - entropy_vars(eos, L);
    return ec_flux(eos, L, R, dir) -
           0.5 * (eigs.R * (abs_lambda(eigs, mode).asDiagonal() * (eigs.R.transpose() * dW)));
}

template EigenInput<1> eigen_input<1>(const EosModel&, const Prim<1>&);
template EigenInput<2> eigen_input<2>(const EosModel&, const Prim<2>&);
template EigenInput<1> interface_average<1>(const EosModel&, const Prim<1>&, const Prim<1>&);
template EigenInput<2> interface_average<2>(const EosModel&, const Prim<2>&, const Prim<2>&);
template Vec<1> es_flux_first_order<1>(const EosModel&, const Prim<1>&, const Prim<1>&, int, DissipationMode);
template Vec<2> es_flux_first_order<2>(const EosModel&, const Prim<2>&, const Prim<2>&, int, DissipationMode);

}  // namespace esrhd
