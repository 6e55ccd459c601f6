#pragma once

#include <span>

#include "esrhd/dissipation.hpp"
#include "esrhd/flux_ec.hpp"

namespace esrhd {

enum class ReconKind {
    Jump,   // first order: <<w>> = [[w]]
    Eno4,   // fourth-order ENO
    Weno5,  // fifth-order WENO with the sign switch
};

struct FaceValues {
    double minus;  // reconstructed from the left cell
    double plus;   // reconstructed from the right cell
};

/// ENO coefficient c_{r,j}: value at the right face of cell i from the cells
/// i-r .. i-r+order-1; r ranges over -1 .. order-1.
double eno_coefficient(int order, int r, int j);

/// ENO face values of order `order` (1..6). `v` holds 2*order values with
/// the interface between v[order-1] and v[order].
FaceValues eno_reconstruct(std::span<const double> v, int order);

/// WENO5 (smoothness weights, eps = 1e-6, power 2). `v` holds 6 values with
/// the interface between v[2] and v[3].
FaceValues weno5_reconstruct(std::span<const double> v);

/// theta (plus - minus), theta = 1 if (plus - minus) * jump > 0 else 0.
inline double sign_switch(double minus, double plus, double jump) {
    const double d = plus - minus;
    return d * jump > 0.0 ? d : 0.0;
}

/// Stencil half-width used by a reconstruction kind.
int recon_half_width(ReconKind kind);

/// omega_j = R^T W_j for each stencil cell.
template <int Dim>
void scale_entropy_vars(const Mat<Dim>& R, std::span<const Vec<Dim>> W, std::span<Vec<Dim>> omega) {
    for (std::size_t j = 0; j < W.size(); ++j) omega[j] = R.transpose() * W[j];
}

/// <<omega>> componentwise. `omega` holds 2w values, interface between w-1 and w.
template <int Dim>
Vec<Dim> scaled_jump(ReconKind kind, std::span<const Vec<Dim>> omega) {
    const int w = static_cast<int>(omega.size()) / 2;
    Vec<Dim> out;
    for (int c = 0; c < Dim + 2; ++c) {
        const double jmp = omega[w][c] - omega[w - 1][c];
        if (kind == ReconKind::Jump) {
            out[c] = jmp;
            continue;
        }
        double buf[8];
        const int order = kind == ReconKind::Eno4 ? 4 : 3;
        for (int j = 0; j < 2 * order; ++j) buf[j] = omega[w - order + j][c];
        if (kind == ReconKind::Eno4) {
            const FaceValues f = eno_reconstruct(std::span<const double>(buf, 8), 4);
            out[c] = f.plus - f.minus;
        } else {
            const FaceValues f = weno5_reconstruct(std::span<const double>(buf, 6));
            out[c] = sign_switch(f.minus, f.plus, jmp);
        }
    }
    return out;
}

/// High-order entropy stable flux F_ec^{2k} - coef R |Lambda| <<omega>>.
/// `stencil` holds 2w states with w >= max(k, recon half width), the
/// interface between stencil[w-1] and stencil[w]. coef = 1/2 gives the ES flux.
template <int Dim>
Vec<Dim> es_flux(const EosModel& eos, std::span<const Prim<Dim>> stencil, int k, ReconKind kind,
                 DissipationMode mode, int dir, double coef = 0.5) {
    const int w = static_cast<int>(stencil.size()) / 2;
    if (w < k || w < recon_half_width(kind))
        throw DomainError("es_flux: stencil too narrow");
    const Vec<Dim> Fec = highorder_ec_flux<Dim>(eos, stencil.subspan(w - k, 2 * k), k, dir);
    const ScaledEigs<Dim> eigs =
        scaled_eigenvectors<Dim>(interface_average(eos, stencil[w - 1], stencil[w]), dir);
    Vec<Dim> omega[8];
    for (int j = 0; j < 2 * w; ++j) omega[j] = eigs.R.transpose() * entropy_vars(eos, stencil[j]);
    const Vec<Dim> jmp = scaled_jump<Dim>(kind, std::span<const Vec<Dim>>(omega, 2 * w));
    return Fec - coef * (eigs.R * (abs_lambda(eigs, mode).asDiagonal() * jmp));
}

}  // namespace esrhd
