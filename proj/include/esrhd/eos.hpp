#pragma once

#include <string>

namespace esrhd {

enum class EosKind { ID, RC, IP, TM };

/// Synge-type equation of state: specific enthalpy depends on theta = p/rho only.
class EosModel {
public:
    /// `gamma` is used only by the ideal EOS and must lie in (1, 2].
    explicit EosModel(EosKind kind, double gamma = 5.0 / 3.0);

    /// Build from "id", "rc", "ip" or "tm".
    static EosModel from_name(const std::string& name, double gamma = 5.0 / 3.0);

    EosKind kind() const { return kind_; }
    double gamma() const { return gamma_; }
    std::string name() const;

    double enthalpy(double theta) const;
    double internal_energy(double theta) const;
    double e_prime(double theta) const;
    /// c_s^2 = theta (1 + e') / (h e'); throws InvariantError outside (0, 1).
    double sound_speed_sq(double theta) const;
    /// Specific entropy S(rho, theta) with the usual closed-form constants.
    double entropy_S(double rho, double theta) const;

    /// Path average 1 + int_0^1 e(1/z(s)) ds with z linear between z2L and z2R.
    double ec_coefficient(double z2L, double z2R) const;
    /// The same average by composite 16-point Gauss-Legendre. Not exactly
    /// entropy conservative when used inside a flux.
    double ec_coefficient_quadrature(double z2L, double z2R) const;

private:
    EosKind kind_;
    double gamma_;
};

}  // namespace esrhd
