#include "esrhd/eos.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "esrhd/errors.hpp"
#include "esrhd/means.hpp"

namespace esrhd {

namespace {

void check_theta(double theta) {
    if (!std::isfinite(theta) || theta < 0.0)
        throw DomainError("eos: theta must be finite and non-negative");
}

void check_z(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("eos: z2 arguments must be positive and finite");
}

// Shared shape of the IP and TM averages: e(1/z) = c/z - 1 + sqrt(1 + k^2/z^2)
// with (c, k) = (1, 2) for IP and (3/2, 3/2) for TM.
double sqrt_type_coefficient(double zl, double zr, double k, double c) {
    const double sl = std::sqrt(1.0 + k * k / (zl * zl));
    const double sr = std::sqrt(1.0 + k * k / (zr * zr));
    const double A = amean(sl, sr);
    const double B = amean(k / zl, k / zr);
    const double Z = amean(zl, zr);
    const double Lx = logmean(k / zl + sl, k / zr + sr);
    return c / logmean(zl, zr) + A - B / Z * (Z * B / A - k * (1.0 + B / A) / Lx);
}

}  // namespace

EosModel::EosModel(EosKind kind, double gamma) : kind_(kind), gamma_(gamma) {
    if (kind == EosKind::ID && !(gamma > 1.0 && gamma <= 2.0))
        throw DomainError("eos: ideal EOS requires 1 < gamma <= 2");
}

EosModel EosModel::from_name(const std::string& name, double gamma) {
    if (name == "id") return EosModel(EosKind::ID, gamma);
    if (name == "rc") return EosModel(EosKind::RC);
    if (name == "ip") return EosModel(EosKind::IP);
    if (name == "tm") return EosModel(EosKind::TM);
    throw DomainError("eos: unknown name '" + name + "' (valid: id, rc, ip, tm)");
}

std::string EosModel::name() const {
    switch (kind_) {
        case EosKind::ID: return "id";
        case EosKind::RC: return "rc";
        case EosKind::IP: return "ip";
        case EosKind::TM: return "tm";
    }
    return "?";
}

double EosModel::enthalpy(double t) const {
    return 1.0 + internal_energy(t) + t;
}

double EosModel::internal_energy(double t) const {
    check_theta(t);
    switch (kind_) {
        case EosKind::ID: return t / (gamma_ - 1.0);
        case EosKind::RC: return 3.0 * t * (3.0 * t + 1.0) / (3.0 * t + 2.0);
        case EosKind::IP: {
            // sqrt(1+4t^2) - 1 rewritten to avoid cancellation at small t
            const double s = std::sqrt(1.0 + 4.0 * t * t);
            return t + 4.0 * t * t / (s + 1.0);
        }
        case EosKind::TM: {
            const double s = std::sqrt(1.0 + 2.25 * t * t);
            return 1.5 * t + 2.25 * t * t / (s + 1.0);
        }
    }
    return 0.0;
}

double EosModel::e_prime(double t) const {
    check_theta(t);
    switch (kind_) {
        case EosKind::ID: return 1.0 / (gamma_ - 1.0);
        case EosKind::RC: {
            const double q = 3.0 * t + 2.0;
            return (27.0 * t * t + 36.0 * t + 6.0) / (q * q);
        }
        case EosKind::IP: return 1.0 + 4.0 * t / std::sqrt(1.0 + 4.0 * t * t);
        case EosKind::TM: return 1.5 + 2.25 * t / std::sqrt(1.0 + 2.25 * t * t);
    }
    return 0.0;
}

double EosModel::sound_speed_sq(double t) const {
    const double ep = e_prime(t);
    const double c2 = t * (1.0 + ep) / (enthalpy(t) * ep);
    if (!(c2 >= 0.0 && c2 < 1.0))
        throw InvariantError("eos: sound speed outside [0,1) at theta=" + std::to_string(t));
    return c2;
}

double EosModel::entropy_S(double rho, double t) const {
    if (!(rho > 0.0) || !(t > 0.0) || !std::isfinite(rho) || !std::isfinite(t))
        throw DomainError("eos: entropy needs rho > 0 and theta > 0");
    const double lr = std::log(rho);
    switch (kind_) {
        case EosKind::ID: return -lr + std::log(t) / (gamma_ - 1.0);
        case EosKind::RC: {
            const double q = 3.0 * t + 2.0;
            return -lr + 1.5 * std::log(t) + 1.5 * std::log(q) - 3.0 / q;
        }
        case EosKind::IP: return -lr + std::log(t) + 2.0 * std::asinh(2.0 * t);
        case EosKind::TM: return -lr + 1.5 * std::log(t) + 1.5 * std::asinh(1.5 * t);
    }
    return 0.0;
}

double EosModel::ec_coefficient(double zl, double zr) const {
    check_z(zl, zr);
    switch (kind_) {
        case EosKind::ID: return 1.0 + 1.0 / ((gamma_ - 1.0) * logmean(zl, zr));
        case EosKind::RC:
            return 1.0 + 3.0 / logmean(zl, zr) - 3.0 / logmean(2.0 * zl + 3.0, 2.0 * zr + 3.0);
        case EosKind::IP: return sqrt_type_coefficient(zl, zr, 2.0, 1.0);
        case EosKind::TM: return sqrt_type_coefficient(zl, zr, 1.5, 1.5);
    }
    return 0.0;
}

double EosModel::ec_coefficient_quadrature(double zl, double zr) const {
    check_z(zl, zr);
    using GL = boost::math::quadrature::gauss<double, 16>;
    const double ll = std::log(zl), lr = std::log(zr);
    const double width = lr - ll;
    if (std::abs(width) < 1.0) {
        if (zl == zr) return 1.0 + internal_energy(1.0 / zl);
        auto f = [&](double s) { return internal_energy(1.0 / (zl + s * (zr - zl))); };
        return 1.0 + GL::integrate(f, 0.0, 1.0);
    }
    // Wide ranges: integrate in u = ln z, where e(1/z) z is smooth on unit panels.
    const int panels = static_cast<int>(std::ceil(std::abs(width)));
    const double du = width / panels;
    auto g = [&](double u) {
        const double z = std::exp(u);
        return internal_energy(1.0 / z) * z;
    };
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) sum += GL::integrate(g, ll + k * du, ll + (k + 1) * du);
    return 1.0 + sum / (zr - zl);
}

}  // namespace esrhd
