#include "esrhd/timeint.hpp"

#include <cmath>
#include <sstream>

#include "esrhd/errors.hpp"

namespace esrhd {

Integrator integrator_from_name(const std::string& name) {
    if (name == "ssprk3") return Integrator::SSPRK3;
    if (name == "rrk3") return Integrator::RRK3;
    if (name == "euler") return Integrator::Euler;
    throw DomainError("unknown time_integrator '" + name + "' (valid: ssprk3, rrk3)");
}

std::string integrator_name(Integrator it) {
    switch (it) {
        case Integrator::SSPRK3: return "ssprk3";
        case Integrator::RRK3: return "rrk3";
        case Integrator::Euler: return "euler";
    }
    return "?";
}

double solve_relaxation(const std::function<double(double)>& r, RelaxationInfo* info) {
    RelaxationInfo local;
    RelaxationInfo& inf = info ? *info : local;
    inf = RelaxationInfo{};

    double x = 1.0;
    double fx = r(x);
    inf.history.push_back(fx);
    if (fx == 0.0) return x;

    double lo = 0.9, hi = 1.1;
    double flo = r(lo), fhi = r(hi);
    if (flo * fhi > 0.0) {
        lo = 0.5;
        hi = 1.5;
        flo = r(lo);
        fhi = r(hi);
    }
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw RelaxationError("relaxation: no sign change on [0.5, 1.5]; reduce the time step");

    // narrow the bracket with the value at 1
    double xp = (fx * flo < 0.0) ? lo : hi;
    double fp = (fx * flo < 0.0) ? flo : fhi;
    if (fx * flo < 0.0) {
        hi = x;
        fhi = fx;
    } else {
        lo = x;
        flo = fx;
    }

    for (int it = 0; it < 100; ++it) {
        inf.iterations = it + 1;
        const double slope = (fx - fp) / (x - xp);
        double xn = x - fx / slope;
        if (!std::isfinite(xn) || xn <= std::min(lo, hi) || xn >= std::max(lo, hi)) xn = 0.5 * (lo + hi);
        const double fn = r(xn);
        inf.history.push_back(fn);
        const double step = std::abs(xn - x);
        xp = x;
        fp = fx;
        x = xn;
        fx = fn;
        if (fn == 0.0 || step < 1e-15 || std::abs(hi - lo) < 1e-15) {
            inf.residual = fn;
            return x;
        }
        if (fn * flo < 0.0) {
            hi = xn;
            fhi = fn;
        } else {
            lo = xn;
            flo = fn;
        }
    }
    throw RelaxationError("relaxation: root solve did not converge; reduce the time step");
}

namespace {

void resize_all(std::size_t n, std::initializer_list<std::vector<double>*> v) {
    for (auto* p : v) p->resize(n);
}

}  // namespace

void TimeStepper::euler(OdeSystem& sys, std::vector<double>& u, double t, double dt) {
    resize_all(u.size(), {&L0_});
    sys.rhs(t, u, L0_);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += dt * L0_[i];
}

void TimeStepper::ssp_rk3(OdeSystem& sys, std::vector<double>& u, double t, double dt) {
    const std::size_t n = u.size();
    resize_all(n, {&u1_, &u2_, &L0_});
    sys.rhs(t, u, L0_);
    for (std::size_t i = 0; i < n; ++i) u1_[i] = u[i] + dt * L0_[i];
    sys.rhs(t + dt, u1_, L0_);
    for (std::size_t i = 0; i < n; ++i) u2_[i] = 0.75 * u[i] + 0.25 * (u1_[i] + dt * L0_[i]);
    sys.rhs(t + 0.5 * dt, u2_, L0_);
    for (std::size_t i = 0; i < n; ++i) u[i] = u[i] / 3.0 + 2.0 / 3.0 * (u2_[i] + dt * L0_[i]);
}

double TimeStepper::rrk3(OdeSystem& sys, std::vector<double>& u, double t, double dt, bool force_unit_gamma,
                         RelaxationInfo* info) {
    const std::size_t n = u.size();
    resize_all(n, {&u1_, &u2_, &L0_, &L1_, &L2_, &d_});
    const double e0 = sys.rhs(t, u, L0_);
    for (std::size_t i = 0; i < n; ++i) u1_[i] = u[i] + dt * L0_[i];
    const double e1 = sys.rhs(t + dt, u1_, L1_);
    for (std::size_t i = 0; i < n; ++i) u2_[i] = 0.75 * u[i] + 0.25 * (u1_[i] + dt * L1_[i]);
    const double e2 = sys.rhs(t + 0.5 * dt, u2_, L2_);

    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
        d_[i] = dt / 6.0 * (L0_[i] + L1_[i] + 4.0 * L2_[i]);
        if (d_[i] != 0.0) zero = false;
    }
    double gamma = 1.0;
    if (!force_unit_gamma && !zero) {
        const double eps = dt / 6.0 * (e0 + e1 + 4.0 * e2);
        const auto dS = sys.entropy_change_fn(u, d_);
        auto r = [&](double g) { return dS(g) - g * eps; };
        RelaxationInfo local;
        RelaxationInfo& inf = info ? *info : local;
        gamma = solve_relaxation(r, &inf);
        const double etot = sys.entropy(u);
        if (std::abs(inf.residual) >= 1e-12 * (1.0 + std::abs(etot))) {
            std::ostringstream os;
            os << "relaxation: residual " << inf.residual << " above tolerance at t=" << t;
            throw RelaxationError(os.str());
        }
    }
    for (std::size_t i = 0; i < n; ++i) u[i] += gamma * d_[i];
    return gamma;
}

DriverResult integrate(OdeSystem& sys, std::vector<double>& u, double t0, const DriverOptions& opt) {
    if (!opt.dt_rule) throw DomainError("integrate: dt_rule required");
    DriverResult res;
    res.t = t0;
    TimeStepper stepper;
    if (opt.record_entropy) res.trace.append(t0, sys.entropy(u));
    const double tol = 1e-13 * std::max(1.0, std::abs(opt.t_final));
    while (res.t < opt.t_final - tol) {
        if (res.steps >= opt.max_steps) throw DomainError("integrate: step limit reached");
        double dt = opt.dt_rule(u);
        if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("integrate: non-positive time step");
        bool last = false;
        if (res.t + dt >= opt.t_final - tol) {
            dt = opt.t_final - res.t;
            last = true;
        }
        std::optional<double> gamma;
        switch (opt.integrator) {
            case Integrator::SSPRK3: stepper.ssp_rk3(sys, u, res.t, dt); break;
            case Integrator::Euler: stepper.euler(sys, u, res.t, dt); break;
            case Integrator::RRK3:
                // no relaxation root near 1: retry from u with a halved step
                for (int k = 0;; ++k) {
                    try {
                        gamma = stepper.rrk3(sys, u, res.t, dt);
                        break;
                    } catch (const RelaxationError&) {
                        if (k >= opt.max_step_halvings) throw;
                        dt *= 0.5;
                        last = false;
                    }
                }
                break;
        }
        res.t = last ? opt.t_final : res.t + (gamma ? *gamma : 1.0) * dt;
        if (res.t > opt.t_final) res.t = opt.t_final;
        ++res.steps;
        if (opt.record_entropy) res.trace.append(res.t, sys.entropy(u), gamma);
        if (opt.on_step) opt.on_step(res.steps, res.t, u);
    }
    return res;
}

}  // namespace esrhd
