#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esrhd/diagnostics.hpp"
#include "esrhd/solver.hpp"

namespace esrhd {

enum class Integrator { SSPRK3, RRK3, Euler };

Integrator integrator_from_name(const std::string& name);
std::string integrator_name(Integrator it);

struct RelaxationInfo {
    int iterations = 0;
    double residual = 0.0;
    std::vector<double> history;  // residuals of the iterates
};

/// Root of r near 1, bracketed on [0.9, 1.1] and then [0.5, 1.5].
/// Newton iteration with a secant slope, safeguarded by bisection.
double solve_relaxation(const std::function<double(double)>& r, RelaxationInfo* info = nullptr);

/// Integrators with reusable stage buffers.
class TimeStepper {
public:
    /// u <- SSP-RK3 step of size dt from time t.
    void ssp_rk3(OdeSystem& sys, std::vector<double>& u, double t, double dt);
    /// Relaxation RK3 step; returns gamma_n. With force_unit_gamma the
    /// relaxation is skipped (gamma = 1).
    double rrk3(OdeSystem& sys, std::vector<double>& u, double t, double dt, bool force_unit_gamma = false,
                RelaxationInfo* info = nullptr);
    void euler(OdeSystem& sys, std::vector<double>& u, double t, double dt);

private:
    std::vector<double> u0_, u1_, u2_, L0_, L1_, L2_, d_;
};

struct DriverOptions {
    Integrator integrator = Integrator::SSPRK3;
    double t_final = 0.0;
    /// Step size for the current state.
    std::function<double(std::span<const double>)> dt_rule;
    bool record_entropy = true;
    /// Called after every accepted step with (step, t, u).
    std::function<void(int, double, std::span<const double>)> on_step;
    int max_steps = 100000000;
    /// RRK3 only: halvings of a step whose relaxation equation has no root.
    int max_step_halvings = 8;
};

struct DriverResult {
    double t = 0.0;
    int steps = 0;
    EntropyTrace trace;
};

/// March u from t0 to t_final, clipping the last step to land on t_final.
/// With RRK3 time advances by gamma_n dt except on the final step.
DriverResult integrate(OdeSystem& sys, std::vector<double>& u, double t0, const DriverOptions& opt);

}  // namespace esrhd
