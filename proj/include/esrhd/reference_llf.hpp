#pragma once

#include <string>
#include <vector>

#include "esrhd/cases.hpp"
#include "esrhd/state.hpp"

namespace esrhd {

/// Local Lax-Friedrichs flux; alpha is the larger max|lambda| of the two states.
template <int Dim>
Vec<Dim> llf_flux(const EosModel& eos, const Prim<Dim>& L, const Prim<Dim>& R, int dir);

struct LlfConfig {
    std::string case_id;
    int resolution = 0;  // cells; must be at least 10x the case resolution
    double cfl = 0.4;
};

struct LlfResult {
    std::vector<double> x;
    std::vector<Prim1> prims;
    double t = 0.0;
    int steps = 0;
};

/// First-order LLF with forward Euler to the case final time (1D cases).
/// Writes the profile to `out_path` (1D solution schema) if non-empty.
LlfResult llf_solve(const LlfConfig& cfg, const std::string& out_path = "");

/// Cell averages of fine-grid densities over `factor` consecutive cells.
std::vector<double> restrict_average(const std::vector<double>& fine, int factor);

}  // namespace esrhd
