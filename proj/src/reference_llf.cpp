#include "esrhd/reference_llf.hpp"

#include <algorithm>

#include "esrhd/csv_io.hpp"
#include "esrhd/dissipation.hpp"
#include "esrhd/errors.hpp"
#include "esrhd/solver.hpp"
#include "esrhd/timeint.hpp"

namespace esrhd {

template <int Dim>
Vec<Dim> llf_flux(const EosModel& eos, const Prim<Dim>& L, const Prim<Dim>& R, int dir) {
    const double alpha = std::max(max_speed(eos, L, dir), max_speed(eos, R, dir));
    return 0.5 * (flux(eos, L, dir) + flux(eos, R, dir)) - 0.5 * alpha * (prim_to_cons(eos, R) - prim_to_cons(eos, L));
}

template Vec<1> llf_flux<1>(const EosModel&, const Prim<1>&, const Prim<1>&, int);
template Vec<2> llf_flux<2>(const EosModel&, const Prim<2>&, const Prim<2>&, int);

LlfResult llf_solve(const LlfConfig& cfg, const std::string& out_path) {
    const CaseSpec& cs = find_case(cfg.case_id);
    if (cs.dim != 1) throw DomainError("llf_solve: only 1D cases are supported");
    if (cfg.resolution < 10 * cs.n[0])
        throw DomainError("llf_solve: resolution must be at least 10x the case resolution (" +
                          std::to_string(10 * cs.n[0]) + ")");
    const EosModel eos = cs.eos_model();
    const Grid<1> grid({cfg.resolution}, {cs.lo[0]}, {cs.hi[0]}, 1);
    SemiDiscrete<1> sys(grid, eos, Scheme::from_name("llf"), DissipationMode::Rusanov, cs.bc1);

    std::vector<Prim1> init(grid.interior_cells());
    for (int i = 0; i < grid.n[0]; ++i) init[i] = cs.sample1(grid.center(0, i), 0.0);
    std::vector<double> u = sys.pack(init);

    DriverOptions opt;
    opt.integrator = Integrator::Euler;
    opt.t_final = cs.t_final;
    opt.record_entropy = false;
    opt.dt_rule = [&](std::span<const double> s) { return sys.cfl_dt(s, cfg.cfl); };
    const DriverResult dr = integrate(sys, u, 0.0, opt);

    LlfResult res;
    res.prims = sys.unpack(u);
    res.t = dr.t;
    res.steps = dr.steps;
    for (int i = 0; i < grid.n[0]; ++i) res.x.push_back(grid.center(0, i));
    if (!out_path.empty()) write_solution_1d(out_path, grid, res.prims, eos);
    return res;
}

std::vector<double> restrict_average(const std::vector<double>& fine, int factor) {
    if (factor < 1 || fine.size() % static_cast<std::size_t>(factor) != 0)
        throw DomainError("restrict_average: size not divisible by factor");
    std::vector<double> out(fine.size() / factor, 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        double s = 0.0;
        for (int k = 0; k < factor; ++k) s += fine[i * factor + k];
        out[i] = s / factor;
    }
    return out;
}

}  // namespace esrhd
