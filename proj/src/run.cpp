#include "esrhd/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>

#include <fmt/format.h>

#include "esrhd/cases.hpp"
#include "esrhd/csv_io.hpp"
#include "esrhd/errors.hpp"
#include "esrhd/reference_llf.hpp"
#include "esrhd/solver.hpp"
#include "esrhd/timeint.hpp"

namespace fs = std::filesystem;

namespace esrhd {

namespace {

std::string time_tag(double t) { return fmt::format("{:.6g}", t); }

template <int Dim>
Grid<Dim> make_grid(const CaseSpec& cs, const RunConfig& cfg) {
    if constexpr (Dim == 1) {
        return Grid<1>({cfg.nx.value_or(cs.n[0])}, {cs.lo[0]}, {cs.hi[0]});
    } else {
        const int nx = cfg.nx.value_or(cs.n[0]);
        int ny = cs.n[1];
        if (cfg.ny) ny = *cfg.ny;
        else if (cfg.nx) ny = std::max(1, static_cast<int>(std::lround(double(nx) * cs.n[1] / cs.n[0])));
        return Grid<2>({nx, ny}, {cs.lo[0], cs.lo[1]}, {cs.hi[0], cs.hi[1]});
    }
}

template <int Dim>
std::vector<Prim<Dim>> sample(const CaseSpec& cs, const Grid<Dim>& g, double t) {
    std::vector<Prim<Dim>> out(g.interior_cells());
    if constexpr (Dim == 1) {
        for (int i = 0; i < g.n[0]; ++i) out[i] = cs.sample1(g.center(0, i), t);
    } else {
        for (int j = 0; j < g.n[1]; ++j)
            for (int i = 0; i < g.n[0]; ++i) out[g.interior_index(i, j)] = cs.sample2(g.center(0, i), g.center(1, j), t);
    }
    return out;
}

template <int Dim>
void write_solution(const std::string& path, const Grid<Dim>& g, const std::vector<Prim<Dim>>& prims,
                    const EosModel& eos) {
    if constexpr (Dim == 1) write_solution_1d(path, g, prims, eos);
    else write_solution_2d(path, g, prims);
}

void append_trace(EntropyTrace& into, const EntropyTrace& seg) {
    for (const auto& s : seg.samples()) {
        if (!into.empty() && s.t == into.samples().back().t && !s.gamma_n) continue;
        into.append(s.t, s.total, s.gamma_n);
    }
}

template <int Dim>
RunOutcome run_dim(const RunConfig& cfg, const CaseSpec& cs, bool write_files) {
    const EosModel eos = EosModel::from_name(cfg.eos.value_or(cs.eos), cfg.gamma.value_or(cs.gamma));
    const Scheme scheme = Scheme::from_name(cfg.scheme);
    const DissipationMode mode = dissipation_from_name(cfg.dissipation);
    const Integrator integ = integrator_from_name(cfg.time_integrator);
    const double cfl = cfg.cfl.value_or(cs.cfl);
    const double t_final = cfg.t_final.value_or(cs.t_final);

    const Grid<Dim> grid = make_grid<Dim>(cs, cfg);
    BoundarySpec<Dim> bc;
    if constexpr (Dim == 1) bc = cs.bc1;
    else bc = cs.bc2;
    SemiDiscrete<Dim> sys(grid, eos, scheme, mode, bc);

    std::vector<double> u = sys.pack(sample<Dim>(cs, grid, 0.0));

    RunOutcome out;
    out.dim = Dim;
    if (write_files) fs::create_directories(cfg.output_dir);
    const auto path = [&](const std::string& name) { return (fs::path(cfg.output_dir) / name).string(); };
    const auto emit = [&](const std::string& name, const std::vector<Prim<Dim>>& prims) {
        if (!write_files) return;
        write_solution<Dim>(path(name), grid, prims, eos);
        out.files.push_back(path(name));
    };

    double min_dx = grid.dx(0);
    if constexpr (Dim == 2) min_dx = std::min(min_dx, grid.dx(1));

    DriverOptions opt;
    opt.integrator = integ;
    opt.record_entropy = true;
    if (cfg.dt_rule.power) {
        const double dt = cfl * std::pow(min_dx, cfg.dt_rule.s);
        opt.dt_rule = [dt](std::span<const double>) { return dt; };
    } else {
        opt.dt_rule = [&sys, cfl](std::span<const double> s) { return sys.cfl_dt(s, cfl); };
    }
    int step_offset = 0;
    double t_last = 0.0;
    opt.on_step = [&](int step, double t, std::span<const double> s) {
        t_last = t;
        const int n = step_offset + step;
        if (cfg.output_every.steps > 0 && n % cfg.output_every.steps == 0 && t < t_final)
            emit(fmt::format("solution_step{}.csv", n), sys.unpack(s));
    };

    std::vector<double> stops;
    for (double ts : cfg.output_every.times)
        if (ts > 0.0 && ts < t_final) stops.push_back(ts);
    stops.push_back(t_final);

    double t = 0.0;
    try {
        for (std::size_t k = 0; k < stops.size(); ++k) {
            opt.t_final = stops[k];
            const DriverResult dr = integrate(sys, u, t, opt);
            t = dr.t;
            step_offset += dr.steps;
            append_trace(out.trace, dr.trace);
            if (k + 1 < stops.size()) emit("solution_t" + time_tag(t) + ".csv", sys.unpack(u));
        }
    } catch (const RecoveryError& e) {
        throw RecoveryError(fmt::format("{} (t = {:.17g}, step {})", e.what(), t_last, step_offset), e.cell);
    } catch (const RelaxationError& e) {
        throw RelaxationError(fmt::format("{} (t = {:.17g}, step {})", e.what(), t_last, step_offset));
    }

    out.t = t;
    out.steps = step_offset;
    const std::vector<Prim<Dim>> prims = sys.unpack(u);
    emit("solution.csv", prims);

    if (cs.reference == ReferencePolicy::Exact) {
        std::vector<double> rho(prims.size());
        for (std::size_t i = 0; i < prims.size(); ++i) rho[i] = prims[i].rho;
        std::function<double(const std::array<double, Dim>&)> exact;
        if constexpr (Dim == 1) exact = [&](const std::array<double, 1>& x) { return cs.sample1(x[0], t).rho; };
        else exact = [&](const std::array<double, 2>& x) { return cs.sample2(x[0], x[1], t).rho; };
        out.errors = error_norms<Dim>(grid, rho, exact);
        if (write_files) {
            write_errors_table(path("errors.csv"), convergence_rates({{grid.n[0], *out.errors}}));
            out.files.push_back(path("errors.csv"));
        }
    } else if (cs.reference == ReferencePolicy::Llf && cfg.reference && write_files && Dim == 1) {
        LlfConfig lc;
        lc.case_id = cs.id;
        lc.resolution = 10 * cs.n[0];
        llf_solve(lc, path("reference.csv"));
        out.files.push_back(path("reference.csv"));
    }

    if (write_files) {
        write_entropy_trace(path("entropy.csv"), out.trace);
        out.files.push_back(path("entropy.csv"));
        std::ofstream(path("run.cfg")) << to_text(cfg);
        out.files.push_back(path("run.cfg"));
    }

    if constexpr (Dim == 1) {
        out.grid1 = grid;
        out.prims1 = prims;
    } else {
        out.grid2 = grid;
        out.prims2 = prims;
    }
    return out;
}

}  // namespace

RunOutcome run(const RunConfig& cfg, bool write_files) {
    validate_config(cfg);
    const CaseSpec& cs = find_case(cfg.case_id);
    return cs.dim == 1 ? run_dim<1>(cfg, cs, write_files) : run_dim<2>(cfg, cs, write_files);
}

std::vector<ErrorRow> sweep(const RunConfig& base, const std::vector<int>& ns, bool write_files) {
    validate_config(base);
    const CaseSpec& cs = find_case(base.case_id);
    if (cs.reference != ReferencePolicy::Exact)
        throw ConfigError("sweep needs a case with an exact solution; '" + cs.id + "' has none");
    std::vector<std::pair<int, ErrorNorms>> table;
    for (int n : ns) {
        RunConfig c = base;
        c.nx = n;
        if (cs.dim == 2) c.ny = n;
        c.output_dir = (fs::path(base.output_dir) / fmt::format("n{}", n)).string();
        const RunOutcome r = run(c, write_files);
        table.emplace_back(n, *r.errors);
    }
    const auto rows = convergence_rates(table);
    if (write_files) {
        fs::create_directories(base.output_dir);
        write_errors_table((fs::path(base.output_dir) / "errors.csv").string(), rows);
    }
    return rows;
}

std::vector<RunOutcome> compare(const std::vector<RunConfig>& cfgs, bool write_files) {
    if (cfgs.empty()) throw ConfigError("compare needs at least one configuration");
    for (const auto& c : cfgs) {
        validate_config(c);
        if (c.case_id != cfgs.front().case_id) throw ConfigError("compare: all configurations must use one case");
    }
    if (cfgs.size() == 1) return {run(cfgs.front(), write_files)};
    std::vector<RunOutcome> out;
    std::vector<std::string> used;
    for (const auto& c : cfgs) {
        std::string label = c.scheme;
        for (int k = 2; std::find(used.begin(), used.end(), label) != used.end(); ++k)
            label = fmt::format("{}_{}", c.scheme, k);
        used.push_back(label);
        RunConfig cc = c;
        cc.output_dir = (fs::path(c.output_dir) / label).string();
        out.push_back(run(cc, write_files));
    }
    return out;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return 2;
    if (dynamic_cast<const RecoveryError*>(&e)) return 3;
    if (dynamic_cast<const RelaxationError*>(&e)) return 4;
    return 1;
}

}  // namespace esrhd
