#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "esrhd/csv_io.hpp"
#include "esrhd/errors.hpp"
#include "esrhd/reference_llf.hpp"
#include "esrhd/solver.hpp"
#include "esrhd/timeint.hpp"

using namespace esrhd;
namespace fs = std::filesystem;

TEST_CASE("CSV writers use the fixed headers and full precision") {
    const fs::path d = fs::temp_directory_path() / "esrhd_unit_csv";
    fs::create_directories(d);
    const EosModel id(EosKind::ID);
    const Grid<1> g({2}, {0.0}, {1.0});
    write_solution_1d((d / "s1.csv").string(), g, {Prim1{1.0, {0.0}, 1.0}, Prim1{0.1, {0.5}, 2.0}}, id);
    CsvTable t = read_csv((d / "s1.csv").string());
    CHECK(t.header == std::vector<std::string>{"x", "rho", "v1", "p", "D", "m1", "E"});
    CHECK(t.rows[0][6] == 2.5);
    CHECK(t.rows[1][2] == 0.5);
    CHECK(t.values("x")[1] == 0.75);

    const Grid<2> g2({2, 2}, {0.0, 0.0}, {1.0, 1.0});
    std::vector<Prim2> p2(4);
    for (int k = 0; k < 4; ++k) p2[k].rho = k + 1.0;
    write_solution_2d((d / "s2.csv").string(), g2, p2);
    t = read_csv((d / "s2.csv").string());
    CHECK(t.header == std::vector<std::string>{"x", "y", "rho", "v1", "v2", "p"});
    CHECK(t.rows[1][0] == 0.75);  // i runs fastest
    CHECK(t.rows[1][1] == 0.25);
    CHECK(t.rows[2][2] == 3.0);

    EntropyTrace tr;
    tr.append(0.0, -1.0 / 3.0);
    write_entropy_trace((d / "e.csv").string(), tr);
    t = read_csv((d / "e.csv").string());
    CHECK(t.header == std::vector<std::string>{"t", "total_entropy"});
    CHECK(t.rows[0][1] == -1.0 / 3.0);

    write_errors_table((d / "err.csv").string(), convergence_rates({{10, {1.0, 2.0}}, {20, {0.5, 1.0}}}));
    t = read_csv((d / "err.csv").string());
    CHECK(t.header == std::vector<std::string>{"N", "l1", "l1_order", "l2", "l2_order"});
    CHECK(t.rows[1][2] == doctest::Approx(1.0));
    CHECK_THROWS_AS(t.column("nope"), DomainError);
    CHECK_THROWS(read_csv((d / "missing.csv").string()));
}

TEST_CASE("LLF flux") {
    const EosModel rc(EosKind::RC);
    const Prim2 V{1.0, {0.3, 0.1}, 2.0};
    CHECK((llf_flux<2>(rc, V, V, 1) - flux(rc, V, 1)).norm() < 1e-14);
    const Prim1 L{1.0, {0.0}, 1.0}, R{0.1, {0.0}, 0.1};
    const Vec<1> F = llf_flux<1>(rc, L, R, 0);
    CHECK(F[0] > 0.0);  // mass moves toward the low-density side
}

TEST_CASE("LLF step creates no new extrema and dissipates entropy") {
    const EosModel rc(EosKind::RC);
    const Grid<1> g({100}, {0.0}, {1.0}, 1);
    SemiDiscrete<1> sys(g, rc, Scheme::from_name("llf"), DissipationMode::Rusanov, BoundarySpec<1>::all(BcKind::Outflow));
    std::vector<Prim1> v(100);
    for (int i = 0; i < 100; ++i) v[i] = g.center(0, i) < 0.5 ? Prim1{10.0, {0.0}, 40.0 / 3.0} : Prim1{1.0, {0.0}, 1e-6};
    std::vector<double> u = sys.pack(v);
    DriverOptions opt;
    opt.integrator = Integrator::Euler;
    opt.t_final = 0.1;
    opt.dt_rule = [&](std::span<const double> s) { return sys.cfl_dt(s, 0.4); };
    const DriverResult r = integrate(sys, u, 0.0, opt);
    CHECK(r.trace.increases(1e-14) == 0);
    for (const auto& p : sys.unpack(u)) {
        CHECK(p.rho <= 10.0 + 1e-12);
        CHECK(p.rho >= 1.0 - 1e-12);
    }
}

TEST_CASE("llf_solve checks its resolution and restrict_average") {
    CHECK_THROWS_AS(llf_solve({"rp1", 1000, 0.4}), DomainError);
    CHECK_THROWS_AS(llf_solve({"smooth2d", 1000, 0.4}), DomainError);
    CHECK(restrict_average({1, 2, 3, 4, 5, 6}, 3) == std::vector<double>{2, 5});
    CHECK_THROWS_AS(restrict_average({1, 2, 3}, 2), DomainError);
}
