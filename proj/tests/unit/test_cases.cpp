#include <doctest.h>

#include <cmath>
#include <set>

#include "esrhd/cases.hpp"
#include "esrhd/errors.hpp"
#include "esrhd/state.hpp"

using namespace esrhd;

TEST_CASE("catalog ids are unique and complete") {
    std::set<std::string> ids;
    for (const auto& c : catalog()) {
        CHECK(ids.insert(c.id).second);
        if (c.dim == 1) CHECK(static_cast<bool>(c.sample1));
        else CHECK(static_cast<bool>(c.sample2));
        CHECK(c.t_final > 0.0);
    }
    for (const char* id : {"smooth1d", "isentropic", "density_pert", "blast", "rp1", "rp2", "rp3", "rp4", "smooth2d",
                           "rp2d_1", "rp2d_2", "rp2d_3", "shock_bubble_light", "shock_bubble_heavy"})
        CHECK(ids.count(id) == 1);
    CHECK_THROWS_AS(find_case("rp9"), DomainError);
    CHECK(find_case("rp1").cfl == 0.1);
    CHECK(find_case("rp1").reference == ReferencePolicy::Llf);
}

TEST_CASE("initial data are admissible") {
    for (const auto& c : catalog()) {
        for (int k = 0; k < 50; ++k) {
            const double x = c.lo[0] + (k + 0.5) / 50 * (c.hi[0] - c.lo[0]);
            if (c.dim == 1) {
                CHECK(is_admissible(c.sample1(x, 0.0)));
            } else {
                const double y = c.lo[1] + (k * 7 % 50 + 0.5) / 50 * (c.hi[1] - c.lo[1]);
                CHECK(is_admissible(c.sample2(x, y, 0.0)));
            }
        }
    }
}

TEST_CASE("Riemann data switch to the right state at the midpoint") {
    const CaseSpec& c = find_case("rp3");
    CHECK(c.sample1(0.5, 0.0).v[0] == 0.0);
    CHECK(c.sample1(0.4999, 0.0).v[0] == 0.9);
}

TEST_CASE("smooth1d exact solution satisfies the equations") {
    // U_t + F_x = 0 by central differences
    const CaseSpec& c = find_case("smooth1d");
    const EosModel eos = c.eos_model();
    const double h = 1e-5;
    for (double x : {0.3, 1.7, 4.0}) {
        for (double t : {0.0, 0.9}) {
            const Vec<1> Ut = (prim_to_cons(eos, c.sample1(x, t + h)) - prim_to_cons(eos, c.sample1(x, t - h))) / (2 * h);
            const Vec<1> Fx = (flux(eos, c.sample1(x + h, t), 0) - flux(eos, c.sample1(x - h, t), 0)) / (2 * h);
            CHECK((Ut + Fx).norm() < 1e-8);
        }
    }
}

TEST_CASE("smooth2d exact solution satisfies the equations") {
    const CaseSpec& c = find_case("smooth2d");
    for (const char* e : {"rc", "ip", "tm"}) {
        const EosModel eos = EosModel::from_name(e);
        const double h = 1e-5, x = 0.7, y = 2.1, t = 0.05;
        const Vec<2> Ut = (prim_to_cons(eos, c.sample2(x, y, t + h)) - prim_to_cons(eos, c.sample2(x, y, t - h))) / (2 * h);
        const Vec<2> Fx = (flux(eos, c.sample2(x + h, y, t), 0) - flux(eos, c.sample2(x - h, y, t), 0)) / (2 * h);
        const Vec<2> Gy = (flux(eos, c.sample2(x, y + h, t), 1) - flux(eos, c.sample2(x, y - h, t), 1)) / (2 * h);
        CHECK((Ut + Fx + Gy).norm() < 1e-8);
    }
}

TEST_CASE("isentropic pulse keeps J- constant") {
    const double G = 5.0 / 3.0, K = 100.0;
    const EosModel id(EosKind::ID, G);
    const auto cs = [&](double rho) { return std::sqrt(id.sound_speed_sq(K * std::pow(rho, G - 1))); };
    const double J0 = riemann_invariant_minus(G, 0.0, cs(1.0));
    for (double rho : {1.0, 1.3, 2.0, 3.5}) {
        const double v = isentropic_velocity(G, K, rho);
        CHECK(riemann_invariant_minus(G, v, cs(rho)) == doctest::Approx(J0).epsilon(1e-13));
    }
    CHECK(isentropic_velocity(G, K, 1.0) == doctest::Approx(0.0).epsilon(1e-15).scale(1.0));
    CHECK(isentropic_velocity(G, K, 2.0) > 0.0);
    const CaseSpec& c = find_case("isentropic");
    CHECK(c.sample1(0.0, 0.0).p == doctest::Approx(K * std::pow(c.sample1(0.0, 0.0).rho, G)));
}
