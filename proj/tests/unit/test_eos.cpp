#include <doctest.h>

#include <cmath>
#include <random>

#include "esrhd/eos.hpp"
#include "esrhd/errors.hpp"
#include "esrhd/means.hpp"
#include "helpers.hpp"

using namespace esrhd;

TEST_CASE("EOS frozen values") {
    const EosModel id(EosKind::ID), rc(EosKind::RC), ip(EosKind::IP), tm(EosKind::TM);
    CHECK(rc.enthalpy(1.0) == doctest::Approx(4.4).epsilon(1e-15));
    CHECK(id.enthalpy(0.2) == doctest::Approx(1.5).epsilon(1e-15));
    // ideal gas, theta = 1/5: c_s^2 = Gamma theta / h
    CHECK(id.sound_speed_sq(0.2) == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    CHECK(rc.entropy_S(1.0, 1.0) == doctest::Approx(1.5 * std::log(5.0) - 0.6).epsilon(1e-15));
    CHECK(tm.ec_coefficient(1.0, 2.0) == doctest::Approx(2.4893691881986695).epsilon(1e-14));
    CHECK(ip.internal_energy(0.0) == 0.0);
    CHECK(tm.internal_energy(1e-300) == doctest::Approx(1.5e-300));
}

TEST_CASE("EOS names and validation") {
    CHECK(EosModel::from_name("tm").kind() == EosKind::TM);
    CHECK(EosModel::from_name("id", 4.0 / 3.0).gamma() == doctest::Approx(4.0 / 3.0));
    CHECK_THROWS_AS(EosModel::from_name("xx"), DomainError);
    CHECK_THROWS_AS(EosModel(EosKind::ID, 1.0), DomainError);
    CHECK_THROWS_AS(EosModel(EosKind::ID, 2.5), DomainError);
    CHECK(EosModel(EosKind::RC).name() == "rc");
}

TEST_CASE("h = 1 + e + theta, e' by finite differences, causal sound speed") {
    for (const auto& eos : testing::all_eos()) {
        for (double th : {1e-3, 0.01, 0.3, 1.0, 7.0, 100.0, 1e3}) {
            CHECK(eos.enthalpy(th) == doctest::Approx(1.0 + eos.internal_energy(th) + th).epsilon(1e-14));
            const double dh = 1e-5 * th;
            const double fd = (eos.internal_energy(th + dh) - eos.internal_energy(th - dh)) / (2 * dh);
            CHECK(eos.e_prime(th) == doctest::Approx(fd).epsilon(1e-8));
            const double c2 = eos.sound_speed_sq(th);
            CHECK(c2 > 0.0);
            CHECK(c2 < 1.0);
        }
    }
}

TEST_CASE("dS = (de + p d(1/rho)) / theta") {
    // Gibbs relation with S per unit mass: theta dS = de - theta / rho drho
    for (const auto& eos : testing::all_eos()) {
        for (double th : {0.01, 1.0, 50.0}) {
            const double rho = 1.7, h = 1e-6 * th;
            const double dSdth = (eos.entropy_S(rho, th + h) - eos.entropy_S(rho, th - h)) / (2 * h);
            CHECK(dSdth == doctest::Approx(eos.e_prime(th) / th).epsilon(1e-7));
            const double dSdrho = (eos.entropy_S(rho * (1 + 1e-6), th) - eos.entropy_S(rho * (1 - 1e-6), th)) /
                                  (2e-6 * rho);
            CHECK(dSdrho == doctest::Approx(-1.0 / rho).epsilon(1e-7));
        }
    }
}

TEST_CASE("EC coefficient closed forms match quadrature") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(std::log(0.05), std::log(50.0));
    for (const auto& eos : testing::all_eos()) {
        for (int n = 0; n < 300; ++n) {
            const double a = std::exp(u(rng)), b = std::exp(u(rng));
            const double cf = eos.ec_coefficient(a, b);
            CHECK(cf == doctest::Approx(eos.ec_coefficient_quadrature(a, b)).epsilon(1e-10));
            CHECK(cf == eos.ec_coefficient(b, a));
        }
    }
}

TEST_CASE("EC coefficient at equal arguments is 1 + e(1/z)") {
    for (const auto& eos : testing::all_eos()) {
        for (double z : {1e-3, 0.5, 1.0, 3.0, 1e3}) {
            CHECK(eos.ec_coefficient(z, z) == doctest::Approx(1.0 + eos.internal_energy(1.0 / z)).epsilon(1e-13));
            // nearly equal: no cancellation blow-up
            CHECK(eos.ec_coefficient(z, z * (1 + 1e-9)) ==
                  doctest::Approx(1.0 + eos.internal_energy(1.0 / z)).epsilon(1e-8));
        }
    }
}

TEST_CASE("ideal EOS coefficient") {
    const EosModel id(EosKind::ID, 1.4);
    CHECK(id.ec_coefficient(2.0, 8.0) == doctest::Approx(1.0 + 1.0 / (0.4 * logmean(2.0, 8.0))).epsilon(1e-15));
}
