#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "esrhd/errors.hpp"
#include "esrhd/reconstruct.hpp"
#include "esrhd/state.hpp"
#include "helpers.hpp"

using namespace esrhd;

TEST_CASE("ENO coefficient table, order 3") {
    const double expect[4][3] = {{11.0 / 6, -7.0 / 6, 1.0 / 3},
                                 {1.0 / 3, 5.0 / 6, -1.0 / 6},
                                 {-1.0 / 6, 5.0 / 6, 1.0 / 3},
                                 {1.0 / 3, -7.0 / 6, 11.0 / 6}};
    for (int r = -1; r <= 2; ++r)
        for (int j = 0; j < 3; ++j) CHECK(eno_coefficient(3, r, j) == doctest::Approx(expect[r + 1][j]).epsilon(1e-15));
    for (int order = 1; order <= 6; ++order)
        for (int r = -1; r < order; ++r) {
            double s = 0.0;
            for (int j = 0; j < order; ++j) s += eno_coefficient(order, r, j);
            CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
        }
}

TEST_CASE("ENO is exact for cell averages of polynomials") {
    // cubic p(x) with cell [j, j+1]; interface at x = 4
    const auto P = [](double x) { return 0.25 * x * x * x * x - x * x * x + 2 * x; };  // antiderivative
    const auto p = [](double x) { return x * x * x - 3 * x * x + 2; };
    std::vector<double> v(8);
    for (int j = 0; j < 8; ++j) v[j] = P(j + 1) - P(j);
    const FaceValues f = eno_reconstruct(v, 4);
    CHECK(f.minus == doctest::Approx(p(4.0)).epsilon(1e-12));
    CHECK(f.plus == doctest::Approx(p(4.0)).epsilon(1e-12));
}

TEST_CASE("ENO sign property") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int n = 0; n < 20000; ++n) {
        std::vector<double> v(8);
        for (auto& x : v) x = g(rng) * (n % 3 ? 1.0 : 1e3);
        const FaceValues f = eno_reconstruct(v, 4);
        const double jmp = v[4] - v[3];
        REQUIRE((f.plus - f.minus) * jmp >= 0.0);
    }
}

TEST_CASE("WENO5 converges at fifth order on smooth data") {
    const auto err = [](double h) {
        const double x0 = 0.3;
        std::vector<double> v(6);
        for (int j = 0; j < 6; ++j) {
            const double a = x0 + (j - 3) * h, b = a + h;
            v[j] = (std::cos(a) - std::cos(b)) / h;  // average of sin
        }
        const FaceValues f = weno5_reconstruct(v);
        return std::max(std::abs(f.minus - std::sin(x0)), std::abs(f.plus - std::sin(x0)));
    };
    const double e1 = err(0.05), e2 = err(0.025);
    CHECK(std::log2(e1 / e2) > 4.5);
}

TEST_CASE("WENO5 does not oscillate across a step") {
    const std::vector<double> v{0, 0, 0, 1, 1, 1};
    const FaceValues f = weno5_reconstruct(v);
    CHECK(f.minus == doctest::Approx(0.0).epsilon(1e-6).scale(1.0));
    CHECK(f.plus == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sign switch") {
    CHECK(sign_switch(0.0, 2.0, 1.0) == 2.0);
    CHECK(sign_switch(0.0, 2.0, -1.0) == 0.0);
    CHECK(sign_switch(1.0, 1.0, 1.0) == 0.0);
    CHECK(recon_half_width(ReconKind::Eno4) == 4);
    CHECK(recon_half_width(ReconKind::Weno5) == 3);
}

TEST_CASE("high-order ES flux dissipates entropy at the interface") {
    // [[W]] . (F_es - F_ec) <= 0 by the sign property
    std::mt19937_64 rng(42);
    const EosModel rc(EosKind::RC);
    for (auto kind : {ReconKind::Eno4, ReconKind::Weno5}) {
        for (int n = 0; n < 200; ++n) {
            std::vector<Prim1> st(8);
            for (auto& s : st) s = testing::random_state<1>(rng, 0.9, 0.01, 100.0);
            const Vec<1> Fes = es_flux<1>(rc, st, 3, kind, DissipationMode::Rusanov, 0);
            const Vec<1> Fec = highorder_ec_flux<1>(rc, std::span<const Prim1>(st).subspan(1, 6), 3, 0);
            const Vec<1> dW = entropy_vars(rc, st[4]) - entropy_vars(rc, st[3]);
            CHECK(dW.dot(Fes - Fec) <= 1e-10 * dW.cwiseAbs().dot(Fec.cwiseAbs()));
        }
    }
}

TEST_CASE("ES flux reduces to the EC flux on uniform data") {
    const EosModel ip(EosKind::IP);
    const std::vector<Prim2> st(8, Prim2{1.0, {0.2, 0.1}, 3.0});
    for (int dir = 0; dir < 2; ++dir) {
        const Vec<2> F = es_flux<2>(ip, st, 3, ReconKind::Weno5, DissipationMode::Roe, dir);
        CHECK((F - flux(ip, st[0], dir)).norm() <= 1e-12 * F.norm());
    }
    CHECK_THROWS_AS(es_flux<2>(ip, std::span<const Prim2>(st).subspan(0, 4), 3, ReconKind::Weno5,
                               DissipationMode::Roe, 0),
                    DomainError);
}
