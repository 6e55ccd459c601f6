#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "esrhd/dissipation.hpp"
#include "esrhd/errors.hpp"
#include "esrhd/flux_ec.hpp"
#include "esrhd/state.hpp"
#include "helpers.hpp"

using namespace esrhd;

namespace {

template <int Dim>
double& comp(Prim<Dim>& V, int k) {
    return k == 0 ? V.rho : (k == Dim + 1 ? V.p : V.v[k - 1]);
}

// dF/dU by central differences in the primitive variables
template <int Dim>
Mat<Dim> fd_flux_jacobian(const EosModel& eos, const Prim<Dim>& V, int dir) {
    Mat<Dim> dF, dU;
    for (int k = 0; k < Dim + 2; ++k) {
        Prim<Dim> a = V, b = V;
        const double h = 1e-6 * std::max(1e-2, std::abs(comp(a, k)));
        comp(a, k) += h;
        comp(b, k) -= h;
        dF.col(k) = (flux(eos, a, dir) - flux(eos, b, dir)) / (2 * h);
        dU.col(k) = (prim_to_cons(eos, a) - prim_to_cons(eos, b)) / (2 * h);
    }
    return dF * dU.inverse();
}

}  // namespace

TEST_CASE("R R^T equals dU/dW") {
    std::mt19937_64 rng(31);
    for (const auto& eos : testing::all_eos()) {
        for (int n = 0; n < 200; ++n) {
            const Prim1 V1 = testing::random_state<1>(rng);
            const Mat<1> P1 = dU_dW(eos, V1), RR1 = scaled_eigenvectors(eos, V1, 0).R;
            CHECK((RR1 * RR1.transpose() - P1).norm() <= 1e-10 * P1.norm());
            const Prim2 V2 = testing::random_state<2>(rng);
            const Mat<2> P2 = dU_dW(eos, V2);
            for (int dir = 0; dir < 2; ++dir) {
                const Mat<2> R = scaled_eigenvectors(eos, V2, dir).R;
                CHECK((R * R.transpose() - P2).norm() <= 1e-10 * P2.norm());
            }
        }
    }
}

TEST_CASE("columns of R are eigenvectors of dF/dU") {
    std::mt19937_64 rng(32);
    for (const auto& eos : testing::all_eos()) {
        for (int n = 0; n < 25; ++n) {
            const Prim2 V = testing::random_state<2>(rng, 0.9, 0.02, 50.0);
            for (int dir = 0; dir < 2; ++dir) {
                const ScaledEigs<2> s = scaled_eigenvectors(eos, V, dir);
                const Mat<2> A = fd_flux_jacobian(eos, V, dir);
                const Mat<2> lhs = A * s.R, rhs = s.R * s.lambda.asDiagonal();
                CHECK((lhs - rhs).norm() <= 1e-6 * (rhs.norm() + s.R.norm()));
            }
            const Prim1 V1 = testing::random_state<1>(rng, 0.9, 0.02, 50.0);
            const ScaledEigs<1> s1 = scaled_eigenvectors(eos, V1, 0);
            const Mat<1> A1 = fd_flux_jacobian(eos, V1, 0);
            CHECK((A1 * s1.R - s1.R * s1.lambda.asDiagonal()).norm() <= 1e-6 * (s1.R.norm() * (1 + s1.lambda.norm())));
        }
    }
}

TEST_CASE("eigenvalues are ordered and sub-luminal") {
    const EosModel tm(EosKind::TM);
    const Prim2 V{1.0, {0.5, 0.3}, 2.0};
    const Vec<2> l = eigenvalues(tm, V, 0);
    CHECK(l[0] < l[1]);
    CHECK(l[1] == doctest::Approx(0.5));
    CHECK(l[2] == doctest::Approx(0.5));
    CHECK(l[3] > l[2]);
    CHECK(std::abs(l[0]) < 1.0);
    CHECK(std::abs(l[3]) < 1.0);
    // at rest: +- c_s
    const Prim1 R{1.0, {0.0}, 0.2};
    const EosModel id(EosKind::ID);
    const Vec<1> l1 = eigenvalues(id, R, 0);
    CHECK(l1[2] == doctest::Approx(std::sqrt(2.0 / 9.0)));
    CHECK(l1[0] == doctest::Approx(-std::sqrt(2.0 / 9.0)));
}

TEST_CASE("dissipation matrices are symmetric positive semidefinite") {
    std::mt19937_64 rng(33);
    for (const auto& eos : testing::all_eos()) {
        for (int n = 0; n < 200; ++n) {
            const Prim2 L = testing::random_state<2>(rng), R = testing::random_state<2>(rng);
            for (int dir = 0; dir < 2; ++dir) {
                const ScaledEigs<2> s = scaled_eigenvectors<2>(interface_average(eos, L, R), dir);
                CHECK((s.d.array() >= 0.0).all());
                for (auto mode : {DissipationMode::Roe, DissipationMode::Rusanov}) {
                    const Mat<2> D = dissipation_matrix(s, mode);
                    Eigen::SelfAdjointEigenSolver<Mat<2>> es(0.5 * (D + D.transpose()));
                    CHECK(es.eigenvalues().minCoeff() >= -1e-12 * es.eigenvalues().cwiseAbs().maxCoeff());
                }
            }
        }
    }
}

TEST_CASE("interface average of equal states is the state itself") {
    const EosModel rc(EosKind::RC);
    const Prim2 V{0.7, {0.2, -0.6}, 1.9};
    const auto a = interface_average(rc, V, V);
    const auto b = eigen_input(rc, V);
    CHECK(a.rho == doctest::Approx(b.rho));
    CHECK(a.theta == doctest::Approx(b.theta));
    CHECK(a.h == doctest::Approx(b.h).epsilon(1e-13));
    CHECK(a.cs2 == doctest::Approx(b.cs2).epsilon(1e-13));
}

TEST_CASE("first-order ES flux dissipates entropy") {
    std::mt19937_64 rng(34);
    for (const auto& eos : testing::all_eos()) {
        for (int n = 0; n < 200; ++n) {
            const Prim1 L = testing::random_state<1>(rng), R = testing::random_state<1>(rng);
            const Vec<1> dW = entropy_vars(eos, R) - entropy_vars(eos, L);
            for (auto mode : {DissipationMode::Roe, DissipationMode::Rusanov}) {
                const Vec<1> F = es_flux_first_order(eos, L, R, 0, mode);
                const double prod = dW.dot(F) - (potential_psi(R, 0) - potential_psi(L, 0));
                CHECK(prod <= 1e-10 * (dW.cwiseAbs().dot(F.cwiseAbs()) + 1.0));
            }
        }
    }
}

TEST_CASE("dissipation names") {
    CHECK(dissipation_from_name("roe") == DissipationMode::Roe);
    CHECK(dissipation_from_name("rusanov") == DissipationMode::Rusanov);
    CHECK(dissipation_name(DissipationMode::Roe) == "roe");
    CHECK_THROWS_AS(dissipation_from_name("hll"), DomainError);
}
