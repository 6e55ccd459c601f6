#pragma once

#include <array>
#include <cmath>

#include <Eigen/Dense>

namespace esrhd {

template <int Dim>
using Vec = Eigen::Matrix<double, Dim + 2, 1>;

template <int Dim>
using Mat = Eigen::Matrix<double, Dim + 2, Dim + 2>;

/// Primitive state (rho, v, p).
template <int Dim>
struct Prim {
    double rho = 1.0;
    std::array<double, Dim> v{};
    double p = 1.0;

    double theta() const { return p / rho; }
    double v2() const {
        double s = 0.0;
        for (double c : v) s += c * c;
        return s;
    }
    double lorentz() const { return 1.0 / std::sqrt(1.0 - v2()); }
};

using Prim1 = Prim<1>;
using Prim2 = Prim<2>;

}  // namespace esrhd
