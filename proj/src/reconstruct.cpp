#include "esrhd/reconstruct.hpp"

#include <array>
#include <cmath>

namespace esrhd {

namespace {

constexpr int kMaxOrder = 6;

// Right-face reconstruction weights for point data treated as cell values.
double compute_coefficient(int k, int r, int j) {
    double c = 0.0;
    for (int m = j + 1; m <= k; ++m) {
        double num = 0.0;
        for (int l = 0; l <= k; ++l) {
            if (l == m) continue;
            double prod = 1.0;
            for (int q = 0; q <= k; ++q) {
                if (q == m || q == l) continue;
                prod *= r - q + 1;
            }
            num += prod;
        }
        double den = 1.0;
        for (int l = 0; l <= k; ++l)
            if (l != m) den *= m - l;
        c += num / den;
    }
    return c;
}

struct CoefficientTable {
    // [order][r + 1][j]
    std::array<std::array<std::array<double, kMaxOrder>, kMaxOrder + 1>, kMaxOrder + 1> c{};
    CoefficientTable() {
        for (int k = 1; k <= kMaxOrder; ++k)
            for (int r = -1; r < k; ++r)
                for (int j = 0; j < k; ++j) c[k][r + 1][j] = compute_coefficient(k, r, j);
    }
};

const CoefficientTable& table() {
    static const CoefficientTable t;
    return t;
}

// Undivided difference of order l starting at index a.
double undivided(const double* v, int a, int l) {
    double d[kMaxOrder + 1];
    for (int i = 0; i <= l; ++i) d[i] = v[a + i];
    for (int m = 1; m <= l; ++m)
        for (int i = 0; i <= l - m; ++i) d[i] = d[i + 1] - d[i];
    return d[0];
}

// Leftmost index of the ENO stencil grown from cell `base`.
int eno_left(const double* v, int base, int order) {
    int left = base;
    for (int l = 1; l < order; ++l) {
        const double dl = std::abs(undivided(v, left - 1, l));
        const double dr = std::abs(undivided(v, left, l));
        if (dl < dr) --left;
    }
    return left;
}

}  // namespace

double eno_coefficient(int order, int r, int j) {
    if (order < 1 || order > kMaxOrder || r < -1 || r >= order || j < 0 || j >= order)
        throw DomainError("eno_coefficient: index out of range");
    return table().c[order][r + 1][j];
}

FaceValues eno_reconstruct(std::span<const double> v, int order) {
    if (order < 1 || order > kMaxOrder || static_cast<int>(v.size()) < 2 * order)
        throw DomainError("eno_reconstruct: stencil must hold 2*order values");
    const auto& c = table().c[order];
    const double* p = v.data();
    const int i = order - 1;
    FaceValues f{0.0, 0.0};

    int left = eno_left(p, i, order);
    for (int j = 0; j < order; ++j) f.minus += c[i - left + 1][j] * p[left + j];

    left = eno_left(p, i + 1, order);
    for (int j = 0; j < order; ++j) f.plus += c[i - left + 1][j] * p[left + j];
    return f;
}

namespace {

double weno5_face(double a, double b, double c, double d, double e) {
    constexpr double eps = 1e-6;
    const double q0 = (2.0 * a - 7.0 * b + 11.0 * c) / 6.0;
    const double q1 = (-b + 5.0 * c + 2.0 * d) / 6.0;
    const double q2 = (2.0 * c + 5.0 * d - e) / 6.0;
    const double b0 = 13.0 / 12.0 * (a - 2.0 * b + c) * (a - 2.0 * b + c) +
                      0.25 * (a - 4.0 * b + 3.0 * c) * (a - 4.0 * b + 3.0 * c);
    const double b1 = 13.0 / 12.0 * (b - 2.0 * c + d) * (b - 2.0 * c + d) + 0.25 * (b - d) * (b - d);
    const double b2 = 13.0 / 12.0 * (c - 2.0 * d + e) * (c - 2.0 * d + e) +
                      0.25 * (3.0 * c - 4.0 * d + e) * (3.0 * c - 4.0 * d + e);
    const double a0 = 0.1 / ((eps + b0) * (eps + b0));
    const double a1 = 0.6 / ((eps + b1) * (eps + b1));
    const double a2 = 0.3 / ((eps + b2) * (eps + b2));
    return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2);
}

}  // namespace

FaceValues weno5_reconstruct(std::span<const double> v) {
    if (v.size() < 6) throw DomainError("weno5_reconstruct: stencil must hold 6 values");
    return {weno5_face(v[0], v[1], v[2], v[3], v[4]), weno5_face(v[5], v[4], v[3], v[2], v[1])};
}

int recon_half_width(ReconKind kind) {
    switch (kind) {
        case ReconKind::Jump: return 1;
        case ReconKind::Eno4: return 4;
        case ReconKind::Weno5: return 3;
    }
    return 1;
}

}  // namespace esrhd
