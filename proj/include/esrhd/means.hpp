#pragma once

#include <cmath>

#include "esrhd/errors.hpp"

namespace esrhd {

inline double jump(double a, double b) { return b - a; }
inline double amean(double a, double b) { return 0.5 * (a + b); }

/// Logarithmic mean (b-a)/(ln b - ln a).
///
/// Near equal arguments a truncated series in f = (b-a)/(b+a) is used.
/// Away from it the atanh form keeps the result symmetric in (a, b).
inline double logmean(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("logmean: arguments must be positive and finite");
    const double f = (b - a) / (b + a);
    const double u = f * f;
    if (u < 1e-4) {
        return (a + b) / (2.0 * (1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u / 7.0))));
    }
    return (b - a) / (2.0 * std::atanh(f));
}

/// Reciprocal of the logarithmic mean, without the intermediate division.
inline double inv_logmean(double a, double b) { return 1.0 / logmean(a, b); }

}  // namespace esrhd
