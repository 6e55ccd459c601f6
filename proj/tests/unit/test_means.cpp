#include <doctest.h>

#include <cmath>

#include "esrhd/means.hpp"

using namespace esrhd;

TEST_CASE("logmean frozen values") {
    CHECK(logmean(1.0, std::exp(1.0)) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
    CHECK(logmean(2.0, 8.0) == doctest::Approx(6.0 / std::log(4.0)).epsilon(1e-15));
    CHECK(logmean(3.0, 3.0) == 3.0);
}

TEST_CASE("logmean is symmetric and continuous across the series switch") {
    for (double a : {1e-8, 0.3, 1.0, 7.0, 1e6}) {
        for (double r : {1.0 + 1e-12, 1.0 + 1e-6, 1.019, 1.0205, 1.021, 1.5, 10.0}) {
            const double b = a * r;
            CHECK(logmean(a, b) == logmean(b, a));
            const double ref = (b - a) / (std::log(b) - std::log(a));
            if (r > 1.01) CHECK(logmean(a, b) == doctest::Approx(ref).epsilon(1e-13));
            CHECK(logmean(a, b) >= a);
            CHECK(logmean(a, b) <= b);
        }
    }
    // the switch sits at f^2 = 1e-4
    const double b = (1.0 + 1e-2) / (1.0 - 1e-2);
    CHECK(logmean(1.0, b * (1 - 1e-14)) == doctest::Approx(logmean(1.0, b * (1 + 1e-14))).epsilon(1e-14));
}

TEST_CASE("logmean rejects nonpositive arguments") {
    CHECK_THROWS_AS(logmean(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(logmean(1.0, -2.0), DomainError);
    CHECK_THROWS_AS(logmean(NAN, 1.0), DomainError);
}

TEST_CASE("jump and arithmetic mean") {
    CHECK(jump(1.0, 4.0) == 3.0);
    CHECK(amean(1.0, 4.0) == 2.5);
    CHECK(inv_logmean(2.0, 8.0) == doctest::Approx(std::log(4.0) / 6.0));
}
