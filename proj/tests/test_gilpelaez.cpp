#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "rfvlc/gilpelaez.hpp"
#include "rfvlc/specfun.hpp"

using namespace rfvlc;
using cdouble = std::complex<double>;

TEST_CASE("recovers the gamma CDF from its characteristic function") {
    for (double kappa : {1.0, 2.5}) {
        for (double theta : {0.7, 2.0}) {
            auto cf = [&](double w) {
                return std::pow(cdouble(1.0, -w * theta), -kappa);
            };
            for (double x : {0.3, 1.0, 3.0, 8.0}) {
                const double want = regularized_gamma_p(kappa, x / theta);
                const GilPelaezResult got = gil_pelaez_cdf(cf, x);
                CAPTURE(kappa);
                CAPTURE(theta);
                CAPTURE(x);
                CHECK(got.converged);
                CHECK(std::fabs(got.value - want) < 1e-6);
            }
        }
    }
}

TEST_CASE("recovers the normal CDF including negative abscissae") {
    const double mu = 0.4, sigma = 1.3;
    auto cf = [&](double w) {
        return std::exp(cdouble(-0.5 * sigma * sigma * w * w, mu * w));
    };
    for (double x : {-2.0, -0.5, 0.9, 2.5}) {
        const double want = 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
        const GilPelaezResult got = gil_pelaez_cdf(cf, x);
        CAPTURE(x);
        CHECK(got.converged);
        CHECK(std::fabs(got.value - want) < 1e-6);
    }
}

TEST_CASE("handles a shifted exponential whose support crosses zero") {
    // T = X - 2 with X ~ Exp(1): P(T < x) = 1 - exp(-(x+2)).
    auto cf = [](double w) {
        return std::exp(cdouble(0.0, -2.0 * w)) / cdouble(1.0, -w);
    };
    for (double x : {-1.5, -0.3, 0.8, 3.0}) {
        const double want = 1.0 - std::exp(-(x + 2.0));
        const GilPelaezResult got = gil_pelaez_cdf(cf, x);
        CAPTURE(x);
        CHECK(std::fabs(got.value - want) < 2e-6);
    }
}

TEST_CASE("reports non-convergence instead of lying") {
    auto cf = [](double w) { return std::pow(cdouble(1.0, -w), -0.3); };  // heavy tail
    GilPelaezOptions opt;
    opt.max_panels = 12;
    opt.abs_tol = 1e-12;
    const GilPelaezResult got = gil_pelaez_cdf(cf, 0.5, opt);
    CHECK(!got.converged);
    CHECK(got.value >= 0.0);
    CHECK(got.value <= 1.0);
}
