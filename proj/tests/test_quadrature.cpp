#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "rfvlc/quadrature.hpp"

using namespace rfvlc;

TEST_CASE("single panel is exact for low-degree polynomials") {
    auto p = gk15([](double x) { return 5.0 * x * x * x * x - 2.0 * x + 1.0; }, -1.0, 3.0);
    // Antiderivative x^5 - x^2 + x.
    const double want = (243.0 - 9.0 + 3.0) - (-1.0 - 1.0 - 1.0);
    CHECK(p.value == doctest::Approx(want).epsilon(1e-14));
    CHECK(p.error < 1e-10);
}

TEST_CASE("adaptive driver handles oscillation and endpoint singularity") {
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 1e-13;
    auto osc = integrate([](double x) { return std::sin(x); }, 0.0, 20.0 * M_PI, opt);
    CHECK(std::fabs(osc.value) < 1e-10);

    opt.abs_tol = 0.0;
    opt.rel_tol = 1e-10;
    opt.max_panels = 20000;
    auto sing = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
    CHECK(sing.value == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("semi-infinite map reproduces classic integrals") {
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    auto g1 = integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 0.0, 1.0, opt);
    CHECK(g1.value == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-11));
    auto g2 = integrate_semi_infinite([](double x) { return x * std::exp(-x); }, 0.0, 2.0, opt);
    CHECK(g2.value == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("complex integrands ride the same driver") {
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    auto r = integrate([](double t) { return std::exp(std::complex<double>(0.0, t)); }, 0.0, 1.0, opt);
    CHECK(r.value.real() == doctest::Approx(std::sin(1.0)).epsilon(1e-12));
    CHECK(r.value.imag() == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-12));
}

TEST_CASE("failure reporting is honest") {
    QuadratureOptions opt;
    opt.rel_tol = 1e-15;
    opt.max_panels = 4;
    auto r = integrate([](double x) { return 1.0 / std::sqrt(std::fabs(x - 0.3713)); }, 0.0, 1.0, opt);
    CHECK(!r.converged);
    opt.throw_on_failure = true;
    CHECK_THROWS_AS((void)integrate([](double x) { return 1.0 / std::sqrt(std::fabs(x - 0.3713)); },
                                    0.0, 1.0, opt),
                    std::runtime_error);
}

TEST_CASE("Gauss-Legendre nodes integrate the highest exact degree") {
    std::vector<double> x, w;
    gauss_legendre(16, x, w);
    REQUIRE(x.size() == 16);
    double wsum = 0.0, odd = 0.0, high = 0.0;
    for (int i = 0; i < 16; ++i) {
        wsum += w[i];
        odd += w[i] * std::pow(x[i], 7);
        high += w[i] * std::pow(x[i], 30);
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::fabs(odd) < 1e-14);
    CHECK(high == doctest::Approx(2.0 / 31.0).epsilon(1e-12));  // degree 30 <= 2n-1
}
