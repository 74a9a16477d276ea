#pragma once

// Special functions needed by the analytic engine: Gauss hypergeometric 2F1
// on the non-positive real axis, upper/generalized incomplete gamma with
// negative first parameter (real and complex second argument), Lambert W0,
// and the two closed-form erf approximations used by the design solvers.

#include <complex>
#include <stdexcept>
#include <string>

namespace rfvlc {

using cdouble = std::complex<double>;

// Thrown when an iterative evaluation fails to converge; carries the partial
// sum so callers can report how far the computation got.
class NumericError : public std::runtime_error {
  public:
    NumericError(const std::string& what, cdouble partial)
        : std::runtime_error(what), partial_(partial) {}
    cdouble partial() const { return partial_; }

  private:
    cdouble partial_;
};

// 2F1(a,b;c;z) for real parameters and z <= 0.5. Power series for |z| <= 0.5,
// Pfaff transform z -> z/(z-1) for -2 < z < -0.5, and the 1/z connection
// formula for z <= -2 (requires b-a non-integer, which holds for every
// parameter family the coverage expressions produce).
double gauss_2f1(double a, double b, double c, double z);

// Plain power series with complex argument; converges for |z| < 1 and throws
// NumericError (carrying the partial sum) when term growth signals
// divergence. Used by the asymptotic characteristic-function series.
cdouble gauss_2f1_series(cdouble a, cdouble b, cdouble c, cdouble z, int max_terms = 4000);

// Regularized incomplete gamma P(a,x), Q(a,x) for a > 0, x >= 0.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Upper incomplete gamma for real z (not 0 or a negative integer), x > 0.
// Negative z handled by the recurrence G(z,x) = (G(z+1,x) - x^z e^-x)/z
// applied until the first parameter is positive.
double upper_inc_gamma(double z, double x);

// Generalized incomplete gamma over [x,y]: G(z,x) - G(z,y), antisymmetric in
// (x,y). Close arguments fall back to direct quadrature of t^(z-1) e^-t to
// avoid cancellation.
double gen_inc_gamma(double z, double x, double y);

// Complex-argument versions for characteristic-function evaluation. z is real
// (the order), x/y lie on a ray from the origin with Re >= 0 or on the
// imaginary axis. Small |x| by the convergent series, large |x| by the
// asymptotic expansion.
cdouble upper_inc_gamma_c(double z, cdouble x);
cdouble gen_inc_gamma_c(double z, cdouble x, cdouble y);

// Principal branch Lambert W0 for x >= -1/e; relative accuracy ~1e-14.
double lambert_w0(double x);

// Scaled complementary error function e^(x^2) erfc(x). Stays accurate where
// erfc alone underflows, so exp-weighted erfc differences can be folded into
// single products.
double erfcx(double x);

// Winitzki closed-form erf approximation (a = 0.140012); |error| < 3.5e-4.
double erf_approx_winitzki(double x);

// Tail surrogate e^(-x^2)/x used only inside the closed-form design
// inversions, never as a general erf.
double erf_approx_tail(double x);

// Exponential-type bounds of the normalized Gamma CDF: for shape kappa and
// unit scale, lower <= P(kappa, x) <= upper with the sharp exponents
// p = Gamma(kappa+1)^(-1/kappa) and 1 swapping roles across kappa = 1.
struct AlzerBounds {
    double lower = 0.0;
    double upper = 0.0;
};
AlzerBounds gamma_cdf_alzer_bounds(double kappa, double x);

}  // namespace rfvlc
