#pragma once

// Distribution-function recovery from a characteristic function via the
// sine-transform inversion formula, for continuous distributions:
//   P(T < x) = 1/2 - (1/pi) Int_0^inf Im[e^{-i w x} cf(w)] / w dw.
// The integral is taken in phase panels of width pi with alternating-series
// averaging applied to the partial sums, which accelerates the slowly
// decaying oscillatory tail.

#include <complex>
#include <functional>

namespace rfvlc {

struct GilPelaezOptions {
    double abs_tol = 1e-7;      // target absolute error on the probability
    int max_panels = 6000;      // phase panels of width pi
    int min_panels = 8;
    int avg_levels = 6;         // repeated-averaging depth on partial sums
};

struct GilPelaezResult {
    double value = 0.0;         // clamped to [0, 1]
    double error = 0.0;         // residual estimate from the averaging table
    bool converged = true;
    int panels = 0;
};

// cf(w) = E[e^{i w T}] for w > 0; x must be a continuity point of T and
// nonzero (the phase substitution uses |x| as the panel scale).
GilPelaezResult gil_pelaez_cdf(const std::function<std::complex<double>(double)>& cf, double x,
                               const GilPelaezOptions& opt = {});

}  // namespace rfvlc
