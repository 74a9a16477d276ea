#pragma once

// Shared statistical helpers for the test suites: one-sample
// Kolmogorov-Smirnov and chi-square goodness-of-fit with hand-rolled
// p-values, so distributional checks fail loudly instead of eyeballing.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "rfvlc/specfun.hpp"

namespace testsupport {

// Asymptotic Kolmogorov tail Q(t) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 t^2).
inline double kolmogorov_q(double t) {
    if (t < 0.2) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * double(k) * k * t * t);
        sum += (k % 2 ? term : -term);
        if (term < 1e-16) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

struct KsResult {
    double statistic = 0.0;
    double p_value = 0.0;
    std::size_t n = 0;
};

// One-sample KS against a continuous CDF, with the Stephens small-sample
// correction on the test statistic.
inline KsResult ks_test(std::vector<double> x, const std::function<double(double)>& cdf) {
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        d = std::max({d, (i + 1.0) / n - f, f - i / n});
    }
    const double t = d * (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n));
    return {d, kolmogorov_q(t), x.size()};
}

struct ChiSquareResult {
    double statistic = 0.0;
    double p_value = 0.0;
    int dof = 0;
};

// Goodness-of-fit of observed counts against cell probabilities; trailing
// cells pool until each expected count reaches five. `n` is the sample size.
inline ChiSquareResult chi_square_gof(const std::vector<double>& counts,
                                      const std::vector<double>& probs, double n) {
    std::vector<double> obs, exp;
    double pooled_o = 0.0, pooled_e = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        pooled_o += counts[i];
        pooled_e += n * probs[i];
        if (pooled_e >= 5.0) {
            obs.push_back(pooled_o);
            exp.push_back(pooled_e);
            pooled_o = pooled_e = 0.0;
        }
    }
    if (pooled_e > 0.0 && !obs.empty()) {
        obs.back() += pooled_o;
        exp.back() += pooled_e;
    }
    ChiSquareResult out;
    if (obs.size() < 2) return {0.0, 1.0, 0};
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double diff = obs[i] - exp[i];
        out.statistic += diff * diff / exp[i];
    }
    out.dof = static_cast<int>(obs.size()) - 1;
    out.p_value = rfvlc::regularized_gamma_q(0.5 * out.dof, 0.5 * out.statistic);
    return out;
}

}  // namespace testsupport
