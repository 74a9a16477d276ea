#include "rfvlc/gilpelaez.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rfvlc/quadrature.hpp"

namespace rfvlc {

namespace {

// Euler transformation on the trailing partial sums: each averaging level
// halves the leading alternating tail component. Returns the deepest entry
// and the gap to the level above it as an error proxy.
struct EulerEstimate {
    double value = 0.0;
    double gap = 0.0;
};

EulerEstimate euler_tail(const std::vector<double>& partials, int levels) {
    const int use = std::min<int>(levels, static_cast<int>(partials.size()) - 1);
    std::vector<double> row(partials.end() - (use + 1), partials.end());
    double last = row.back(), second = row.back();
    for (int lvl = 0; lvl < use; ++lvl) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        row.pop_back();
        second = last;
        last = row.back();
    }
    return {last, std::fabs(last - second)};
}

}  // namespace

GilPelaezResult gil_pelaez_cdf(const std::function<std::complex<double>(double)>& cf, double x,
                               const GilPelaezOptions& opt) {
    if (x == 0.0 || !std::isfinite(x))
        throw std::invalid_argument("gil_pelaez_cdf: x must be finite and nonzero");
    const double ax = std::fabs(x);
    const double sign = x > 0.0 ? 1.0 : -1.0;

    // Phase substitution theta = w * |x|; integrand in theta. The composite
    // phase can turn much faster than theta near the origin, so every
    // pi-panel is integrated adaptively rather than with one fixed rule.
    auto g = [&](double theta) {
        const double w = theta / ax;
        const std::complex<double> val = cf(w);
        return (std::cos(sign * theta) * val.imag() - std::sin(sign * theta) * val.real()) / theta;
    };

    std::vector<double> partials, panels;
    partials.reserve(128);
    panels.reserve(128);
    double sum = 0.0;

    GilPelaezResult res;
    auto finish = [&](double integral, double err, bool ok, int used) {
        res.value = std::clamp(0.5 - integral / M_PI, 0.0, 1.0);
        res.error = err / M_PI + 1e-14;
        res.converged = ok;
        res.panels = used;
        return res;
    };

    for (int k = 0; k < opt.max_panels; ++k) {
        QuadratureOptions q;
        q.abs_tol = std::max(0.01 * opt.abs_tol / std::pow(k + 1.0, 1.5), 1e-15);
        q.rel_tol = 1e-9;
        q.max_panels = 400;
        const double pk = integrate(g, k * M_PI, (k + 1) * M_PI, q).value;
        sum += pk;
        panels.push_back(pk);
        partials.push_back(sum);
        if (k + 1 < opt.min_panels) continue;

        // Dead tail: two consecutive negligible panels bound the remainder
        // for any eventually monotone-decaying envelope.
        const double tail_bound = std::fabs(pk) + std::fabs(panels[k - 1]);
        if (tail_bound < 0.5 * opt.abs_tol) return finish(sum, tail_bound, true, k + 1);

        // Alternating tail: accept the Euler-averaged estimate once the last
        // panels alternate in sign and the deepest two levels agree.
        if (k >= opt.avg_levels + 1) {
            int flips = 0;
            for (int i = 0; i < 5; ++i)
                if (panels[k - i] * panels[k - i - 1] < 0.0) ++flips;
            if (flips >= 4) {
                const EulerEstimate e = euler_tail(partials, opt.avg_levels);
                if (e.gap + std::fabs(pk) * 0.03 < 0.5 * opt.abs_tol)
                    return finish(e.value, e.gap + 0.03 * std::fabs(pk), true, k + 1);
            }
        }
    }

    // Out of panels: report the better of the raw and averaged estimates.
    const EulerEstimate e = euler_tail(partials, opt.avg_levels);
    const double raw_err = std::fabs(panels.back()) + (panels.size() > 1 ? std::fabs(panels[panels.size() - 2]) : 0.0);
    if (e.gap < raw_err) return finish(e.value, e.gap, false, opt.max_panels);
    return finish(sum, raw_err, false, opt.max_panels);
}

}  // namespace rfvlc
