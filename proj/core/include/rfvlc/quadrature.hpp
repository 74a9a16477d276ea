#pragma once

// Adaptive Gauss-Kronrod 7/15 quadrature over finite intervals, templated on
// the value type so the same driver integrates real and complex integrands.

#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

namespace rfvlc {

namespace detail {

// Kronrod-15 abscissae on [0,1] side (symmetric) and weights; Gauss-7 weights
// apply to every second abscissa.
inline constexpr double kGkNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kGkWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

inline double norm_of(double v) { return std::abs(v); }
inline double norm_of(const std::complex<double>& v) { return std::abs(v); }

}  // namespace detail

template <typename T>
struct PanelEstimate {
    T value{};
    double error = 0.0;
};

// Single Gauss-Kronrod 7/15 panel on [a,b].
template <typename F, typename T = std::invoke_result_t<F, double>>
PanelEstimate<T> gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T kron = fc * detail::kGkWeights[7];
    T gauss = fc * detail::kGaussWeights[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = h * detail::kGkNodes[i];
        T fsum = f(c - dx) + f(c + dx);
        kron += fsum * detail::kGkWeights[i];
        if (i % 2 == 1) gauss += fsum * detail::kGaussWeights[i / 2];
    }
    PanelEstimate<T> out;
    out.value = kron * h;
    out.error = detail::norm_of((kron - gauss) * h);
    return out;
}

struct QuadratureOptions {
    double abs_tol = 0.0;
    double rel_tol = 1e-10;
    std::size_t max_panels = 2000;
    bool throw_on_failure = false;  // otherwise returns best estimate
};

template <typename T>
struct QuadratureResult {
    T value{};
    double error = 0.0;
    bool converged = true;
    std::size_t panels = 0;
};

// Adaptive bisection driven by per-panel Kronrod error, worst panel first.
template <typename F, typename T = std::invoke_result_t<F, double>>
QuadratureResult<T> integrate(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
    QuadratureResult<T> res;
    if (a == b) return res;

    struct Panel {
        double a, b, error;
        T value;
        bool operator<(const Panel& o) const { return error < o.error; }
    };
    std::priority_queue<Panel> heap;
    auto first = gk15(f, a, b);
    heap.push({a, b, first.error, first.value});
    T total = first.value;
    double total_err = first.error;
    std::size_t n = 1;

    auto tolerance = [&](void) {
        return std::max(opt.abs_tol, opt.rel_tol * detail::norm_of(total));
    };

    while (total_err > tolerance() && n < opt.max_panels) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval exhausted by rounding
            heap.push({worst.a, worst.b, 0.0, worst.value});
            continue;
        }
        auto left = gk15(f, worst.a, mid);
        auto right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push({worst.a, mid, left.error, left.value});
        heap.push({mid, worst.b, right.error, right.value});
        ++n;
    }

    res.value = total;
    res.error = total_err;
    res.panels = n;
    res.converged = total_err <= tolerance() * 1.000001 || total_err <= opt.abs_tol;
    if (!res.converged && opt.throw_on_failure)
        throw std::runtime_error("quadrature did not reach requested tolerance");
    return res;
}

// Semi-infinite integral via t = a + s*u/(1-u), u in (0,1).
template <typename F, typename T = std::invoke_result_t<F, double>>
QuadratureResult<T> integrate_semi_infinite(F&& f, double a, double scale,
                                            const QuadratureOptions& opt = {}) {
    auto g = [&](double u) {
        const double om = 1.0 - u;
        const double t = a + scale * u / om;
        return f(t) * (scale / (om * om));
    };
    return integrate(g, 0.0, 1.0, opt);
}

// Nodes/weights of the n-point Gauss-Legendre rule on [-1,1] (Newton on the
// Legendre recurrence; n modest, used for fixed inner grids).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace rfvlc
