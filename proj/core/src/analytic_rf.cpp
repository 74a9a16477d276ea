#include <cmath>
#include <stdexcept>

#include "rfvlc/analytic.hpp"
#include "rfvlc/geometry.hpp"
#include "rfvlc/quadrature.hpp"
#include "rfvlc/specfun.hpp"

namespace rfvlc {
namespace analytic {

namespace {

// Laplace argument mapping to the fading-scaled interference constant.
inline double laplace_a(const NetworkConfig& cfg, const DerivedParams& d, double s) {
    return s * d.k_eff * cfg.p_s_w * d.theta_fade;
}

inline double serving_s0(const NetworkConfig& cfg, const DerivedParams& d, double v) {
    return d.gamma_rf * std::pow(v, cfg.alpha) / (d.k_eff * cfg.p_s_w * d.theta_fade);
}

inline double nearest_pdf_rf(const DerivedParams& d, double v) {
    return 2.0 * M_PI * d.lambda_s * v * std::exp(-d.lambda_s * M_PI * v * v) / d.u_s;
}

int integer_shape(double kappa, const char* who) {
    const double r = std::round(kappa);
    if (std::fabs(kappa - r) > 1e-12 || r < 1.0)
        throw std::invalid_argument(std::string(who) + ": requires integer fading shape >= 1");
    return static_cast<int>(r);
}

// n-th derivative by central differences with two Richardson levels
// (leading error h^2 -> h^6).
template <typename F>
double richardson_deriv(F&& f, double s, int n, double h0) {
    auto stencil = [&](double h) {
        switch (n) {
            case 1: return (f(s + h) - f(s - h)) / (2.0 * h);
            case 2: return (f(s + h) - 2.0 * f(s) + f(s - h)) / (h * h);
            case 3: return (f(s + 2.0 * h) - 2.0 * f(s + h) + 2.0 * f(s - h) - f(s - 2.0 * h)) /
                           (2.0 * h * h * h);
            default: throw std::invalid_argument("richardson_deriv: order must be 1..3");
        }
    };
    const double d1 = stencil(h0);
    const double d2 = stencil(h0 / 2.0);
    const double d3 = stencil(h0 / 4.0);
    const double r1 = (4.0 * d2 - d1) / 3.0;
    const double r2 = (4.0 * d3 - d2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

}  // namespace

double rf_interference_phi(double kappa, double alpha, double a, double x) {
    const double z = -a * std::pow(x, -alpha);
    return x * x * (1.0 - gauss_2f1(kappa, -2.0 / alpha, 1.0 - 2.0 / alpha, z));
}

double rf_interference_laplace(const NetworkConfig& cfg, const DerivedParams& d, double s, double v) {
    if (s == 0.0) return 1.0;
    const double a = laplace_a(cfg, d, s);
    if (cfg.kappa_fade > 6.0) {
        // The hypergeometric antiderivative needs gamma ratios that overflow
        // for large shapes; integrate the annulus deficit directly instead.
        QuadratureOptions opt;
        opt.rel_tol = 1e-10;
        opt.abs_tol = 1e-14;
        auto f = [&](double t) {
            const double y = cfg.kappa_fade * std::log1p(a * std::pow(t, -cfg.alpha));
            return -std::expm1(-y) * t;
        };
        const double deficit = integrate(f, v, cfg.r_m_m, opt).value;
        return std::exp(-2.0 * M_PI * d.lambda_s * deficit);
    }
    const double phi_rm = rf_interference_phi(cfg.kappa_fade, cfg.alpha, a, cfg.r_m_m);
    const double phi_v = rf_interference_phi(cfg.kappa_fade, cfg.alpha, a, v);
    return std::exp(-M_PI * d.lambda_s * (phi_rm - phi_v));
}

double rf_rho(const NetworkConfig& cfg, const DerivedParams& d, double v) {
    const double b = 2.0 / cfg.alpha;
    const double ratio = cfg.r_m_m / v;
    const double z_far = -std::pow(ratio, cfg.alpha) / d.gamma_rf;
    const double z_near = -1.0 / d.gamma_rf;
    return ratio * ratio * gauss_2f1(1.0, b, 1.0 + b, z_far) - gauss_2f1(1.0, b, 1.0 + b, z_near);
}

double rf_conditional_coverage(const NetworkConfig& cfg, const DerivedParams& d, double v) {
    const int kappa = integer_shape(cfg.kappa_fade, "rf_conditional_coverage");
    const double s0 = serving_s0(cfg, d, v);
    auto lz = [&](double s) { return std::exp(-s * d.noise_rf) * rf_interference_laplace(cfg, d, s, v); };
    if (kappa == 1) return lz(s0);
    if (kappa > 4)
        throw std::invalid_argument("rf_conditional_coverage: fading shape above 4 is not supported; use the bound form");
    double sum = lz(s0);
    double fact = 1.0;
    const double h0 = 0.02 * s0;
    for (int n = 1; n < kappa; ++n) {
        fact *= n;
        const double dn = richardson_deriv(lz, s0, n, h0);
        sum += std::pow(-s0, n) / fact * dn;
    }
    return std::min(std::max(sum, 0.0), 1.0);
}

double rf_coverage_rayleigh(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    if (integer_shape(cfg.kappa_fade, "rf_coverage_rayleigh") != 1)
        throw std::invalid_argument("rf_coverage_rayleigh: fading shape must be 1");
    auto f = [&](double v) {
        const double rho = rf_rho(cfg, d, v);
        const double noise_exp = d.gamma_rf * d.noise_rf * std::pow(v, cfg.alpha) /
                                 (d.k_eff * cfg.p_s_w * d.theta_fade);
        return 2.0 * M_PI * d.lambda_s * v *
               std::exp(-M_PI * d.lambda_s * v * v * (1.0 + rho) - noise_exp) / d.u_s;
    };
    QuadratureOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-13;
    return integrate(f, 0.0, cfg.r_m_m, opt).value;
}

double rf_coverage_exact(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    integer_shape(cfg.kappa_fade, "rf_coverage_exact");
    auto f = [&](double v) { return nearest_pdf_rf(d, v) * rf_conditional_coverage(cfg, d, v); };
    QuadratureOptions opt;
    opt.rel_tol = 1e-8;
    opt.abs_tol = 1e-11;
    return integrate(f, 0.0, cfg.r_m_m, opt).value;
}

double rf_coverage_alzer(const NetworkConfig& cfg, AlzerBound bound) {
    const DerivedParams d = derive(cfg);
    const int kappa = integer_shape(cfg.kappa_fade, "rf_coverage_alzer");
    const double p_hat = bound == AlzerBound::sharp ? std::exp(-std::lgamma(kappa + 1.0) / kappa) : 1.0;

    double total = 0.0;
    double binom = 1.0;
    for (int l = 1; l <= kappa; ++l) {
        binom = binom * (kappa - l + 1) / l;
        const double sign = (l % 2 == 1) ? 1.0 : -1.0;
        auto f = [&](double v) {
            const double sl = p_hat * l * serving_s0(cfg, d, v);
            return nearest_pdf_rf(d, v) * std::exp(-sl * d.noise_rf) *
                   rf_interference_laplace(cfg, d, sl, v);
        };
        QuadratureOptions opt;
        opt.rel_tol = 1e-9;
        opt.abs_tol = 1e-12;
        total += sign * binom * integrate(f, 0.0, cfg.r_m_m, opt).value;
    }
    return std::min(std::max(total, 0.0), 1.0);
}

double rf_coverage_noise_only(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    auto f = [&](double v) {
        const double y = serving_s0(cfg, d, v) * d.noise_rf;
        return nearest_pdf_rf(d, v) * regularized_gamma_q(cfg.kappa_fade, y);
    };
    QuadratureOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-13;
    return integrate(f, 0.0, cfg.r_m_m, opt).value;
}

}  // namespace analytic
}  // namespace rfvlc
