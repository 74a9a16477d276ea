#include <cmath>
#include <functional>

#include "rfvlc/analytic.hpp"
#include "rfvlc/quadrature.hpp"

namespace rfvlc {
namespace analytic {

namespace {

// Ergodic-mean machinery: E[ln(1 + X/(N + Y))] written as a single Laplace
// axis integral of E[L_Y(s) (1 - L_X(s))] e^{-sN} / s. The axis spans many
// decades, so integrate in u = ln s and keep extending the lower end until
// the added mass is negligible.
template <typename F>
double integrate_log_axis(F&& f, double s_lo, double s_hi) {
    auto g = [&](double u) {
        const double s = std::exp(u);
        return f(s) * s;
    };
    QuadratureOptions opt;
    opt.rel_tol = 1e-8;
    opt.abs_tol = 1e-12;
    opt.max_panels = 4000;
    double lo = std::log(s_lo);
    const double hi = std::log(s_hi);
    double total = integrate(g, lo, hi, opt).value;
    for (int i = 0; i < 12; ++i) {
        const double piece = integrate(g, lo - 3.0, lo, opt).value;
        total += piece;
        lo -= 3.0;
        if (std::fabs(piece) <= 1e-8 * std::fabs(total)) break;
    }
    return total;
}

double rf_fading_mgf_deficit(const NetworkConfig& cfg, const DerivedParams& d, double s, double v) {
    // 1 - E[e^{-s X}] for the serving link X = k_eff Ps v^-alpha chi.
    const double x = s * d.theta_fade * d.k_eff * cfg.p_s_w * std::pow(v, -cfg.alpha);
    return -std::expm1(-cfg.kappa_fade * std::log1p(x));
}

double rf_hamdi_nats(const NetworkConfig& cfg, const DerivedParams& d,
                     const std::function<double(double)>& pdf, double v_hi) {
    auto inner = [&](double s) {
        QuadratureOptions opt;
        opt.rel_tol = 1e-8;
        opt.abs_tol = 1e-12;
        auto fv = [&](double v) {
            return pdf(v) * rf_interference_laplace(cfg, d, s, v) * rf_fading_mgf_deficit(cfg, d, s, v);
        };
        return integrate(fv, 0.0, v_hi, opt).value * std::exp(-s * d.noise_rf) / s;
    };
    const double v_ref = std::min(0.5 / std::sqrt(d.lambda_s), 0.8 * cfg.r_m_m);
    const double x_ref = d.theta_fade * cfg.kappa_fade * d.k_eff * cfg.p_s_w * std::pow(v_ref, -cfg.alpha);
    const double s_lo = 1e-6 / x_ref;
    const double s_hi = 50.0 / d.noise_rf;
    return integrate_log_axis(inner, s_lo, s_hi);
}

double vlc_hamdi_nats(const NetworkConfig& cfg, const DerivedParams& d,
                      const std::function<double(double)>& pdf) {
    auto inner = [&](double s) {
        QuadratureOptions opt;
        opt.rel_tol = 1e-8;
        opt.abs_tol = 1e-12;
        auto fr = [&](double r) {
            const double x = vlc_signal_power(cfg, d, r);
            return pdf(r) * vlc_laplace_aggregate(cfg, d, s, r) * (-std::expm1(-s * x));
        };
        return integrate(fr, 0.0, d.t_radius, opt).value * std::exp(-s * d.noise_vlc) / s;
    };
    const double x_peak = vlc_signal_power(cfg, d, 0.0);
    const double s_lo = 1e-6 / x_peak;
    const double s_hi = 50.0 / d.noise_vlc;
    return integrate_log_axis(inner, s_lo, s_hi);
}

}  // namespace

double spectral_efficiency_rf(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    auto pdf = [&](double v) {
        return 2.0 * M_PI * d.lambda_s * v * std::exp(-d.lambda_s * M_PI * v * v) / d.u_s;
    };
    return rf_hamdi_nats(cfg, d, pdf, cfg.r_m_m) / M_LN2;
}

double spectral_efficiency_vlc(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    auto pdf = [&](double r) {
        return 2.0 * M_PI * d.lambda_o * r * std::exp(-d.lambda_o * M_PI * r * r) / d.u_o;
    };
    return vlc_hamdi_nats(cfg, d, pdf) / M_LN2;
}

double spectral_efficiency_opportunistic(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    const double p_o = association_probability(cfg);

    const double expo = 2.0 * (d.m_order + 3.0) / cfg.alpha;
    const double h2 = cfg.h_m * cfg.h_m;
    auto pdf_obs = [&](double x) {
        const double cell_block = d.lambda_s * M_PI * d.z1 * std::pow(x * x + h2, expo);
        return 2.0 * M_PI * d.lambda_o * x * std::exp(-cell_block - d.lambda_o * M_PI * x * x) /
               (p_o * d.u_o);
    };
    const double se_o = vlc_hamdi_nats(cfg, d, pdf_obs) / M_LN2;

    // RF mixture density, self-normalized on [0, r_m] with the constant
    // hoisted out of the double integral.
    QuadratureOptions opt;
    opt.rel_tol = 1e-9;
    opt.abs_tol = 1e-13;
    auto kern = [&](double x) { return serving_pdf_sbs_kernel(cfg, d, x); };
    const double norm = integrate(kern, 0.0, cfg.r_m_m, opt).value;
    auto pdf_sbs = [&](double x) { return serving_pdf_sbs_kernel(cfg, d, x) / norm; };
    const double se_s = rf_hamdi_nats(cfg, d, pdf_sbs, cfg.r_m_m) / M_LN2;

    return p_o * se_o + (1.0 - p_o) * se_s;
}

}  // namespace analytic
}  // namespace rfvlc
