#include <cmath>
#include <stdexcept>

#include "rfvlc/analytic.hpp"
#include "rfvlc/geometry.hpp"
#include "rfvlc/quadrature.hpp"
#include "rfvlc/specfun.hpp"

namespace rfvlc {
namespace analytic {

namespace {

inline double nearest_pdf_obs(const DerivedParams& d, double r) {
    return 2.0 * M_PI * d.lambda_o * r * std::exp(-d.lambda_o * M_PI * r * r) / d.u_o;
}

inline double fov_mass(const NetworkConfig& cfg, const DerivedParams& d) {
    return prob_obs_in_fov(d.lambda_o, d.t_radius, cfg.r_m_m);
}

// Horizontal-distance-squared interval of one interferer, shifted by h^2.
struct UniformCell {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double width() const { return t_hi - t_lo; }
};

UniformCell interferer_cell(const NetworkConfig& cfg, const DerivedParams& d, double r) {
    const double h2 = cfg.h_m * cfg.h_m;
    return {r * r + h2, d.t_radius * d.t_radius + h2};
}

}  // namespace

double vlc_signal_power(const NetworkConfig& cfg, const DerivedParams& d, double r) {
    if (r > d.t_radius) return 0.0;
    const double mexp = d.m_order + 3.0;
    return d.c_vlc * std::pow(r * r + cfg.h_m * cfg.h_m, -mexp);
}

double vlc_laplace_single(const NetworkConfig& cfg, const DerivedParams& d, double s, double r) {
    if (s == 0.0) return 1.0;
    if (s < 0.0) throw std::invalid_argument("vlc_laplace_single: s must be non-negative");
    const double mexp = d.m_order + 3.0;
    const UniformCell cell = interferer_cell(cfg, d, r);
    if (cell.width() <= 1e-14 * cell.t_hi)
        return std::exp(-s * d.c_vlc * std::pow(cell.t_lo, -mexp));

    const double w_max = d.c_vlc * std::pow(cell.t_lo, -mexp);
    if (s * w_max < 1e-3) {
        // Nearly transparent transform: integrate expm1 to keep the
        // cancellation against 1 exact.
        QuadratureOptions opt;
        opt.rel_tol = 1e-12;
        opt.abs_tol = 1e-18;
        auto f = [&](double t) { return std::expm1(-s * d.c_vlc * std::pow(t, -mexp)); };
        return 1.0 + integrate(f, cell.t_lo, cell.t_hi, opt).value / cell.width();
    }

    const double cs = d.c_vlc * s;
    const double x = cs * std::pow(cell.t_hi, -mexp);
    const double y = cs * std::pow(cell.t_lo, -mexp);
    const double g = gen_inc_gamma(-1.0 / mexp, x, y);
    return std::pow(cs, 1.0 / mexp) * g / (mexp * cell.width());
}

cdouble vlc_laplace_single_c(const NetworkConfig& cfg, const DerivedParams& d, cdouble s, double r) {
    if (s == cdouble(0.0, 0.0)) return 1.0;
    if (s.imag() == 0.0) return vlc_laplace_single(cfg, d, s.real(), r);
    const double mexp = d.m_order + 3.0;
    const UniformCell cell = interferer_cell(cfg, d, r);
    if (cell.width() <= 1e-14 * cell.t_hi)
        return std::exp(-s * d.c_vlc * std::pow(cell.t_lo, -mexp));

    const cdouble x = s * d.c_vlc * std::pow(cell.t_hi, -mexp);
    const cdouble y = s * d.c_vlc * std::pow(cell.t_lo, -mexp);
    if (std::abs(y - x) < 30.0) {
        // Short transform span: direct quadrature beats the gamma route.
        QuadratureOptions opt;
        opt.rel_tol = 1e-11;
        opt.abs_tol = 1e-15;
        opt.max_panels = 400;
        auto f = [&](double t) { return std::exp(-s * d.c_vlc * std::pow(t, -mexp)); };
        return integrate(f, cell.t_lo, cell.t_hi, opt).value / cell.width();
    }
    const cdouble g = gen_inc_gamma_c(-1.0 / mexp, x, y);
    return std::pow(s * d.c_vlc, cdouble(1.0 / mexp)) * g / (mexp * cell.width());
}

double vlc_laplace_aggregate(const NetworkConfig& cfg, const DerivedParams& d, double s, double r) {
    const double mu = d.lambda_o * M_PI * (d.t_radius * d.t_radius - r * r);
    if (mu <= 0.0) return 1.0;
    return std::exp(mu * (vlc_laplace_single(cfg, d, s, r) - 1.0));
}

cdouble vlc_laplace_aggregate_c(const NetworkConfig& cfg, const DerivedParams& d, cdouble s, double r) {
    const double mu = d.lambda_o * M_PI * (d.t_radius * d.t_radius - r * r);
    if (mu <= 0.0) return 1.0;
    return std::exp(mu * (vlc_laplace_single_c(cfg, d, s, r) - 1.0));
}

double vlc_laplace_unconditional(const NetworkConfig& cfg, const DerivedParams& d, double s) {
    QuadratureOptions opt;
    opt.rel_tol = 1e-9;
    opt.abs_tol = 1e-12;
    auto f = [&](double r) { return nearest_pdf_obs(d, r) * vlc_laplace_aggregate(cfg, d, s, r); };
    const double inside = integrate(f, 0.0, d.t_radius, opt).value;
    return inside + (1.0 - fov_mass(cfg, d));
}

std::vector<double> vlc_interferer_pmf(const NetworkConfig& cfg, int max_k) {
    const DerivedParams d = derive(cfg);
    const double p_fov = fov_mass(cfg, d);
    std::vector<double> pmf(static_cast<std::size_t>(max_k + 1), 0.0);
    QuadratureOptions opt;
    opt.rel_tol = 1e-9;
    opt.abs_tol = 1e-13;
    for (int k = 0; k <= max_k; ++k) {
        auto f = [&](double r) {
            const double mu = d.lambda_o * M_PI * (d.t_radius * d.t_radius - r * r);
            const double log_pois = mu > 0.0 ? k * std::log(mu) - mu - std::lgamma(k + 1.0)
                                             : (k == 0 ? 0.0 : -INFINITY);
            return nearest_pdf_obs(d, r) * std::exp(log_pois);
        };
        pmf[static_cast<std::size_t>(k)] = integrate(f, 0.0, d.t_radius, opt).value / p_fov;
    }
    return pmf;
}

cdouble vlc_cf_omega(const NetworkConfig& cfg, const DerivedParams& d, double omega) {
    if (omega == 0.0) return 1.0;
    if (omega < 0.0) return std::conj(vlc_cf_omega(cfg, d, -omega));
    QuadratureOptions opt;
    opt.rel_tol = 1e-9;
    opt.abs_tol = 1e-12;
    opt.max_panels = 4000;
    const cdouble j(0.0, 1.0);
    auto f = [&](double r) -> cdouble {
        const double x = vlc_signal_power(cfg, d, r);
        return nearest_pdf_obs(d, r) * std::exp(j * omega * x) *
               vlc_laplace_aggregate_c(cfg, d, j * omega * d.gamma_vlc, r);
    };
    return integrate(f, 0.0, d.t_radius, opt).value / fov_mass(cfg, d);
}

CfSeriesResult vlc_cf_asymptotic(const NetworkConfig& cfg, const DerivedParams& d, double omega,
                                 int max_terms, bool h_squared) {
    if (omega <= 0.0) throw std::invalid_argument("vlc_cf_asymptotic: omega must be positive");
    if (max_terms < 1) throw std::invalid_argument("vlc_cf_asymptotic: need at least one term");
    const double m = d.m_order;
    const double h2 = cfg.h_m * cfg.h_m;
    const cdouble j(0.0, 1.0);

    // Transform argument of the conditional interference transform inside the
    // characteristic function (negative-sign convention internally).
    const cdouble s = -j * omega * d.gamma_vlc;
    const cdouble big_m = d.lambda_o * M_PI / (d.c_vlc * s);
    const cdouble g = big_m * std::pow(h2, m + 4.0);
    const double outer = h_squared ? d.t_radius * d.t_radius + h2 : d.t_radius * d.t_radius + cfg.h_m;
    const cdouble n = big_m * std::pow(outer, m + 4.0);

    const double pref_re = M_PI * d.lambda_o * std::exp(d.lambda_o * M_PI * h2) / (m + 4.0);
    CfSeriesResult res;
    cdouble sum = 0.0;
    double prev_mag = INFINITY;
    int growth_streak = 0;
    double log_fact = 0.0;  // log((k+1)!)
    for (int k = 0; k < max_terms; ++k) {
        log_fact += std::log(static_cast<double>(k + 1));
        const cdouble sign_pow = std::exp(j * M_PI * (7.0 + 2.0 * m) * (k + 1.0) / (4.0 + m));
        const cdouble m_pow = std::pow(big_m, (1.0 - m * k - 3.0 * k) / (m + 4.0));
        const double b_param = (1.0 + k) * (3.0 + m) / (m + 4.0);
        cdouble f_g, f_n;
        try {
            f_g = gauss_2f1_series(cdouble(1.0 + k), cdouble(b_param), cdouble(k + 2.0), g);
            f_n = gauss_2f1_series(cdouble(1.0 + k), cdouble(b_param), cdouble(k + 2.0), n);
        } catch (const NumericError&) {
            throw NumericError("vlc_cf_asymptotic: hypergeometric argument outside the convergent regime",
                               sum);
        }
        const cdouble term = pref_re * sign_pow / (std::exp(log_fact) * m_pow) *
                             (f_g * std::pow(g, cdouble(1.0 + k)) - f_n * std::pow(n, cdouble(1.0 + k)));
        sum += term;
        res.last_term_mag = std::abs(term);
        res.terms_used = k + 1;
        if (res.last_term_mag > prev_mag && k >= 2) {
            if (++growth_streak >= 3)
                throw NumericError("vlc_cf_asymptotic: series terms growing; outside the convergent regime",
                                   sum);
        } else {
            growth_streak = 0;
        }
        prev_mag = res.last_term_mag;
        if (res.last_term_mag < 1e-12 * std::max(1.0, std::abs(sum))) break;
    }
    // Internal series follows the negative-sign convention; return the
    // standard positive one.
    res.value = std::conj(sum);
    return res;
}

double vlc_coverage_noise_limited(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    const double mexp = d.m_order + 3.0;
    const double rho2 =
        std::pow(d.c_vlc / (d.gamma_vlc * d.noise_vlc), 1.0 / mexp) - cfg.h_m * cfg.h_m;
    if (rho2 <= 0.0) return 0.0;
    const double reach2 = std::min(rho2, d.t_radius * d.t_radius);
    return -std::expm1(-M_PI * d.lambda_o * reach2) / d.u_o;
}

double vlc_conditional_coverage(const NetworkConfig& cfg, const DerivedParams& d, double r,
                                const GilPelaezOptions& gp) {
    const double x = vlc_signal_power(cfg, d, r);
    if (x <= 0.0) return 0.0;
    const double tau = x / d.gamma_vlc - d.noise_vlc;
    if (tau <= 0.0) return 0.0;
    const double mu = d.lambda_o * M_PI * (d.t_radius * d.t_radius - r * r);
    if (mu < 1e-12) return 1.0;
    const double q = std::exp(-mu);

    // Split the zero-interference atom off and invert only the continuous
    // remainder of the aggregate's law.
    const cdouble jc(0.0, 1.0);
    auto cf_positive = [&](double w) -> cdouble {
        const cdouble psi_a = vlc_laplace_aggregate_c(cfg, d, -jc * w, r);
        return (psi_a - q) / (1.0 - q);
    };
    const GilPelaezResult inv = gil_pelaez_cdf(cf_positive, tau, gp);
    return std::min(std::max(q + (1.0 - q) * inv.value, 0.0), 1.0);
}

double vlc_coverage_exact(const NetworkConfig& cfg, const GilPelaezOptions& gp) {
    const DerivedParams d = derive(cfg);
    const double mexp = d.m_order + 3.0;
    const double rho2 =
        std::pow(d.c_vlc / (d.gamma_vlc * d.noise_vlc), 1.0 / mexp) - cfg.h_m * cfg.h_m;
    if (rho2 <= 0.0) return 0.0;
    const double r_hi = std::min(std::sqrt(rho2), d.t_radius);
    auto f = [&](double r) { return nearest_pdf_obs(d, r) * vlc_conditional_coverage(cfg, d, r, gp); };
    QuadratureOptions opt;
    opt.rel_tol = 1e-6;
    opt.abs_tol = 1e-8;
    opt.max_panels = 60;
    return std::min(std::max(integrate(f, 0.0, r_hi, opt).value, 0.0), 1.0);
}

}  // namespace analytic
}  // namespace rfvlc
