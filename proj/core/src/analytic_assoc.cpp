#include <cmath>
#include <stdexcept>

#include "rfvlc/analytic.hpp"
#include "rfvlc/quadrature.hpp"
#include "rfvlc/specfun.hpp"

namespace rfvlc {
namespace analytic {

namespace {

// Mean-power association integrand pieces. The optical tier wins from
// horizontal distance r whenever no small cell stands inside
// x(r) = sqrt(z1) (r^2 + h^2)^{(m+3)/alpha}.
struct AssocParams {
    double lambda_o = 0.0;
    double lambda_s = 0.0;
    double z1 = 0.0;
    double expo = 0.0;  // 2 (m+3) / alpha
    double h2 = 0.0;
    double t_radius = 0.0;
    double u_o = 0.0;
};

AssocParams make_params(const NetworkConfig& cfg, const DerivedParams& d, double z1) {
    AssocParams p;
    p.lambda_o = d.lambda_o;
    p.lambda_s = d.lambda_s;
    p.z1 = z1;
    p.expo = 2.0 * (d.m_order + 3.0) / cfg.alpha;
    p.h2 = cfg.h_m * cfg.h_m;
    p.t_radius = d.t_radius;
    p.u_o = d.u_o;
    return p;
}

double assoc_integral(const AssocParams& p) {
    auto f = [&](double r) {
        const double cell_block = p.lambda_s * M_PI * p.z1 * std::pow(r * r + p.h2, p.expo);
        return r * std::exp(-cell_block - p.lambda_o * M_PI * r * r);
    };
    QuadratureOptions opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 1e-15;
    return 2.0 * M_PI * p.lambda_o / p.u_o * integrate(f, 0.0, p.t_radius, opt).value;
}

}  // namespace

double association_probability(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    return assoc_integral(make_params(cfg, d, d.z1));
}

double association_probability_z1(const NetworkConfig& cfg, double z1) {
    if (z1 <= 0.0) throw std::invalid_argument("association_probability_z1: z1 must be positive");
    const DerivedParams d = derive(cfg);
    return assoc_integral(make_params(cfg, d, z1));
}

double association_probability_closed(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    if (std::fabs(d.m_order + 3.0 - cfg.alpha) > 1e-9)
        throw std::invalid_argument(
            "association_probability_closed: needs the Lambertian order plus three equal to the path-loss exponent");
    // With that tie the blocking exponent is quadratic in t = r^2 + h^2 and the
    // integral Gaussian: complete the square and take an erf difference. Both
    // erf arguments sit deep in the right tail whenever lambda_o is large and
    // the view radius small, so the naive exp * (erf - erf) form cancels to
    // nothing; fold the weight into each term instead, using
    // e^C erfc(u) = e^(C - u^2) erfcx(u) with C - u^2 expanded analytically.
    const double a = d.lambda_s * M_PI * d.z1;
    const double b = d.lambda_o * M_PI;
    const double c = b / (2.0 * a);
    const double t1 = cfg.h_m * cfg.h_m;
    const double t2 = d.t_radius * d.t_radius + t1;
    const double e1 = std::exp(-a * t1 * t1) * erfcx(std::sqrt(a) * (t1 + c));
    const double e2 = std::exp(-a * t2 * t2 - b * (t2 - t1)) * erfcx(std::sqrt(a) * (t2 + c));
    return M_PI * d.lambda_o / d.u_o * 0.5 * std::sqrt(M_PI / a) * (e1 - e2);
}

double association_probability_asymptotic(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    const double blocked = d.lambda_o + 2.0 * cfg.h_m * cfg.h_m * d.z1 * d.lambda_s;
    // As lambda_s -> 0 this must recover the in-view mass 1 - e^(-pi lambda_o T^2).
    const double fov_term = -std::expm1(-M_PI * d.lambda_o * d.t_radius * d.t_radius);
    return std::min(std::max(d.lambda_o * fov_term / blocked, 0.0), 1.0);
}

double serving_pdf_obs(const NetworkConfig& cfg, const DerivedParams& d, double x) {
    if (x < 0.0 || x > d.t_radius) return 0.0;
    const AssocParams p = make_params(cfg, d, d.z1);
    const double p_o = assoc_integral(p);
    const double cell_block = p.lambda_s * M_PI * p.z1 * std::pow(x * x + p.h2, p.expo);
    return 2.0 * M_PI * p.lambda_o * x * std::exp(-cell_block - p.lambda_o * M_PI * x * x) /
           (p_o * p.u_o);
}

// Mixture kernel for the RF serving distance: within reach of an optical win
// (x <= g1) the RF cell serves only when no luminaire stands inside the
// equal-power radius; past g1 only the FOV-miss mass remains.
double serving_pdf_sbs_kernel(const NetworkConfig& cfg, const DerivedParams& d, double x) {
    if (x <= 0.0 || x > cfg.r_m_m) return 0.0;
    const double mexp = d.m_order + 3.0;
    const double h2 = cfg.h_m * cfg.h_m;
    const double g1 = std::sqrt(d.z1) * std::pow(d.t_radius * d.t_radius + h2, mexp / cfg.alpha);
    const double p_fov = -std::expm1(-d.lambda_o * M_PI * d.t_radius * d.t_radius) / d.u_o;
    double win_block = 1.0 - p_fov;
    if (x <= g1) {
        const double g2 = std::max(std::pow(x / std::sqrt(d.z1), cfg.alpha / mexp) - h2, 0.0);
        win_block += p_fov * std::exp(-d.lambda_o * M_PI * g2);
    }
    return win_block * 2.0 * M_PI * d.lambda_s * x * std::exp(-d.lambda_s * M_PI * x * x);
}

double serving_pdf_sbs(const NetworkConfig& cfg, const DerivedParams& d, double x) {
    auto k = [&](double t) { return serving_pdf_sbs_kernel(cfg, d, t); };
    QuadratureOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-14;
    const double norm = integrate(k, 0.0, cfg.r_m_m, opt).value;
    if (norm <= 0.0) return 0.0;
    return serving_pdf_sbs_kernel(cfg, d, x) / norm;
}

double hybrid_coverage(double cov_vlc, double cov_rf) {
    return 1.0 - (1.0 - cov_vlc) * (1.0 - cov_rf);
}

double opportunistic_coverage(const NetworkConfig& cfg, const GilPelaezOptions& gp) {
    const DerivedParams d = derive(cfg);
    const AssocParams p = make_params(cfg, d, d.z1);
    const double p_o = assoc_integral(p);

    // Optical side: conditional coverage averaged over the serving density.
    auto f_o = [&](double x) {
        const double cell_block = p.lambda_s * M_PI * p.z1 * std::pow(x * x + p.h2, p.expo);
        const double pdf = 2.0 * M_PI * p.lambda_o * x *
                           std::exp(-cell_block - p.lambda_o * M_PI * x * x) / (p_o * p.u_o);
        return pdf * vlc_conditional_coverage(cfg, d, x, gp);
    };
    QuadratureOptions opt_o;
    opt_o.rel_tol = 1e-5;
    opt_o.abs_tol = 1e-7;
    opt_o.max_panels = 60;
    const double cov_o = integrate(f_o, 0.0, d.t_radius, opt_o).value;

    // RF side: the mixture-kernel density, self-normalized.
    auto kern = [&](double x) { return serving_pdf_sbs_kernel(cfg, d, x); };
    QuadratureOptions opt_s;
    opt_s.rel_tol = 1e-9;
    opt_s.abs_tol = 1e-13;
    const double norm = integrate(kern, 0.0, cfg.r_m_m, opt_s).value;
    auto f_s = [&](double x) {
        return serving_pdf_sbs_kernel(cfg, d, x) * rf_conditional_coverage(cfg, d, x);
    };
    const double cov_s = norm > 0.0 ? integrate(f_s, 0.0, cfg.r_m_m, opt_s).value / norm : 0.0;

    return std::min(std::max(p_o * cov_o + (1.0 - p_o) * cov_s, 0.0), 1.0);
}

}  // namespace analytic
}  // namespace rfvlc
