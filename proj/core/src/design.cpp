#include "rfvlc/design.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "rfvlc/analytic.hpp"
#include "rfvlc/specfun.hpp"

namespace rfvlc {
namespace design {

namespace {

// Exact association fraction with the free parameter overridden. Intensity
// overrides go through the per-m^2 field, which takes precedence over counts.
double exact_beta(const NetworkConfig& cfg, FreeParam p, double value) {
    if (p == FreeParam::z1) return analytic::association_probability_z1(cfg, value);
    NetworkConfig c = cfg;
    if (p == FreeParam::lambda_o)
        c.lambda_o_per_m2 = value;
    else
        c.lambda_s_per_m2 = value;
    return analytic::association_probability(c);
}

void check_beta(double beta) {
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("beta: target association fraction must lie in (0, 1)");
}

// Bracketed bisection for a monotone objective g(x) = model_beta(x) - beta.
// Expands each end up to six doublings before giving up.
struct RootResult {
    double x = 0.0;
    double g = 0.0;
    bool found = false;
};

RootResult bisect_monotone(const std::function<double(double)>& g, double x0, bool increasing,
                           double tol) {
    double lo = 0.5 * x0, hi = 2.0 * x0;
    double g_lo = g(lo), g_hi = g(hi);
    // Want g(lo) and g(hi) on opposite sides; push the failing end outward.
    for (int i = 0; i < 6 && (increasing ? g_lo > 0.0 : g_lo < 0.0); ++i) g_lo = g(lo *= 0.5);
    for (int i = 0; i < 6 && (increasing ? g_hi < 0.0 : g_hi > 0.0); ++i) g_hi = g(hi *= 2.0);
    RootResult out;
    if (std::abs(g_lo) <= tol) return {lo, g_lo, true};
    if (std::abs(g_hi) <= tol) return {hi, g_hi, true};
    const bool bracketed = increasing ? (g_lo < 0.0 && g_hi > 0.0) : (g_lo > 0.0 && g_hi < 0.0);
    if (!bracketed) return out;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = g(mid);
        if (std::abs(g_mid) <= tol || (hi - lo) <= 1e-15 * hi) return {mid, g_mid, true};
        const bool go_right = increasing ? (g_mid < 0.0) : (g_mid > 0.0);
        (go_right ? lo : hi) = mid;
    }
    return {0.5 * (lo + hi), g(0.5 * (lo + hi)), true};
}

}  // namespace

double offload_model_closed(double lambda_o, double lambda_s, double z1, double h_m) {
    const double h2 = h_m * h_m;
    const double a = M_PI * h2 * lambda_o / 2.0;
    const double e = M_PI * h2 * h2 * z1 * lambda_s;
    return std::exp(-e) / (1.0 + e / a);
}

double offload_model_asymptotic(double lambda_o, double lambda_s, double z1, double h_m,
                                double t_radius_m) {
    const double fov_term = -std::expm1(-M_PI * lambda_o * t_radius_m * t_radius_m);
    return lambda_o * fov_term / (lambda_o + 2.0 * h_m * h_m * z1 * lambda_s);
}

DesignSolution solve_offload_closed(const DesignTarget& target) {
    check_beta(target.beta);
    if (std::fabs(target.cfg.xi_fov_deg - 90.0) > 1e-9)
        throw std::invalid_argument(
            "xi_fov_deg: the closed offload inversion needs the full-FOV geometry (90 deg)");
    const DerivedParams d = derive(target.cfg);
    const double h2 = target.cfg.h_m * target.cfg.h_m;
    const double h4 = h2 * h2;

    DesignSolution out;
    if (std::fabs(d.m_order + 3.0 - target.cfg.alpha) > 1e-9)
        out.note =
            "closed model assumes the optical falloff exponent matches the RF one "
            "(m + 3 = alpha); the gap shows in achieved_beta_exact";

    double lambda_o = d.lambda_o, lambda_s = d.lambda_s, z1 = d.z1;
    switch (target.free_parameter) {
        case FreeParam::lambda_o: {
            const double e = M_PI * h4 * z1 * lambda_s;
            const double denom = 1.0 - target.beta * std::exp(e);
            if (!(denom > 0.0)) {
                out.note = "target fraction unreachable: beta exp(pi h^4 z1 lambda_s) >= 1";
                return out;
            }
            out.value = lambda_o = 2.0 * target.beta * std::exp(e) * h2 * z1 * lambda_s / denom;
            break;
        }
        case FreeParam::lambda_s:
        case FreeParam::z1: {
            // Solve exp(-e)/(1 + e/a) = beta for the blocking exponent e.
            const double a = M_PI * h2 * lambda_o / 2.0;
            const double e = lambert_w0(a * std::exp(a) / target.beta) - a;
            if (!(e > 0.0)) {
                out.note = "blocking exponent collapsed to zero; target too close to one";
                return out;
            }
            if (target.free_parameter == FreeParam::lambda_s)
                out.value = lambda_s = e / (M_PI * h4 * z1);
            else
                out.value = z1 = e / (M_PI * h4 * lambda_s);
            break;
        }
    }
    out.feasible = out.value > 0.0;
    out.achieved_beta_model = offload_model_closed(lambda_o, lambda_s, z1, target.cfg.h_m);
    out.achieved_beta_exact = exact_beta(target.cfg, target.free_parameter, out.value);
    return out;
}

DesignSolution solve_offload_asymptotic(const DesignTarget& target) {
    check_beta(target.beta);
    const DerivedParams d = derive(target.cfg);
    const double h2 = target.cfg.h_m * target.cfg.h_m;
    const double fov_term = -std::expm1(-M_PI * d.lambda_o * d.t_radius * d.t_radius);

    DesignSolution out;
    double lambda_o = d.lambda_o, lambda_s = d.lambda_s, z1 = d.z1;
    switch (target.free_parameter) {
        case FreeParam::lambda_s:
        case FreeParam::z1: {
            if (!(target.beta < fov_term)) {
                out.note = "target fraction exceeds the FOV mass factor; no positive solution";
                return out;
            }
            const double numer = lambda_o * (fov_term - target.beta);
            if (target.free_parameter == FreeParam::lambda_s)
                out.value = lambda_s = numer / (2.0 * h2 * z1 * target.beta);
            else
                out.value = z1 = numer / (2.0 * h2 * lambda_s * target.beta);
            break;
        }
        case FreeParam::lambda_o: {
            // The model is monotone increasing in the luminaire intensity but
            // transcendental there; fall back to bisection on it.
            auto g = [&](double x) {
                return offload_model_asymptotic(x, lambda_s, z1, target.cfg.h_m, d.t_radius) -
                       target.beta;
            };
            const RootResult root = bisect_monotone(g, lambda_o, /*increasing=*/true, 1e-12);
            if (!root.found) {
                out.note = "no sign change while bracketing the luminaire intensity";
                return out;
            }
            out.value = lambda_o = root.x;
            out.note = "numeric inversion of the sparse-RF model";
            break;
        }
    }
    out.feasible = out.value > 0.0;
    out.achieved_beta_model =
        offload_model_asymptotic(lambda_o, lambda_s, z1, target.cfg.h_m, d.t_radius);
    out.achieved_beta_exact = exact_beta(target.cfg, target.free_parameter, out.value);
    return out;
}

DesignSolution solve_offload_numeric(const DesignTarget& target) {
    check_beta(target.beta);
    const DerivedParams d = derive(target.cfg);
    double x0 = 0.0;
    switch (target.free_parameter) {
        case FreeParam::lambda_o: x0 = d.lambda_o; break;
        case FreeParam::lambda_s: x0 = d.lambda_s; break;
        case FreeParam::z1: x0 = d.z1; break;
    }
    const bool increasing = target.free_parameter == FreeParam::lambda_o;
    auto g = [&](double x) { return exact_beta(target.cfg, target.free_parameter, x) - target.beta; };

    DesignSolution out;
    const RootResult root = bisect_monotone(g, x0, increasing, 1e-8);
    if (!root.found) {
        out.note = "no sign change while bracketing (six doublings each way)";
        return out;
    }
    if (std::abs(root.g) > 1e-8) {
        out.note = "bracket collapsed before reaching the target tolerance";
        return out;
    }
    out.value = root.x;
    out.feasible = out.value > 0.0;
    out.achieved_beta_model = out.achieved_beta_exact = root.g + target.beta;
    return out;
}

double optimal_z1_asymptotic(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    if (d.xi_fov_rad >= M_PI / 2.0 - 1e-12)
        throw std::invalid_argument(
            "xi_fov_deg: the balance optimum degenerates at a full FOV (cos = 0)");
    if (!(d.lambda_s > 0.0)) throw std::invalid_argument("lambda_s: needs a positive intensity");
    const double c = std::cos(d.xi_fov_rad);
    const double e = std::exp(0.5 * M_PI * d.lambda_o * d.t_radius * d.t_radius);
    return d.lambda_o * c * (1.0 + e * c) /
           (2.0 * cfg.h_m * cfg.h_m * d.lambda_s * (c + e));
}

}  // namespace design
}  // namespace rfvlc
