#pragma once

// Analytical engine: coverage probabilities, association probability,
// serving-distance densities and ergodic spectral efficiencies for the
// two-tier downlink, each cross-checkable against the Monte-Carlo engine.

#include <complex>
#include <vector>

#include "rfvlc/config.hpp"
#include "rfvlc/gilpelaez.hpp"

namespace rfvlc {
namespace analytic {

using cdouble = std::complex<double>;

// ---------------------------------------------------------------- RF tier --

// Antiderivative used by the interference Laplace transform on a disk:
// x^2 (1 - 2F1(kappa, -2/alpha; 1 - 2/alpha; -a x^-alpha)).
double rf_interference_phi(double kappa, double alpha, double a, double x);

// Laplace transform of the RF interference seen from the origin when the
// serving cell stands at distance v and interferers fill (v, r_m].
double rf_interference_laplace(const NetworkConfig& cfg, const DerivedParams& d, double s, double v);

// Closed-form exponent piece of the Rayleigh coverage integrand.
double rf_rho(const NetworkConfig& cfg, const DerivedParams& d, double v);

// Conditional coverage P(SINR >= gamma_rf | serving distance v).
double rf_conditional_coverage(const NetworkConfig& cfg, const DerivedParams& d, double v);

// Coverage of the RF tier alone, conditioned on a non-empty tier.
double rf_coverage_rayleigh(const NetworkConfig& cfg);  // kappa = 1 closed form
double rf_coverage_exact(const NetworkConfig& cfg);     // integer kappa <= 6

enum class AlzerBound { sharp, one };
double rf_coverage_alzer(const NetworkConfig& cfg, AlzerBound bound = AlzerBound::sharp);

// Noise-only sanity form: E_v[Q(kappa, gamma N v^alpha / (K Ps Theta))].
double rf_coverage_noise_only(const NetworkConfig& cfg);

// --------------------------------------------------------------- VLC tier --

// Electrical signal power at horizontal distance r (zero outside the FOV).
double vlc_signal_power(const NetworkConfig& cfg, const DerivedParams& d, double r);

// Laplace transform of one interfering luminaire's power, conditioned on the
// serving luminaire at horizontal distance r (interferers uniform beyond).
double vlc_laplace_single(const NetworkConfig& cfg, const DerivedParams& d, double s, double r);
cdouble vlc_laplace_single_c(const NetworkConfig& cfg, const DerivedParams& d, cdouble s, double r);

// Laplace transform of the aggregate in-FOV interference given serving
// distance r, and its average over the serving-distance density (trials with
// an empty FOV contribute e^0 = 1).
double vlc_laplace_aggregate(const NetworkConfig& cfg, const DerivedParams& d, double s, double r);
cdouble vlc_laplace_aggregate_c(const NetworkConfig& cfg, const DerivedParams& d, cdouble s, double r);
double vlc_laplace_unconditional(const NetworkConfig& cfg, const DerivedParams& d, double s);

// P(k interferers in the FOV | at least one luminaire in the FOV).
std::vector<double> vlc_interferer_pmf(const NetworkConfig& cfg, int max_k);

// Characteristic function E[exp(i w (S - gamma_vlc I_a))] given a luminaire
// in the FOV.
cdouble vlc_cf_omega(const NetworkConfig& cfg, const DerivedParams& d, double omega);

// Truncated series approximation of the same characteristic function, built
// on the small-argument limit of the upper incomplete gamma function. Valid
// only where its hypergeometric arguments stay inside the unit disk; outside
// that regime the term check trips and a numeric error carries the partial
// sum. h_squared selects the dimensionally consistent reading of the outer
// geometry factor (height squared) over the literal one.
struct CfSeriesResult {
    cdouble value{};
    double last_term_mag = 0.0;
    int terms_used = 0;
};
CfSeriesResult vlc_cf_asymptotic(const NetworkConfig& cfg, const DerivedParams& d, double omega,
                                 int max_terms, bool h_squared = true);

// Noise-limited closed form for optical coverage (interference ignored).
double vlc_coverage_noise_limited(const NetworkConfig& cfg);

// P(SINR >= gamma_vlc | serving luminaire at r): atom at zero interference
// plus a sine-transform inversion of the continuous remainder.
double vlc_conditional_coverage(const NetworkConfig& cfg, const DerivedParams& d, double r,
                                const GilPelaezOptions& gp = {});

// Optical coverage with interference, conditioned on a non-empty luminaire
// disk (no luminaire in the FOV counts as outage).
double vlc_coverage_exact(const NetworkConfig& cfg, const GilPelaezOptions& gp = {});

// -------------------------------------------------------------- association --

// Probability that mean-power association picks the optical tier,
// conditioned on a non-empty luminaire disk.
double association_probability(const NetworkConfig& cfg);

// Same quantity with an overridden balance constant Z1 (design studies).
double association_probability_z1(const NetworkConfig& cfg, double z1);

// Closed form available when m + 3 == alpha.
double association_probability_closed(const NetworkConfig& cfg);

// Small-lambda_s asymptotic form.
double association_probability_asymptotic(const NetworkConfig& cfg);

// Serving-distance densities given the association outcome. The optical
// density is exact; the RF density is a mixture kernel normalized on
// [0, min(r_m, g1)] u [0, r_m] numerically.
double serving_pdf_obs(const NetworkConfig& cfg, const DerivedParams& d, double x);
double serving_pdf_sbs(const NetworkConfig& cfg, const DerivedParams& d, double x);

// Unnormalized RF mixture kernel; integrating it over [0, r_m] gives the
// normalizer serving_pdf_sbs divides by (callers hoisting the constant out
// of tight loops use this form).
double serving_pdf_sbs_kernel(const NetworkConfig& cfg, const DerivedParams& d, double x);

// ------------------------------------------------- combined architectures --

// Coverage when the user may fall back to the other tier (independent tiers).
double hybrid_coverage(double cov_vlc, double cov_rf);

// Coverage under mean-power association: P_o C_o~ + (1 - P_o) C_s~ with the
// per-tier conditional kernels averaged over the serving densities.
double opportunistic_coverage(const NetworkConfig& cfg, const GilPelaezOptions& gp = {});

// ------------------------------------------------------------------- rates --

// Ergodic spectral efficiency E[log2(1 + SINR)] per architecture, matching
// the Monte-Carlo estimators (unserved events contribute zero). The
// opportunistic form weighs the per-tier means, taken over the conditional
// serving densities, by the association split.
double spectral_efficiency_rf(const NetworkConfig& cfg);
double spectral_efficiency_vlc(const NetworkConfig& cfg);
double spectral_efficiency_opportunistic(const NetworkConfig& cfg);

}  // namespace analytic
}  // namespace rfvlc
