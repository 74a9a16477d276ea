#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rfvlc/analytic.hpp"
#include "rfvlc/quadrature.hpp"
#include "rfvlc/simcore.hpp"
#include "support.hpp"

using namespace rfvlc;
using namespace rfvlc::analytic;

namespace {

NetworkConfig base_config() {
    NetworkConfig cfg;
    cfg.r_th = 3.0;
    cfg.r_th_unit = RthUnit::bps_hz;
    return cfg;
}

// Physical-loss reading keeps RF SNRs in a sane range for rate integrals.
NetworkConfig loss_config() {
    NetworkConfig cfg = base_config();
    cfg.k_interpretation = KInterpretation::loss;
    return cfg;
}

// E[log2(1 + X(r)/N)] over the truncated nearest-luminaire law, valid when
// interference is negligible (sparse optical tier).
double vlc_snr_only_oracle(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    auto f = [&](double r) {
        const double pdf = 2.0 * M_PI * d.lambda_o * r * std::exp(-d.lambda_o * M_PI * r * r) / d.u_o;
        return pdf * std::log2(1.0 + vlc_signal_power(cfg, d, r) / d.noise_vlc);
    };
    return integrate(f, 0.0, d.t_radius, opt).value;
}

// E_v E_chi[log2(1 + chi k_eff Ps v^-alpha / N)] by nested quadrature over the
// Gamma fading density; again assumes negligible interference.
double rf_snr_only_oracle(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    QuadratureOptions opt;
    opt.rel_tol = 1e-10;
    const double kappa = cfg.kappa_fade;
    const double theta = d.theta_fade;
    const double gamma_norm = std::tgamma(kappa) * std::pow(theta, kappa);
    auto f = [&](double v) {
        const double snr_unit = d.k_eff * cfg.p_s_w * std::pow(v, -cfg.alpha) / d.noise_rf;
        auto g = [&](double chi) {
            const double pdf = std::pow(chi, kappa - 1.0) * std::exp(-chi / theta) / gamma_norm;
            return pdf * std::log2(1.0 + chi * snr_unit);
        };
        const double mean = integrate_semi_infinite(g, 0.0, kappa * theta, opt).value;
        const double pdf_v = 2.0 * M_PI * d.lambda_s * v * std::exp(-d.lambda_s * M_PI * v * v) / d.u_s;
        return pdf_v * mean;
    };
    return integrate(f, 0.0, cfg.r_m_m, opt).value;
}

}  // namespace

TEST_CASE("optical spectral efficiency collapses to the SNR mean when sparse") {
    NetworkConfig cfg = base_config();
    cfg.lambda_o_count = 1e-4;  // interferer probability ~1e-5
    cfg.xi_fov_deg = 60.0;
    const double want = vlc_snr_only_oracle(cfg);
    const double got = spectral_efficiency_vlc(cfg);
    CAPTURE(want);
    CHECK(got == doctest::Approx(want).epsilon(1e-4));

    // At a workably dense tier the same oracle is only an upper bound.
    cfg.lambda_o_count = 30.0;
    const double dense = spectral_efficiency_vlc(cfg);
    CHECK(dense < vlc_snr_only_oracle(cfg));
    CHECK(dense > 0.0);
}

TEST_CASE("RF spectral efficiency collapses to the SNR mean when sparse") {
    for (double kappa : {1.0, 3.0}) {
        NetworkConfig cfg = loss_config();
        cfg.lambda_s_count = 1e-5;
        cfg.kappa_fade = kappa;
        const double want = rf_snr_only_oracle(cfg);
        const double got = spectral_efficiency_rf(cfg);
        CAPTURE(kappa);
        CAPTURE(want);
        CHECK(got == doctest::Approx(want).epsilon(1e-4));
    }
}

TEST_CASE("vanishing fading variance reduces RF efficiency to pure path loss") {
    NetworkConfig cfg = loss_config();
    cfg.lambda_s_count = 1e-5;
    cfg.kappa_fade = 400.0;  // Gamma(400, 1/400): var 2.5e-3
    const DerivedParams d = derive(cfg);
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    auto f = [&](double v) {
        const double snr = d.k_eff * cfg.p_s_w * std::pow(v, -cfg.alpha) / d.noise_rf;
        return 2.0 * M_PI * d.lambda_s * v * std::exp(-d.lambda_s * M_PI * v * v) / d.u_s *
               std::log2(1.0 + snr);
    };
    const double frozen = integrate(f, 0.0, cfg.r_m_m, opt).value;
    CHECK(spectral_efficiency_rf(cfg) == doctest::Approx(frozen).epsilon(5e-3));
}

TEST_CASE("spectral efficiencies against Monte Carlo") {
    SimOptions o;
    o.trials = 100000;
    o.seed = 31;

    SUBCASE("optical tier") {
        NetworkConfig cfg = base_config();
        cfg.xi_fov_deg = 60.0;
        const double want = spectral_efficiency_vlc(cfg);
        const McEstimate mc = estimate_spectral_efficiency(cfg, Mode::vlc_only, o);
        CAPTURE(want);
        CAPTURE(mc.value);
        CHECK(std::fabs(mc.value - want) < std::max(0.05 * want, 3.0 * mc.ci95));
    }

    SUBCASE("RF tier") {
        NetworkConfig cfg = loss_config();
        cfg.kappa_fade = 2.0;
        o.empty_sbs = EmptySbsPolicy::resample;
        const double want = spectral_efficiency_rf(cfg);
        const McEstimate mc = estimate_spectral_efficiency(cfg, Mode::rf_only, o);
        CAPTURE(want);
        CAPTURE(mc.value);
        CHECK(std::fabs(mc.value - want) < std::max(0.05 * want, 3.0 * mc.ci95));
    }

    SUBCASE("opportunistic split") {
        NetworkConfig cfg = loss_config();
        cfg.p_s_w = 0.01;  // contested association, split near 0.7
        cfg.xi_fov_deg = 60.0;
        o.empty_sbs = EmptySbsPolicy::resample;
        const double want = spectral_efficiency_opportunistic(cfg);
        const McEstimate mc = estimate_spectral_efficiency(cfg, Mode::opportunistic, o);
        CAPTURE(want);
        CAPTURE(mc.value);
        CHECK(std::fabs(mc.value - want) < std::max(0.05 * want, 3.0 * mc.ci95));
    }
}

TEST_CASE("more noise can only slow the link") {
    NetworkConfig cfg = base_config();
    cfg.xi_fov_deg = 60.0;
    double prev = spectral_efficiency_vlc(cfg);
    for (double scale : {10.0, 100.0}) {
        NetworkConfig noisy = cfg;
        noisy.n_o_a2_per_hz *= scale;
        const double se = spectral_efficiency_vlc(noisy);
        CHECK(se < prev);
        prev = se;
    }

    NetworkConfig rf = loss_config();
    const double quiet = spectral_efficiency_rf(rf);
    rf.n_s_w_per_hz *= 30.0;
    CHECK(spectral_efficiency_rf(rf) < quiet);
}

TEST_CASE("luminaire height trades reach against strength") {
    // With a 45-degree FOV the lit radius equals the height, so raising the
    // luminaires first adds served users and then saps everyone's SNR: the
    // mean efficiency peaks strictly inside the scanned range.
    NetworkConfig cfg = base_config();
    cfg.xi_fov_deg = 45.0;
    double best = -1.0;
    std::size_t best_i = 0;
    const double heights[] = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
    double values[6];
    for (std::size_t i = 0; i < 6; ++i) {
        cfg.h_m = heights[i];
        values[i] = spectral_efficiency_vlc(cfg);
        if (values[i] > best) {
            best = values[i];
            best_i = i;
        }
    }
    CAPTURE(values[0]);
    CAPTURE(values[1]);
    CAPTURE(values[2]);
    CAPTURE(values[5]);
    CHECK(best_i > 0);
    CHECK(best_i < 5);
    CHECK(values[0] < best);
    CHECK(values[5] < best);
}

TEST_CASE("opportunistic efficiency matches the surviving tier in the limits") {
    SUBCASE("pinhole field of view leaves the RF schedule") {
        NetworkConfig cfg = loss_config();
        cfg.xi_fov_deg = 1e-5;
        CHECK(spectral_efficiency_opportunistic(cfg) ==
              doctest::Approx(spectral_efficiency_rf(cfg)).epsilon(1e-6));
    }
    SUBCASE("vanishing RF tier leaves the optical schedule") {
        NetworkConfig cfg = loss_config();
        cfg.p_s_w = 0.01;
        cfg.xi_fov_deg = 90.0;
        cfg.lambda_s_count = 1e-12;
        CHECK(spectral_efficiency_opportunistic(cfg) ==
              doctest::Approx(spectral_efficiency_vlc(cfg)).epsilon(1e-5));
    }
}
