#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rfvlc/config.hpp"

using namespace rfvlc;

TEST_CASE("defaults derive the headline constants") {
    NetworkConfig cfg;
    const DerivedParams d = derive(cfg);
    CHECK(d.m_order == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(d.g_conc == doctest::Approx(2.25).epsilon(1e-13));
    CHECK(d.t_radius == doctest::Approx(10.0));  // 90-degree FOV fills the disk
    CHECK(d.lambda_o == doctest::Approx(30.0 / (M_PI * 100.0)).epsilon(1e-13));
    CHECK(d.lambda_s == doctest::Approx(5.0 / (M_PI * 100.0)).epsilon(1e-13));
    CHECK(d.u_o == doctest::Approx(1.0 - std::exp(-30.0)).epsilon(1e-13));
    CHECK(d.u_s == doctest::Approx(1.0 - std::exp(-5.0)).epsilon(1e-13));
    CHECK(d.p_elec_w == doctest::Approx(100.0).epsilon(1e-13));
    CHECK(d.k_rf == doctest::Approx(std::pow(10.0, 4.68)).epsilon(1e-12));
    CHECK(d.k_eff == d.k_rf);
    CHECK(d.theta_fade == doctest::Approx(1.0).epsilon(1e-13));  // 1/kappa at kappa=1
    CHECK(d.noise_vlc == doctest::Approx(40e6 * 9.0 * 1e-21).epsilon(1e-13));
    CHECK(d.noise_rf == doctest::Approx(10e6 * 3.98e-21).epsilon(1e-13));
    // z1 ties the tiers: (p_s k / c_vlc)^(2/alpha).
    CHECK(d.z1 ==
          doctest::Approx(std::pow(2.0 * d.k_eff / d.c_vlc, 2.0 / cfg.alpha)).epsilon(1e-12));
    CHECK(d.c_vlc == doctest::Approx(0.53 * 0.53 * 100.0 * d.z_gain).epsilon(1e-12));
}

TEST_CASE("rate thresholds honour their unit") {
    NetworkConfig cfg;
    cfg.r_th = 3.0;
    cfg.r_th_unit = RthUnit::bps_hz;
    DerivedParams d = derive(cfg);
    CHECK(d.gamma_vlc == doctest::Approx(63.0).epsilon(1e-12));  // 2^(2*3) - 1
    CHECK(d.gamma_rf == doctest::Approx(7.0).epsilon(1e-12));    // 2^3 - 1
    cfg.r_th_unit = RthUnit::bps;
    cfg.r_th = 20e6;
    d = derive(cfg);
    CHECK(d.gamma_vlc == doctest::Approx(std::pow(2.0, 20e6 / 20e6) - 1.0).epsilon(1e-12));
    CHECK(d.gamma_rf == doctest::Approx(std::pow(2.0, 2.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("k interpretation flips the constant") {
    NetworkConfig cfg;
    cfg.k_interpretation = KInterpretation::loss;
    const DerivedParams d = derive(cfg);
    CHECK(d.k_eff == doctest::Approx(1.0 / d.k_rf).epsilon(1e-13));
}

TEST_CASE("per-m2 intensity takes precedence over counts") {
    NetworkConfig cfg;
    cfg.lambda_o_per_m2 = 0.25;
    const DerivedParams d = derive(cfg);
    CHECK(d.lambda_o == doctest::Approx(0.25));
}

TEST_CASE("parser round trip with comments and whitespace") {
    std::istringstream in(
        "# scenario\n"
        "h_m = 3.5\n"
        "xi_fov_deg= 45\n"
        "lambda_o_count =80   # dense lighting\n"
        "k_interpretation = loss\n"
        "los = false\n"
        "r_th_unit = bps_hz\n"
        "\n");
    const NetworkConfig cfg = parse_config(in);
    CHECK(cfg.h_m == doctest::Approx(3.5));
    CHECK(cfg.xi_fov_deg == doctest::Approx(45.0));
    CHECK(cfg.lambda_o_count == doctest::Approx(80.0));
    CHECK(cfg.k_interpretation == KInterpretation::loss);
    CHECK(cfg.los == false);
    CHECK(cfg.r_th_unit == RthUnit::bps_hz);
    // Untouched keys keep their defaults.
    CHECK(cfg.p_opt_w == doctest::Approx(10.0));
}

TEST_CASE("parser rejects malformed input") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_config(in);
    };
    CHECK_THROWS_AS((void)parse("no_such_key = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse("h_m = 2\nh_m = 3\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse("lambda_o_count = 30\nlambda_o_per_m2 = 0.1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)parse("h_m = 2.0abc\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse("h_m\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse("los = maybe\n"), std::invalid_argument);
}

TEST_CASE("validation names the offending field") {
    NetworkConfig cfg;
    cfg.alpha = 2.0;
    CHECK_THROWS_WITH_AS((void)derive(cfg), doctest::Contains("alpha"), std::invalid_argument);
    cfg = NetworkConfig{};
    cfg.xi_fov_deg = 0.0;
    CHECK_THROWS_WITH_AS((void)derive(cfg), doctest::Contains("xi_fov"), std::invalid_argument);
    cfg = NetworkConfig{};
    cfg.phi_half_deg = 90.0;
    CHECK_THROWS_WITH_AS((void)derive(cfg), doctest::Contains("phi_half"), std::invalid_argument);
    cfg = NetworkConfig{};
    cfg.p_opt_w = -1.0;
    CHECK_THROWS_WITH_AS((void)derive(cfg), doctest::Contains("p_opt"), std::invalid_argument);
    cfg = NetworkConfig{};
    cfg.kappa_fade = 0.01;
    CHECK_THROWS_WITH_AS((void)derive(cfg), doctest::Contains("kappa"), std::invalid_argument);
}

TEST_CASE("file loader matches the stream parser") {
    const char* path = "test_config_tmp.cfg";
    {
        std::ofstream out(path);
        out << "b_s_hz = 2.5e7\nkappa_fade = 3\n";
    }
    const NetworkConfig cfg = load_config(path);
    CHECK(cfg.b_s_hz == doctest::Approx(2.5e7));
    CHECK(cfg.kappa_fade == doctest::Approx(3.0));
    CHECK(derive(cfg).theta_fade == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    std::remove(path);
    CHECK_THROWS_AS((void)load_config("definitely_missing.cfg"), std::invalid_argument);
}

TEST_CASE("apply_config_entry drives sweeps") {
    NetworkConfig cfg;
    apply_config_entry(cfg, "lambda_s_count", "12");
    CHECK(cfg.lambda_s_count == doctest::Approx(12.0));
    apply_config_entry(cfg, "theta_fade", "0.5");
    CHECK(derive(cfg).theta_fade == doctest::Approx(0.5));
    CHECK_THROWS_AS(apply_config_entry(cfg, "bogus", "1"), std::invalid_argument);
}
