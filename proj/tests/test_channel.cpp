#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rfvlc/channel.hpp"

using namespace rfvlc;

TEST_CASE("Lambertian order") {
    CHECK(lambertian_order(60.0 * M_PI / 180.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lambertian_order(30.0 * M_PI / 180.0) ==
          doctest::Approx(-M_LN2 / std::log(std::cos(M_PI / 6.0))).epsilon(1e-14));
    // Narrower beams concentrate: order grows as the semi-angle shrinks.
    CHECK(lambertian_order(0.3) > lambertian_order(0.8));
    CHECK_THROWS_AS((void)lambertian_order(0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)lambertian_order(M_PI / 2.0), std::invalid_argument);
}

TEST_CASE("concentrator gain") {
    CHECK(concentrator_gain(1.5, M_PI / 2.0) == doctest::Approx(2.25).epsilon(1e-14));
    CHECK(concentrator_gain(1.5, M_PI / 4.0) == doctest::Approx(2.25 / 0.5).epsilon(1e-13));
    CHECK_THROWS_AS((void)concentrator_gain(1.5, 0.0), std::invalid_argument);
}

TEST_CASE("optical DC gain against the literal geometry") {
    const double h = 2.0, m = 1.0, a_pd = 1e-4, t = 1.0, g = 2.25, fov = 10.0;
    const double r = 3.0;
    const double d2 = r * r + h * h;
    const double want = (m + 1.0) * a_pd * t * g * std::pow(h, m + 1.0) /
                        (2.0 * M_PI * std::pow(d2, (m + 3.0) / 2.0));
    CHECK(vlc_channel_gain(r, h, m, a_pd, t, g, fov) == doctest::Approx(want).epsilon(1e-13));
    CHECK(vlc_channel_gain(10.5, h, m, a_pd, t, g, fov) == 0.0);
    // Monotone decay with distance inside the FOV.
    CHECK(vlc_channel_gain(1.0, h, m, a_pd, t, g, fov) >
          vlc_channel_gain(2.0, h, m, a_pd, t, g, fov));
}

TEST_CASE("squared prefactor factorizes the squared gain") {
    const double h = 2.0, m = 1.0, a_pd = 1e-4, t = 1.0, g = 2.25;
    const double z = vlc_gain_sq_prefactor(h, m, a_pd, t, g);
    for (double r : {0.5, 2.0, 6.0}) {
        const double gain = vlc_channel_gain(r, h, m, a_pd, t, g, 100.0);
        CHECK(gain * gain ==
              doctest::Approx(z * std::pow(r * r + h * h, -(m + 3.0))).epsilon(1e-12));
    }
}

TEST_CASE("RF path-loss constant") {
    CHECK(rf_pathloss_const(5.0, true) == doctest::Approx(std::pow(10.0, 4.68)).epsilon(1e-12));
    CHECK(rf_pathloss_const(5.0, false) == doctest::Approx(std::pow(10.0, 4.38)).epsilon(1e-12));
    // Doubling the carrier adds 20 log10(2) dB.
    const double ratio = rf_pathloss_const(10.0, true) / rf_pathloss_const(5.0, true);
    CHECK(ratio == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("mean RF received power is the literal product") {
    CHECK(rf_received_power(3.0, 2.5, 2.0, 3.68, 1.0) ==
          doctest::Approx(2.5 * 2.0 * std::pow(3.0, -3.68)).epsilon(1e-13));
}
