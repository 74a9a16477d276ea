#include "rfvlc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace rfvlc {

double lambertian_order(double phi_half_rad) {
    if (phi_half_rad <= 0.0 || phi_half_rad >= M_PI / 2.0)
        throw std::invalid_argument("lambertian_order: phi_half must lie in (0, pi/2)");
    return -M_LN2 / std::log(std::cos(phi_half_rad));
}

double concentrator_gain(double n_refractive, double xi_fov_rad) {
    if (xi_fov_rad <= 0.0 || xi_fov_rad > M_PI / 2.0)
        throw std::invalid_argument("concentrator_gain: xi_fov must lie in (0, pi/2]");
    const double s = std::sin(xi_fov_rad);
    return n_refractive * n_refractive / (s * s);
}

double vlc_channel_gain(double r, double h, double m_order, double a_pd, double t_filter,
                        double g_conc, double fov_radius) {
    if (r > fov_radius) return 0.0;
    const double d2 = r * r + h * h;
    // (m+1)/(2 pi d^2) * A * cos^m(phi) * T * G * cos(psi), with
    // cos(phi) = cos(psi) = h / d for a downward luminaire and upward detector.
    return (m_order + 1.0) * a_pd * t_filter * g_conc * std::pow(h, m_order + 1.0) /
           (2.0 * M_PI * std::pow(d2, (m_order + 3.0) / 2.0));
}

double vlc_gain_sq_prefactor(double h, double m_order, double a_pd, double t_filter, double g_conc) {
    const double z = a_pd * (m_order + 1.0) * t_filter * g_conc * std::pow(h, m_order + 1.0) / (2.0 * M_PI);
    return z * z;
}

double rf_pathloss_const(double f_c_ghz, bool line_of_sight) {
    const double b = line_of_sight ? 46.8 : 43.8;
    const double x_db = b + 20.0 * std::log10(f_c_ghz / 5.0);
    return std::pow(10.0, x_db / 10.0);
}

double rf_received_power(double v, double k_eff, double p_s, double alpha, double chi) {
    return k_eff * p_s * std::pow(v, -alpha) * chi;
}

}  // namespace rfvlc
