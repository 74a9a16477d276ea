#pragma once

// Link-level models: the Lambertian optical downlink with a non-imaging
// concentrator, and the indoor small-cell RF path with a WINNER-II style
// frequency-dependent constant and Nakagami-m small-scale fading.

namespace rfvlc {

// Lambertian order from the LED half-intensity semi-angle.
double lambertian_order(double phi_half_rad);

// Gain of the non-imaging optical concentrator with refractive index n and
// field-of-view half-angle xi (radians, 0 < xi <= pi/2).
double concentrator_gain(double n_refractive, double xi_fov_rad);

// Optical channel DC gain for a receiver at horizontal distance r from a
// luminaire mounted h above the receiver plane. Zero outside the FOV ground
// radius. a_pd: detector area; t_filter: optical filter gain.
double vlc_channel_gain(double r, double h, double m_order, double a_pd, double t_filter,
                        double g_conc, double fov_radius);

// Squared deterministic front-end factor: (A(m+1)T G h^{m+1} / 2 pi)^2.
// Multiplying by (r^2 + h^2)^{-(m+3)} gives the squared channel gain.
double vlc_gain_sq_prefactor(double h, double m_order, double a_pd, double t_filter, double g_conc);

// WINNER-II indoor constant 10^{X/10} with X = B + 20 log10(fc/5GHz),
// B = 46.8 dB line-of-sight, 43.8 dB otherwise.
double rf_pathloss_const(double f_c_ghz, bool line_of_sight);

// Mean received RF power at distance v (fading at its mean chi).
double rf_received_power(double v, double k_eff, double p_s, double alpha, double chi);

}  // namespace rfvlc
