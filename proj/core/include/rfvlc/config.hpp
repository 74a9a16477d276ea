#pragma once

// Scenario parameters for the co-existing optical/RF indoor downlink, with
// the derived quantities every engine shares. Config files are flat
// `key = value` text; keys match the struct fields and carry unit suffixes.

#include <iosfwd>
#include <string>

namespace rfvlc {

// How the WINNER-II constant K enters the received power: `paper` multiplies
// (received = K Ps v^-alpha chi), `loss` divides (received = Ps v^-alpha chi / K).
enum class KInterpretation { paper, loss };

// Unit of the target rate r_th: raw bits/s, or bits/s/Hz scaled by the
// tier bandwidth before thresholding.
enum class RthUnit { bps, bps_hz };

struct NetworkConfig {
    // Geometry.
    double r_m_m = 10.0;        // analysis disk radius
    double h_m = 2.0;           // luminaire height above the receiver plane
    double xi_fov_deg = 90.0;   // receiver field-of-view half-angle
    double phi_half_deg = 60.0; // LED half-intensity semi-angle

    // Tier intensities. Counts are expected points in the disk; a positive
    // per-m^2 value takes precedence. Config files may set only one of the
    // two keys per tier.
    double lambda_o_per_m2 = 0.0;
    double lambda_o_count = 30.0;
    double lambda_s_per_m2 = 0.0;
    double lambda_s_count = 5.0;

    // Optical front end.
    double p_opt_w = 10.0;          // optical transmit power
    double kappa_oe = 1.0;          // optical-to-electrical conversion ratio
    double a_pd_m2 = 1e-4;          // photodetector area
    double t_filter = 1.0;          // optical filter gain
    double n_refractive = 1.5;      // concentrator refractive index
    double r_pd_a_per_w = 0.53;     // photodetector responsivity
    double f_dc = 3.0;              // DC-bias noise bandwidth factor
    double b_o_hz = 40e6;           // optical modulation bandwidth
    double n_o_a2_per_hz = 1e-21;   // shot + thermal noise PSD (A^2/Hz)

    // RF small cells.
    double p_s_w = 2.0;             // RF transmit power
    double b_s_hz = 10e6;           // RF bandwidth
    double n_s_w_per_hz = 3.98e-21; // RF noise PSD
    double alpha = 3.68;            // path-loss exponent
    double kappa_fade = 1.0;        // Nakagami shape
    double theta_fade = 0.0;        // Gamma scale; 0 selects 1/kappa (unit mean)
    double f_c_ghz = 5.0;           // carrier frequency
    bool los = true;                // line-of-sight constant selection
    KInterpretation k_interpretation = KInterpretation::paper;

    // Targets.
    double r_th = 3.0;
    RthUnit r_th_unit = RthUnit::bps;
};

struct DerivedParams {
    double lambda_o = 0.0;      // per m^2
    double lambda_s = 0.0;
    double m_order = 0.0;       // Lambertian order
    double xi_fov_rad = 0.0;
    double t_radius = 0.0;      // FOV ground radius, capped at r_m
    double g_conc = 0.0;        // concentrator gain
    double z_gain = 0.0;        // squared deterministic optical prefactor
    double p_elec_w = 0.0;      // electrical transmit power (p_opt / kappa_oe)^2
    double c_vlc = 0.0;         // r_pd^2 p_elec z_gain; signal = c_vlc (r^2+h^2)^-(m+3)
    double k_rf = 0.0;          // WINNER-II constant
    double k_eff = 0.0;         // k_rf or 1/k_rf per interpretation
    double z1 = 0.0;            // (p_s k_eff / c_vlc)^{2/alpha}
    double u_o = 0.0;           // disk normalizer, optical tier
    double u_s = 0.0;           // disk normalizer, RF tier
    double noise_vlc = 0.0;     // b_o f_dc^2 n_o
    double noise_rf = 0.0;      // b_s n_s
    double target_rate_vlc = 0.0;  // bps
    double target_rate_rf = 0.0;
    double gamma_vlc = 0.0;     // SINR threshold, DCO-OFDM half-bandwidth prelog
    double gamma_rf = 0.0;
    double theta_fade = 0.0;    // resolved Gamma scale
};

// Validates and computes every derived quantity. Throws std::invalid_argument
// naming the offending field.
DerivedParams derive(const NetworkConfig& cfg);

// Flat key=value config IO. Unknown keys, duplicate intensities for one tier,
// or malformed values throw std::invalid_argument.
NetworkConfig load_config(const std::string& path);
NetworkConfig parse_config(std::istream& in);

// Applies `key = value` to one field; shared by the loader and CLI sweeps.
void apply_config_entry(NetworkConfig& cfg, const std::string& key, const std::string& value);

}  // namespace rfvlc
