#pragma once

// Monte-Carlo engine for the two-tier downlink. One trial drops both point
// processes, resolves serving links, fading, association and SINRs. Trials
// are grouped into fixed-size chunks, each driven by its own RNG substream,
// and chunk partials are reduced in chunk order — results are bit-identical
// for any worker count.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "rfvlc/config.hpp"

namespace rfvlc {

enum class Mode { vlc_only, rf_only, hybrid, opportunistic };

// What to do with trials whose RF tier comes up empty: count them as outage,
// or redraw the RF tier so every trial has a serving small cell (matches
// analyses that condition on a non-empty tier).
enum class EmptySbsPolicy { outage, resample };

struct SimOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 100000;
    int workers = 0;  // 0 = hardware concurrency
    EmptySbsPolicy empty_sbs = EmptySbsPolicy::outage;
    bool vlc_interference = true;
    bool rf_interference = true;
    // Association normally compares path-loss-only received powers; this
    // includes the RF fading draw in the comparison instead.
    bool fading_in_association = false;
};

struct TrialResult {
    double sinr_vlc = -1.0;   // <0: no luminaire inside the FOV
    double sinr_rf = -1.0;    // <0: empty RF tier under the outage policy
    double vlc_signal = 0.0;  // electrical signal power at the receiver
    double vlc_interference_power = 0.0;  // aggregate electrical, other in-FOV luminaires
    double vlc_serving_r = -1.0;
    double rf_serving_v = -1.0;
    int in_fov_count = 0;     // luminaires within the FOV ground radius
    int assoc = 0;            // 0 none, 1 optical, 2 RF
    bool obs_present = false; // luminaire tier non-empty in the disk
    bool sbs_present = false; // RF tier non-empty (post-resample when enabled)
};

TrialResult run_trial(const NetworkConfig& cfg, const DerivedParams& d, std::mt19937_64& rng,
                      const SimOptions& opts);

struct McEstimate {
    double value = 0.0;
    double ci95 = 0.0;          // half-width of the 95% normal interval
    std::size_t trials = 0;     // denominator actually used
    double empty_sbs_fraction = 0.0;
};

// P(SINR of the mode's serving arrangement exceeds its rate target).
// vlc_only / rf_only test the single tier; hybrid covers when either tier
// does; opportunistic tests the tier picked by mean-power association.
// The optical tier conditions on a non-empty luminaire disk; the RF tier
// counts empty-tier trials as outage unless the resample policy is chosen.
McEstimate estimate_coverage(const NetworkConfig& cfg, Mode mode, const SimOptions& opts);

// Mean log2(1 + SINR) of the mode's serving arrangement (bandwidth-free,
// zero when unserved). Hybrid takes the larger of the two tiers' values.
McEstimate estimate_spectral_efficiency(const NetworkConfig& cfg, Mode mode, const SimOptions& opts);

// Fraction of trials served by the optical tier, among trials whose
// luminaire disk is non-empty.
McEstimate estimate_association(const NetworkConfig& cfg, const SimOptions& opts);

// P(k interfering luminaires in the FOV), conditioned on at least one
// luminaire in the FOV; entries k = 0..max_k.
std::vector<double> interferer_pmf_mc(const NetworkConfig& cfg, const SimOptions& opts, int max_k);

// E[exp(-s I_a)] over trials with a non-empty luminaire disk (no luminaire
// in the FOV gives I_a = 0).
std::vector<double> empirical_laplace(const NetworkConfig& cfg, const SimOptions& opts,
                                      const std::vector<double>& s_grid);

// E[exp(i w (S - gamma I_a))] conditioned on a luminaire inside the FOV.
std::vector<std::complex<double>> empirical_cf(const NetworkConfig& cfg, const SimOptions& opts,
                                               const std::vector<double>& omega_grid);

// Serving distances collected from trials associated to the given tier
// (1 = optical horizontal distance, 2 = RF planar distance).
std::vector<double> sample_serving_distances(const NetworkConfig& cfg, const SimOptions& opts, int tier);

}  // namespace rfvlc
