#include "rfvlc/simcore.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "rfvlc/geometry.hpp"
#include "rfvlc/rng.hpp"

namespace rfvlc {

namespace {

constexpr std::size_t kChunkSize = 4096;

struct ChunkAccum {
    double sum1 = 0.0;
    double sum2 = 0.0;
    std::size_t count1 = 0;
    std::size_t count2 = 0;
    std::size_t empty_sbs = 0;
    std::vector<double> vec1;
    std::vector<double> vec2;

    void merge(const ChunkAccum& o) {
        sum1 += o.sum1;
        sum2 += o.sum2;
        count1 += o.count1;
        count2 += o.count2;
        empty_sbs += o.empty_sbs;
        if (vec1.size() < o.vec1.size()) vec1.resize(o.vec1.size(), 0.0);
        for (std::size_t i = 0; i < o.vec1.size(); ++i) vec1[i] += o.vec1[i];
        if (vec2.size() < o.vec2.size()) vec2.resize(o.vec2.size(), 0.0);
        for (std::size_t i = 0; i < o.vec2.size(); ++i) vec2[i] += o.vec2[i];
    }
};

// Order-preserving merge for sample collection (vec1 treated as a list).
struct SampleAccum {
    std::vector<double> samples;
};

using TrialSink = std::function<void(const TrialResult&, ChunkAccum&)>;

ChunkAccum run_mc(const NetworkConfig& cfg, const DerivedParams& d, const SimOptions& opts,
                  const TrialSink& sink) {
    const std::size_t nchunks = (opts.trials + kChunkSize - 1) / kChunkSize;
    std::vector<ChunkAccum> partials(nchunks);
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            std::mt19937_64 rng = substream(opts.seed, c);
            const std::size_t lo = c * kChunkSize;
            const std::size_t hi = std::min(lo + kChunkSize, opts.trials);
            ChunkAccum acc;
            for (std::size_t t = lo; t < hi; ++t) {
                const TrialResult tr = run_trial(cfg, d, rng, opts);
                sink(tr, acc);
                if (!tr.sbs_present) ++acc.empty_sbs;
            }
            partials[c] = std::move(acc);
        }
    };

    int workers = opts.workers > 0 ? opts.workers : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ChunkAccum total;
    for (const auto& p : partials) total.merge(p);
    return total;
}

McEstimate binomial_estimate(std::size_t hits, std::size_t n, std::size_t total, std::size_t empty_sbs) {
    McEstimate e;
    e.trials = n;
    e.empty_sbs_fraction = total ? static_cast<double>(empty_sbs) / static_cast<double>(total) : 0.0;
    if (n == 0) return e;
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    e.value = p;
    e.ci95 = 1.96 * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(n));
    return e;
}

McEstimate mean_estimate(double sum, double sumsq, std::size_t n, std::size_t total, std::size_t empty_sbs) {
    McEstimate e;
    e.trials = n;
    e.empty_sbs_fraction = total ? static_cast<double>(empty_sbs) / static_cast<double>(total) : 0.0;
    if (n == 0) return e;
    const double mean = sum / static_cast<double>(n);
    const double var = std::max(sumsq / static_cast<double>(n) - mean * mean, 0.0);
    e.value = mean;
    e.ci95 = 1.96 * std::sqrt(var / static_cast<double>(n));
    return e;
}

}  // namespace

TrialResult run_trial(const NetworkConfig& cfg, const DerivedParams& d, std::mt19937_64& rng,
                      const SimOptions& opts) {
    TrialResult out;
    const DiskRegion disk{cfg.r_m_m};
    const double t2 = d.t_radius * d.t_radius;
    const double mexp = d.m_order + 3.0;

    // Optical tier: nearest in-FOV luminaire serves; the rest interfere.
    const auto obs = sample_ppp(rng, d.lambda_o, disk);
    out.obs_present = !obs.empty();
    double best_r2 = -1.0;
    double sum_power = 0.0;
    for (const auto& p : obs) {
        const double r2 = p.x * p.x + p.y * p.y;
        if (r2 > t2) continue;
        ++out.in_fov_count;
        sum_power += d.c_vlc * std::pow(r2 + cfg.h_m * cfg.h_m, -mexp);
        if (best_r2 < 0.0 || r2 < best_r2) best_r2 = r2;
    }
    if (best_r2 >= 0.0) {
        out.vlc_serving_r = std::sqrt(best_r2);
        out.vlc_signal = d.c_vlc * std::pow(best_r2 + cfg.h_m * cfg.h_m, -mexp);
        out.vlc_interference_power = std::max(sum_power - out.vlc_signal, 0.0);
        const double denom =
            d.noise_vlc + (opts.vlc_interference ? out.vlc_interference_power : 0.0);
        out.sinr_vlc = out.vlc_signal / denom;
    }

    // RF tier, optionally redrawn until non-empty.
    std::vector<Point2> sbs = sample_ppp(rng, d.lambda_s, disk);
    if (opts.empty_sbs == EmptySbsPolicy::resample) {
        while (sbs.empty()) sbs = sample_ppp(rng, d.lambda_s, disk);
    }
    out.sbs_present = !sbs.empty();

    double rf_signal_mean = 0.0;
    if (!sbs.empty()) {
        std::size_t serve_idx = 0;
        double best_v2 = sbs[0].x * sbs[0].x + sbs[0].y * sbs[0].y;
        for (std::size_t i = 1; i < sbs.size(); ++i) {
            const double v2 = sbs[i].x * sbs[i].x + sbs[i].y * sbs[i].y;
            if (v2 < best_v2) {
                best_v2 = v2;
                serve_idx = i;
            }
        }
        out.rf_serving_v = std::sqrt(best_v2);

        std::gamma_distribution<double> fade(cfg.kappa_fade, d.theta_fade);
        double signal = 0.0;
        double serve_chi = 0.0;
        double interference = 0.0;
        for (std::size_t i = 0; i < sbs.size(); ++i) {
            const double chi = fade(rng);
            const double v2 = sbs[i].x * sbs[i].x + sbs[i].y * sbs[i].y;
            const double pw = d.k_eff * cfg.p_s_w * std::pow(v2, -cfg.alpha / 2.0) * chi;
            if (i == serve_idx) {
                signal = pw;
                serve_chi = chi;
            } else if (opts.rf_interference) {
                interference += pw;
            }
        }
        out.sinr_rf = signal / (d.noise_rf + interference);
        const double assoc_chi = opts.fading_in_association ? serve_chi : 1.0;
        rf_signal_mean = d.k_eff * cfg.p_s_w * std::pow(best_v2, -cfg.alpha / 2.0) * assoc_chi;
    }

    // Mean-power association (path loss only by default).
    if (out.vlc_signal > 0.0 || rf_signal_mean > 0.0)
        out.assoc = out.vlc_signal >= rf_signal_mean ? 1 : 2;
    return out;
}

McEstimate estimate_coverage(const NetworkConfig& cfg, Mode mode, const SimOptions& opts) {
    const DerivedParams d = derive(cfg);
    const auto total = run_mc(cfg, d, opts, [&](const TrialResult& tr, ChunkAccum& acc) {
        bool eligible = true;
        bool covered = false;
        switch (mode) {
            case Mode::vlc_only:
                eligible = tr.obs_present;
                covered = tr.sinr_vlc >= d.gamma_vlc;
                break;
            case Mode::rf_only:
                covered = tr.sinr_rf >= d.gamma_rf;
                break;
            case Mode::hybrid:
                eligible = tr.obs_present;
                covered = tr.sinr_vlc >= d.gamma_vlc || tr.sinr_rf >= d.gamma_rf;
                break;
            case Mode::opportunistic:
                eligible = tr.obs_present;
                covered = (tr.assoc == 1 && tr.sinr_vlc >= d.gamma_vlc) ||
                          (tr.assoc == 2 && tr.sinr_rf >= d.gamma_rf);
                break;
        }
        if (eligible) {
            ++acc.count1;
            if (covered) ++acc.count2;
        }
    });
    return binomial_estimate(total.count2, total.count1, opts.trials, total.empty_sbs);
}

McEstimate estimate_spectral_efficiency(const NetworkConfig& cfg, Mode mode, const SimOptions& opts) {
    const DerivedParams d = derive(cfg);
    const auto total = run_mc(cfg, d, opts, [&](const TrialResult& tr, ChunkAccum& acc) {
        const double se_vlc = tr.sinr_vlc > 0.0 ? std::log2(1.0 + tr.sinr_vlc) : 0.0;
        const double se_rf = tr.sinr_rf > 0.0 ? std::log2(1.0 + tr.sinr_rf) : 0.0;
        bool eligible = true;
        double se = 0.0;
        switch (mode) {
            case Mode::vlc_only:
                eligible = tr.obs_present;
                se = se_vlc;
                break;
            case Mode::rf_only: se = se_rf; break;
            case Mode::hybrid:
                eligible = tr.obs_present;
                se = std::max(se_vlc, se_rf);
                break;
            case Mode::opportunistic:
                eligible = tr.obs_present;
                se = tr.assoc == 1 ? se_vlc : (tr.assoc == 2 ? se_rf : 0.0);
                break;
        }
        if (eligible) {
            acc.sum1 += se;
            acc.sum2 += se * se;
            ++acc.count1;
        }
    });
    return mean_estimate(total.sum1, total.sum2, total.count1, opts.trials, total.empty_sbs);
}

McEstimate estimate_association(const NetworkConfig& cfg, const SimOptions& opts) {
    const DerivedParams d = derive(cfg);
    const auto total = run_mc(cfg, d, opts, [&](const TrialResult& tr, ChunkAccum& acc) {
        if (!tr.obs_present) return;
        ++acc.count1;
        if (tr.assoc == 1) ++acc.count2;
    });
    return binomial_estimate(total.count2, total.count1, opts.trials, total.empty_sbs);
}

std::vector<double> interferer_pmf_mc(const NetworkConfig& cfg, const SimOptions& opts, int max_k) {
    const DerivedParams d = derive(cfg);
    const auto total = run_mc(cfg, d, opts, [&](const TrialResult& tr, ChunkAccum& acc) {
        if (tr.in_fov_count < 1) return;
        ++acc.count1;
        const int k = tr.in_fov_count - 1;
        if (k <= max_k) {
            if (acc.vec1.size() < static_cast<std::size_t>(max_k + 1))
                acc.vec1.resize(static_cast<std::size_t>(max_k + 1), 0.0);
            acc.vec1[static_cast<std::size_t>(k)] += 1.0;
        }
    });
    std::vector<double> pmf(static_cast<std::size_t>(max_k + 1), 0.0);
    for (std::size_t i = 0; i < pmf.size() && i < total.vec1.size(); ++i)
        pmf[i] = total.count1 ? total.vec1[i] / static_cast<double>(total.count1) : 0.0;
    return pmf;
}

std::vector<double> empirical_laplace(const NetworkConfig& cfg, const SimOptions& opts,
                                      const std::vector<double>& s_grid) {
    const DerivedParams d = derive(cfg);
    const auto total = run_mc(cfg, d, opts, [&](const TrialResult& tr, ChunkAccum& acc) {
        if (!tr.obs_present) return;
        ++acc.count1;
        if (acc.vec1.size() < s_grid.size()) acc.vec1.resize(s_grid.size(), 0.0);
        for (std::size_t i = 0; i < s_grid.size(); ++i)
            acc.vec1[i] += std::exp(-s_grid[i] * tr.vlc_interference_power);
    });
    std::vector<double> lap(s_grid.size(), 0.0);
    for (std::size_t i = 0; i < lap.size() && i < total.vec1.size(); ++i)
        lap[i] = total.count1 ? total.vec1[i] / static_cast<double>(total.count1) : 0.0;
    return lap;
}

std::vector<std::complex<double>> empirical_cf(const NetworkConfig& cfg, const SimOptions& opts,
                                               const std::vector<double>& omega_grid) {
    const DerivedParams d = derive(cfg);
    const auto total = run_mc(cfg, d, opts, [&](const TrialResult& tr, ChunkAccum& acc) {
        if (tr.in_fov_count < 1) return;
        ++acc.count1;
        if (acc.vec1.size() < omega_grid.size()) {
            acc.vec1.resize(omega_grid.size(), 0.0);
            acc.vec2.resize(omega_grid.size(), 0.0);
        }
        const double omega_val = tr.vlc_signal - d.gamma_vlc * tr.vlc_interference_power;
        for (std::size_t i = 0; i < omega_grid.size(); ++i) {
            acc.vec1[i] += std::cos(omega_grid[i] * omega_val);
            acc.vec2[i] += std::sin(omega_grid[i] * omega_val);
        }
    });
    std::vector<std::complex<double>> cf(omega_grid.size(), 0.0);
    for (std::size_t i = 0; i < cf.size() && i < total.vec1.size(); ++i) {
        if (total.count1)
            cf[i] = {total.vec1[i] / static_cast<double>(total.count1),
                     total.vec2[i] / static_cast<double>(total.count1)};
    }
    return cf;
}

std::vector<double> sample_serving_distances(const NetworkConfig& cfg, const SimOptions& opts, int tier) {
    const DerivedParams d = derive(cfg);
    // Order-preserving collection: chunks gather locally and are concatenated
    // in chunk order by the merge.
    const std::size_t nchunks = (opts.trials + kChunkSize - 1) / kChunkSize;
    std::vector<std::vector<double>> per_chunk(nchunks);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            std::mt19937_64 rng = substream(opts.seed, c);
            const std::size_t lo = c * kChunkSize;
            const std::size_t hi = std::min(lo + kChunkSize, opts.trials);
            for (std::size_t t = lo; t < hi; ++t) {
                const TrialResult tr = run_trial(cfg, d, rng, opts);
                if (tr.assoc != tier) continue;
                per_chunk[c].push_back(tier == 1 ? tr.vlc_serving_r : tr.rf_serving_v);
            }
        }
    };
    int workers = opts.workers > 0 ? opts.workers : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<double> out;
    for (auto& v : per_chunk) out.insert(out.end(), v.begin(), v.end());
    return out;
}

}  // namespace rfvlc
