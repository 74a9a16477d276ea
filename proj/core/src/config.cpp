#include "rfvlc/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rfvlc/channel.hpp"
#include "rfvlc/geometry.hpp"

namespace rfvlc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("config: " + what);
}

}  // namespace

DerivedParams derive(const NetworkConfig& cfg) {
    require(cfg.r_m_m > 0.0, "r_m_m must be positive");
    require(cfg.h_m > 0.0, "h_m must be positive");
    require(cfg.xi_fov_deg > 0.0 && cfg.xi_fov_deg <= 90.0, "xi_fov_deg must lie in (0, 90]");
    require(cfg.phi_half_deg > 0.0 && cfg.phi_half_deg < 90.0, "phi_half_deg must lie in (0, 90)");
    require(cfg.lambda_o_per_m2 > 0.0 || cfg.lambda_o_count > 0.0, "lambda_o must be positive");
    require(cfg.lambda_s_per_m2 > 0.0 || cfg.lambda_s_count > 0.0, "lambda_s must be positive");
    require(cfg.p_opt_w > 0.0, "p_opt_w must be positive");
    require(cfg.kappa_oe > 0.0, "kappa_oe must be positive");
    require(cfg.a_pd_m2 > 0.0, "a_pd_m2 must be positive");
    require(cfg.t_filter > 0.0, "t_filter must be positive");
    require(cfg.n_refractive > 0.0, "n_refractive must be positive");
    require(cfg.r_pd_a_per_w > 0.0, "r_pd_a_per_w must be positive");
    require(cfg.f_dc > 0.0, "f_dc must be positive");
    require(cfg.b_o_hz > 0.0, "b_o_hz must be positive");
    require(cfg.n_o_a2_per_hz > 0.0, "n_o_a2_per_hz must be positive");
    require(cfg.p_s_w > 0.0, "p_s_w must be positive");
    require(cfg.b_s_hz > 0.0, "b_s_hz must be positive");
    require(cfg.n_s_w_per_hz > 0.0, "n_s_w_per_hz must be positive");
    require(cfg.alpha > 2.01 && cfg.alpha <= 8.0, "alpha must lie in (2.01, 8]");
    require(cfg.kappa_fade >= 0.05, "kappa_fade must be >= 0.05");
    require(cfg.theta_fade >= 0.0, "theta_fade must be non-negative");
    require(cfg.f_c_ghz > 0.0, "f_c_ghz must be positive");
    require(cfg.r_th > 0.0, "r_th must be positive");

    DerivedParams d;
    const double area = M_PI * cfg.r_m_m * cfg.r_m_m;
    d.lambda_o = cfg.lambda_o_per_m2 > 0.0 ? cfg.lambda_o_per_m2 : cfg.lambda_o_count / area;
    d.lambda_s = cfg.lambda_s_per_m2 > 0.0 ? cfg.lambda_s_per_m2 : cfg.lambda_s_count / area;

    d.m_order = lambertian_order(cfg.phi_half_deg * M_PI / 180.0);
    d.xi_fov_rad = cfg.xi_fov_deg * M_PI / 180.0;
    d.t_radius = fov_radius(cfg.h_m, d.xi_fov_rad, cfg.r_m_m);
    d.g_conc = concentrator_gain(cfg.n_refractive, d.xi_fov_rad);
    d.z_gain = vlc_gain_sq_prefactor(cfg.h_m, d.m_order, cfg.a_pd_m2, cfg.t_filter, d.g_conc);
    const double p_ratio = cfg.p_opt_w / cfg.kappa_oe;
    d.p_elec_w = p_ratio * p_ratio;
    d.c_vlc = cfg.r_pd_a_per_w * cfg.r_pd_a_per_w * d.p_elec_w * d.z_gain;

    d.k_rf = rf_pathloss_const(cfg.f_c_ghz, cfg.los);
    d.k_eff = cfg.k_interpretation == KInterpretation::paper ? d.k_rf : 1.0 / d.k_rf;
    d.z1 = std::pow(cfg.p_s_w * d.k_eff / d.c_vlc, 2.0 / cfg.alpha);

    d.u_o = u_normalizer(d.lambda_o, cfg.r_m_m);
    d.u_s = u_normalizer(d.lambda_s, cfg.r_m_m);

    d.noise_vlc = cfg.b_o_hz * cfg.f_dc * cfg.f_dc * cfg.n_o_a2_per_hz;
    d.noise_rf = cfg.b_s_hz * cfg.n_s_w_per_hz;

    d.target_rate_vlc = cfg.r_th_unit == RthUnit::bps ? cfg.r_th : cfg.r_th * cfg.b_o_hz;
    d.target_rate_rf = cfg.r_th_unit == RthUnit::bps ? cfg.r_th : cfg.r_th * cfg.b_s_hz;
    d.gamma_vlc = std::exp2(d.target_rate_vlc / (cfg.b_o_hz / 2.0)) - 1.0;
    d.gamma_rf = std::exp2(d.target_rate_rf / cfg.b_s_hz) - 1.0;
    require(d.gamma_vlc > 0.0 && std::isfinite(d.gamma_vlc), "optical SINR threshold out of range");
    require(d.gamma_rf > 0.0 && std::isfinite(d.gamma_rf), "RF SINR threshold out of range");

    d.theta_fade = cfg.theta_fade > 0.0 ? cfg.theta_fade : 1.0 / cfg.kappa_fade;
    return d;
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for " + key + ": '" + value + "'");
    }
    while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos]))) ++pos;
    if (pos != value.size())
        throw std::invalid_argument("config: trailing characters in value for " + key + ": '" + value + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw std::invalid_argument("config: bad boolean for " + key + ": '" + value + "'");
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

void apply_config_entry(NetworkConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "r_m_m") cfg.r_m_m = parse_double(key, value);
    else if (key == "h_m") cfg.h_m = parse_double(key, value);
    else if (key == "xi_fov_deg") cfg.xi_fov_deg = parse_double(key, value);
    else if (key == "phi_half_deg") cfg.phi_half_deg = parse_double(key, value);
    else if (key == "lambda_o_per_m2") cfg.lambda_o_per_m2 = parse_double(key, value);
    else if (key == "lambda_o_count") cfg.lambda_o_count = parse_double(key, value);
    else if (key == "lambda_s_per_m2") cfg.lambda_s_per_m2 = parse_double(key, value);
    else if (key == "lambda_s_count") cfg.lambda_s_count = parse_double(key, value);
    else if (key == "p_opt_w") cfg.p_opt_w = parse_double(key, value);
    else if (key == "kappa_oe") cfg.kappa_oe = parse_double(key, value);
    else if (key == "a_pd_m2") cfg.a_pd_m2 = parse_double(key, value);
    else if (key == "t_filter") cfg.t_filter = parse_double(key, value);
    else if (key == "n_refractive") cfg.n_refractive = parse_double(key, value);
    else if (key == "r_pd_a_per_w") cfg.r_pd_a_per_w = parse_double(key, value);
    else if (key == "f_dc") cfg.f_dc = parse_double(key, value);
    else if (key == "b_o_hz") cfg.b_o_hz = parse_double(key, value);
    else if (key == "n_o_a2_per_hz") cfg.n_o_a2_per_hz = parse_double(key, value);
    else if (key == "p_s_w") cfg.p_s_w = parse_double(key, value);
    else if (key == "b_s_hz") cfg.b_s_hz = parse_double(key, value);
    else if (key == "n_s_w_per_hz") cfg.n_s_w_per_hz = parse_double(key, value);
    else if (key == "alpha") cfg.alpha = parse_double(key, value);
    else if (key == "kappa_fade") cfg.kappa_fade = parse_double(key, value);
    else if (key == "theta_fade") cfg.theta_fade = parse_double(key, value);
    else if (key == "f_c_ghz") cfg.f_c_ghz = parse_double(key, value);
    else if (key == "los") cfg.los = parse_bool(key, value);
    else if (key == "k_interpretation") {
        if (value == "paper") cfg.k_interpretation = KInterpretation::paper;
        else if (value == "loss") cfg.k_interpretation = KInterpretation::loss;
        else throw std::invalid_argument("config: k_interpretation must be 'paper' or 'loss', got '" + value + "'");
    } else if (key == "r_th") cfg.r_th = parse_double(key, value);
    else if (key == "r_th_unit") {
        if (value == "bps") cfg.r_th_unit = RthUnit::bps;
        else if (value == "bps_hz") cfg.r_th_unit = RthUnit::bps_hz;
        else throw std::invalid_argument("config: r_th_unit must be 'bps' or 'bps_hz', got '" + value + "'");
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

NetworkConfig parse_config(std::istream& in) {
    NetworkConfig cfg;
    std::string line;
    std::set<std::string> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) + " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second)
            throw std::invalid_argument("config: duplicate key '" + key + "'");
        apply_config_entry(cfg, key, value);
    }
    const bool o_both = seen.count("lambda_o_per_m2") && seen.count("lambda_o_count");
    const bool s_both = seen.count("lambda_s_per_m2") && seen.count("lambda_s_count");
    if (o_both) throw std::invalid_argument("config: give lambda_o as per_m2 or count, not both");
    if (s_both) throw std::invalid_argument("config: give lambda_s as per_m2 or count, not both");
    return cfg;
}

NetworkConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    return parse_config(in);
}

}  // namespace rfvlc
