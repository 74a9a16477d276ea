#pragma once

// Traffic-split design: invert the optical association fraction beta for one
// free parameter (a tier intensity or the tier-balance constant z1) in three
// models of decreasing simplification — a rational-exponential closed model
// tied to the full-FOV geometry, a sparse-RF linear model, and the exact
// association integral solved by bracketed bisection.

#include <string>

#include "rfvlc/config.hpp"

namespace rfvlc {
namespace design {

enum class FreeParam { lambda_o, lambda_s, z1 };

struct DesignTarget {
    NetworkConfig cfg;
    double beta = 0.5;  // target optical association fraction, in (0, 1)
    FreeParam free_parameter = FreeParam::lambda_s;
};

struct DesignSolution {
    double value = 0.0;               // solved parameter (per-m^2 intensity, or z1)
    double achieved_beta_model = 0.0; // round trip through the solver's own model
    double achieved_beta_exact = 0.0; // round trip through the association integral
    bool feasible = false;
    std::string note;                 // diagnostic when infeasible or approximate
};

// The two reduced association models, exposed so callers can audit round
// trips. The closed model drops the disk truncation and assumes a full FOV;
// the asymptotic model linearizes the RF blocking for sparse small cells.
double offload_model_closed(double lambda_o, double lambda_s, double z1, double h_m);
double offload_model_asymptotic(double lambda_o, double lambda_s, double z1, double h_m,
                                double t_radius_m);

// Closed inversions of the rational-exponential model (Lambert-W for z1 and
// lambda_s, algebraic for lambda_o). Requires xi_fov = 90 deg.
DesignSolution solve_offload_closed(const DesignTarget& target);

// Inversions of the sparse-RF model: linear in lambda_s and z1, bisection in
// lambda_o. Feasible only when beta stays below the FOV mass factor.
DesignSolution solve_offload_asymptotic(const DesignTarget& target);

// Bracketed bisection on the exact association integral; relies on the
// fraction increasing in lambda_o and decreasing in lambda_s and z1.
DesignSolution solve_offload_numeric(const DesignTarget& target);

// Balance constant maximizing the sparse-RF association along the
// field-of-view trade-off (wider FOV grows coverage reach but dilutes the
// concentrator gain). Degenerate at xi_fov = 90 deg, where cos vanishes.
double optimal_z1_asymptotic(const NetworkConfig& cfg);

}  // namespace design
}  // namespace rfvlc
