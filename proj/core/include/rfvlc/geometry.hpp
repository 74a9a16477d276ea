#pragma once

// Planar PPP sampling on a finite disk and the distance distributions of the
// nearest point, with the truncation normalizer carried per tier.

#include <random>
#include <vector>

namespace rfvlc {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct DiskRegion {
    double radius_m = 10.0;
    double area() const;
};

// Poisson(lambda * area) points placed uniformly in the disk centred on the
// origin (the tagged receiver location).
std::vector<Point2> sample_ppp(std::mt19937_64& rng, double lambda_per_m2, const DiskRegion& region);

// Truncation normalizer U = 1 - exp(-lambda pi R^2): probability that the
// disk holds at least one point.
double u_normalizer(double lambda_per_m2, double radius_m);

// Nearest-point distance over the disk: pdf and P(nearest <= x), both
// conditioned on the disk being non-empty.
double nearest_distance_pdf(double r, double lambda_per_m2, double radius_m);
double nearest_distance_cdf(double x, double lambda_per_m2, double radius_m);

// Ground radius of the receiver field of view: min(R_m, h tan xi); xi >= 90
// degrees saturates to the disk radius.
double fov_radius(double h_m, double xi_fov_rad, double radius_m);

// Probability that at least one point of the tier lies inside the FOV disk.
double prob_obs_in_fov(double lambda_per_m2, double fov_radius_m, double disk_radius_m);

}  // namespace rfvlc
