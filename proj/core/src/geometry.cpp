#include "rfvlc/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace rfvlc {

double DiskRegion::area() const { return M_PI * radius_m * radius_m; }

std::vector<Point2> sample_ppp(std::mt19937_64& rng, double lambda_per_m2, const DiskRegion& region) {
    if (lambda_per_m2 < 0.0) throw std::invalid_argument("sample_ppp: negative intensity");
    std::poisson_distribution<int> count_dist(lambda_per_m2 * region.area());
    const int n = count_dist(rng);
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    std::uniform_real_distribution<double> uni(-region.radius_m, region.radius_m);
    const double r2 = region.radius_m * region.radius_m;
    while (static_cast<int>(pts.size()) < n) {
        const double x = uni(rng);
        const double y = uni(rng);
        if (x * x + y * y <= r2) pts.push_back({x, y});
    }
    return pts;
}

double u_normalizer(double lambda_per_m2, double radius_m) {
    return -std::expm1(-lambda_per_m2 * M_PI * radius_m * radius_m);
}

double nearest_distance_pdf(double r, double lambda_per_m2, double radius_m) {
    if (r < 0.0 || r > radius_m) return 0.0;
    const double u = u_normalizer(lambda_per_m2, radius_m);
    return 2.0 * M_PI * lambda_per_m2 * r * std::exp(-lambda_per_m2 * M_PI * r * r) / u;
}

double nearest_distance_cdf(double x, double lambda_per_m2, double radius_m) {
    if (x <= 0.0) return 0.0;
    if (x > radius_m) x = radius_m;
    const double u = u_normalizer(lambda_per_m2, radius_m);
    return -std::expm1(-lambda_per_m2 * M_PI * x * x) / u;
}

double fov_radius(double h_m, double xi_fov_rad, double radius_m) {
    if (xi_fov_rad >= M_PI / 2.0) return radius_m;
    return std::min(radius_m, h_m * std::tan(xi_fov_rad));
}

double prob_obs_in_fov(double lambda_per_m2, double fov_radius_m, double disk_radius_m) {
    // P(nearest <= fov_radius), conditioned on a non-empty deployment disk.
    return u_normalizer(lambda_per_m2, fov_radius_m) / u_normalizer(lambda_per_m2, disk_radius_m);
}

}  // namespace rfvlc
