#include "greenreg/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "greenreg/errors.hpp"

namespace greenreg {

namespace {

double interval_mass(const KernelParams& params, double y, double lo, double hi) {
    lo = std::max(0.0, lo);
    hi = std::min(1.0, hi);
    if (!(lo < hi)) return 0.0;
    const auto density = [&](double x) { return normalized_green(params, x, y); };
    return integrate(density, lo, hi, params.quad().with_splits({y}));
}

}  // namespace

double density_mass(const KernelParams& params, double y) {
    return interval_mass(params, y, 0.0, 1.0);
}

DensityStats density_stats(const KernelParams& params, double y) {
    const double mass = density_mass(params, y);
    if (std::abs(mass - 1.0) > kMassTolerance) {
        throw EvaluationError(y, "density at y = " + std::to_string(y) +
                                     " does not integrate to one (mass " +
                                     std::to_string(mass) + ")");
    }

    const QuadratureSpec quad = params.quad().with_splits({y});
    DensityStats stats;
    stats.mean = integrate([&](double x) { return x * normalized_green(params, x, y); }, 0.0,
                           1.0, quad);
    stats.variance = integrate(
        [&](double x) {
            const double d = x - stats.mean;
            return d * d * normalized_green(params, x, y);
        },
        0.0, 1.0, quad);
    stats.std = std::sqrt(stats.variance);
    stats.p_1s = interval_mass(params, y, stats.mean - stats.std, stats.mean + stats.std);
    stats.p_2s =
        interval_mass(params, y, stats.mean - 2.0 * stats.std, stats.mean + 2.0 * stats.std);
    return stats;
}

}  // namespace greenreg
