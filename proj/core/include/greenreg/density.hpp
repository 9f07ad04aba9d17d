#pragma once

#include "greenreg/green_kernel.hpp"

namespace greenreg {

/// Moments and central-interval masses of the density x -> H(x, y).
struct DensityStats {
    double mean = 0.0;
    double variance = 0.0;
    double std = 0.0;
    double p_1s = 0.0;  // mass of [mean - s, mean + s] clipped to [0,1]
    double p_2s = 0.0;  // mass of [mean - 2s, mean + 2s] clipped to [0,1]
};

/// Total mass of x -> H(x, y) on [0,1]; one up to quadrature error.
double density_mass(const KernelParams& params, double y);

/// Throws EvaluationError when the mass check fails by more than 1e-8.
DensityStats density_stats(const KernelParams& params, double y);

inline constexpr double kMassTolerance = 1e-8;

}  // namespace greenreg
