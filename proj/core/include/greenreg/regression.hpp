#pragma once

#include <cstddef>
#include <vector>

#include "greenreg/green_kernel.hpp"
#include "greenreg/numerics.hpp"

namespace greenreg {

/// Observed data: abscissae strictly increasing inside (0,1), one ordinate each.
class SampleSet {
public:
    /// Abscissae closer than this are treated as duplicates.
    static constexpr double kMinSpacing = 1e-9;

    SampleSet(std::vector<double> xi, std::vector<double> eta);

    [[nodiscard]] const std::vector<double>& xi() const noexcept { return xi_; }
    [[nodiscard]] const std::vector<double>& eta() const noexcept { return eta_; }
    [[nodiscard]] std::size_t size() const noexcept { return xi_.size(); }

private:
    std::vector<double> xi_;
    std::vector<double> eta_;
};

/// Prediction abscissae inside (0,1) and the grid step they were built from.
class QueryGrid {
public:
    QueryGrid(std::vector<double> x_star, double delta);

    /// Interior points i·delta for i = 1 .. ceil(1/delta) - 1.
    static QueryGrid uniform(double delta);

    [[nodiscard]] const std::vector<double>& x_star() const noexcept { return x_star_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }
    [[nodiscard]] std::size_t size() const noexcept { return x_star_.size(); }

private:
    std::vector<double> x_star_;
    double delta_;
};

/// Blocks of the joint covariance over (data, queries).
///
///   H(i, j)           = H(xi_i, xi_j)
///   h_star(i, j)      = H(x*_j, xi_i)    (h_star^T is the query-by-data block)
///   h_star_star(i, k) = H(x*_i, x*_k)
struct CovarianceBlocks {
    DenseMatrix H;
    DenseMatrix h_star;
    DenseMatrix h_star_star;
};

struct Prediction {
    std::vector<double> x_star;
    std::vector<double> mu;
    std::vector<double> variance;      // clamped at zero
    std::vector<double> raw_variance;  // before clamping
    std::vector<double> std;
    std::vector<double> band_lo;
    std::vector<double> band_hi;
    // Number of variances below -kSilentClampFloor that were clamped to zero.
    std::size_t clamped_count = 0;
};

/// The two terms of the predictive variance at one query point.
struct VarianceTerms {
    double prior = 0.0;      // H(x*, x*)
    double explained = 0.0;  // h^T H^{-1} h
    [[nodiscard]] double variance() const noexcept { return prior - explained; }
};

inline constexpr double kSilentClampFloor = 1e-9;

DenseMatrix build_cov_matrix(const KernelParams& params, const SampleSet& samples);

CovarianceBlocks build_joint_blocks(const KernelParams& params, const SampleSet& samples,
                                    const QueryGrid& grid);

/// Predictive mean h_star^T H^{-1} eta and variance per query point.
/// Throws SingularMatrixError naming the offending data column.
Prediction predict(const KernelParams& params, const SampleSet& samples, const QueryGrid& grid);

/// Full predictive covariance h_star_star - h_star^T H^{-1} h_star (unclamped).
DenseMatrix predictive_covariance(const KernelParams& params, const SampleSet& samples,
                                  const QueryGrid& grid);

VarianceTerms variance_terms(const KernelParams& params, const SampleSet& samples,
                             double x_star);

/// u(x) = delta · sum_i G(x, xi_i) eta_i.
double discretized_solution(const KernelParams& params, const SampleSet& samples, double delta,
                            double x);

}  // namespace greenreg
