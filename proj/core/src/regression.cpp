#include "greenreg/regression.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "greenreg/errors.hpp"

namespace greenreg {

SampleSet::SampleSet(std::vector<double> xi, std::vector<double> eta)
    : xi_(std::move(xi)), eta_(std::move(eta)) {
    if (xi_.empty()) throw ValidationError("sample set is empty");
    if (xi_.size() != eta_.size()) {
        throw ValidationError("sample abscissae and ordinates differ in length");
    }
    for (std::size_t i = 0; i < xi_.size(); ++i) {
        if (!(xi_[i] > 0.0 && xi_[i] < 1.0)) {
            throw ValidationError("sample abscissa " + std::to_string(xi_[i]) +
                                  " is outside (0,1)");
        }
        if (!std::isfinite(eta_[i])) throw ValidationError("sample ordinate is not finite");
        if (i > 0 && !(xi_[i] - xi_[i - 1] >= kMinSpacing)) {
            if (xi_[i] < xi_[i - 1]) {
                throw ValidationError("sample abscissae must be strictly increasing");
            }
            throw ValidationError("duplicate sample abscissa " + std::to_string(xi_[i]));
        }
    }
}

QueryGrid::QueryGrid(std::vector<double> x_star, double delta)
    : x_star_(std::move(x_star)), delta_(delta) {
    if (!(delta_ > 0.0) || !std::isfinite(delta_)) {
        throw ValidationError("grid step must be positive");
    }
    if (x_star_.empty()) throw ValidationError("query grid is empty");
    for (double x : x_star_) {
        if (!(x > 0.0 && x < 1.0)) {
            throw ValidationError("query point " + std::to_string(x) + " is outside (0,1)");
        }
    }
}

QueryGrid QueryGrid::uniform(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("grid step must lie in (0,1)");
    // The slack keeps 1/delta from rounding up past an exact integer.
    const auto steps = static_cast<std::size_t>(std::ceil(1.0 / delta - 1e-9));
    std::vector<double> points;
    for (std::size_t i = 1; i < steps; ++i) {
        const double x = static_cast<double>(i) * delta;
        if (x < 1.0) points.push_back(x);
    }
    return QueryGrid(std::move(points), delta);
}

DenseMatrix build_cov_matrix(const KernelParams& params, const SampleSet& samples) {
    const auto& xi = samples.xi();
    const std::size_t n = xi.size();
    DenseMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = normalized_green(params, xi[i], xi[j]);
    return h;
}

CovarianceBlocks build_joint_blocks(const KernelParams& params, const SampleSet& samples,
                                    const QueryGrid& grid) {
    const auto& xi = samples.xi();
    const auto& xs = grid.x_star();
    CovarianceBlocks blocks{build_cov_matrix(params, samples), DenseMatrix(xi.size(), xs.size()),
                            DenseMatrix(xs.size(), xs.size())};
    for (std::size_t i = 0; i < xi.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
            blocks.h_star(i, j) = normalized_green(params, xs[j], xi[i]);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t k = 0; k < xs.size(); ++k)
            blocks.h_star_star(i, k) = normalized_green(params, xs[i], xs[k]);
    return blocks;
}

namespace {

DenseMatrix solve_covariance(const SampleSet& samples, const DenseMatrix& h,
                             const DenseMatrix& rhs) {
    try {
        return solve_linear(h, rhs);
    } catch (const SingularMatrixError& e) {
        const auto& xi = samples.xi();
        const std::size_t col = e.pivot();
        std::ostringstream msg;
        msg.precision(12);
        msg << "covariance matrix is singular at column " << col << " (xi = " << xi[col] << ")";
        if (col > 0) msg << "; nearest preceding column " << col - 1 << " (xi = " << xi[col - 1] << ")";
        throw SingularMatrixError(col, msg.str());
    }
}

}  // namespace

Prediction predict(const KernelParams& params, const SampleSet& samples, const QueryGrid& grid) {
    const CovarianceBlocks blocks = build_joint_blocks(params, samples, grid);
    const std::size_t n = samples.size();
    const std::size_t m = grid.size();

    // One factorization for [eta | h_star].
    DenseMatrix rhs(n, m + 1);
    for (std::size_t i = 0; i < n; ++i) {
        rhs(i, 0) = samples.eta()[i];
        for (std::size_t j = 0; j < m; ++j) rhs(i, j + 1) = blocks.h_star(i, j);
    }
    const DenseMatrix sol = solve_covariance(samples, blocks.H, rhs);

    Prediction out;
    out.x_star = grid.x_star();
    out.mu.resize(m);
    out.variance.resize(m);
    out.raw_variance.resize(m);
    out.std.resize(m);
    out.band_lo.resize(m);
    out.band_hi.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        double mean = 0.0;
        double explained = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mean += blocks.h_star(i, j) * sol(i, 0);
            explained += blocks.h_star(i, j) * sol(i, j + 1);
        }
        const double raw = blocks.h_star_star(j, j) - explained;
        double v = raw;
        if (v < 0.0) {
            if (v < -kSilentClampFloor) ++out.clamped_count;
            v = 0.0;
        }
        out.mu[j] = mean;
        out.raw_variance[j] = raw;
        out.variance[j] = v;
        out.std[j] = std::sqrt(v);
        out.band_lo[j] = mean - 2.0 * out.std[j];
        out.band_hi[j] = mean + 2.0 * out.std[j];
    }
    return out;
}

DenseMatrix predictive_covariance(const KernelParams& params, const SampleSet& samples,
                                  const QueryGrid& grid) {
    const CovarianceBlocks blocks = build_joint_blocks(params, samples, grid);
    const DenseMatrix weights = solve_covariance(samples, blocks.H, blocks.h_star);
    return blocks.h_star_star - blocks.h_star.transposed() * weights;
}

VarianceTerms variance_terms(const KernelParams& params, const SampleSet& samples,
                             double x_star) {
    const CovarianceBlocks blocks =
        build_joint_blocks(params, samples, QueryGrid({x_star}, 1.0));
    const DenseMatrix weights = solve_covariance(samples, blocks.H, blocks.h_star);
    VarianceTerms terms;
    terms.prior = blocks.h_star_star(0, 0);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        terms.explained += blocks.h_star(i, 0) * weights(i, 0);
    }
    return terms;
}

double discretized_solution(const KernelParams& params, const SampleSet& samples, double delta,
                            double x) {
    if (!(delta > 0.0)) throw DomainError("delta must be positive");
    double sum = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        sum += green_closed(params, x, samples.xi()[i]) * samples.eta()[i];
    }
    return delta * sum;
}

}  // namespace greenreg
