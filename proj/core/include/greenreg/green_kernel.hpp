#pragma once

#include <functional>

#include "greenreg/numerics.hpp"

namespace greenreg {

/// Identifies one Green's function of  -u'' + a^2 u = f,  u(0) = u(1) = 0.
class KernelParams {
public:
    static constexpr int kDefaultSeriesTerms = 100000;

    explicit KernelParams(double a, int series_terms = kDefaultSeriesTerms,
                          QuadratureSpec quad = {});

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] int series_terms() const noexcept { return series_terms_; }
    [[nodiscard]] const QuadratureSpec& quad() const noexcept { return quad_; }

    [[nodiscard]] KernelParams with_series_terms(int terms) const {
        return KernelParams(a_, terms, quad_);
    }

private:
    double a_;
    int series_terms_;
    QuadratureSpec quad_;
};

/// G(x,y) in closed form. Symmetric, nonnegative, zero on the boundary.
double green_closed(const KernelParams& params, double x, double y);

/// Partial sum of the eigenfunction expansion of G over n = 1..series_terms.
double green_series(const KernelParams& params, double x, double y);

/// dG/dx at (x,y), taking the branch x < y when `left_branch` is set and
/// x > y otherwise. Both branches extend continuously to x = y.
double green_dx(const KernelParams& params, double x, double y, bool left_branch);

/// L1(y) = integral of G(x,y) over x in [0,1]; y must lie in (0,1).
double l1_norm(const KernelParams& params, double y);

/// H(x,y) = G(x,y) / L1(y). For each y in (0,1), x -> H(x,y) integrates to one.
double normalized_green(const KernelParams& params, double x, double y);

/// A member u of the kernel's Hilbert space together with its derivative.
struct TestFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
};

/// Quadrature value of  integral_0^1 (u' dG/dx + a^2 u G)(x, y) dx.
///
/// For u vanishing at both endpoints this reproduces u(y). The integral is
/// split at x = y, where dG/dx jumps.
double rkhs_inner_product(const KernelParams& params, const TestFunction& u, double y);

}  // namespace greenreg
