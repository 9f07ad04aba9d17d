#include "greenreg/green_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "greenreg/errors.hpp"

namespace greenreg {

namespace {

// Above this, sinh/cosh products are evaluated as exp-difference ratios.
constexpr double kLargeA = 30.0;

void require_closed_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(name) + " must lie in [0,1], got " + std::to_string(v));
    }
}

void require_open_unit(double v, const char* name) {
    if (!(v > 0.0 && v < 1.0)) {
        throw DomainError(std::string(name) + " must lie in (0,1), got " + std::to_string(v));
    }
}

// 1 - exp(-2t) for t >= 0 without cancellation.
double one_minus_exp2(double t) { return -std::expm1(-2.0 * t); }

}  // namespace

KernelParams::KernelParams(double a, int series_terms, QuadratureSpec quad)
    : a_(a), series_terms_(series_terms), quad_(std::move(quad)) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
        throw DomainError("operator coefficient a must be finite and >= 0");
    }
    if (series_terms < 1) throw DomainError("series_terms must be >= 1");
    quad_.validate();
}

double green_closed(const KernelParams& params, double x, double y) {
    require_closed_unit(x, "x");
    require_closed_unit(y, "y");
    const double lo = std::min(x, y);
    const double hi = std::max(x, y);
    const double a = params.a();
    if (a == 0.0) return lo * (1.0 - hi);
    if (a <= kLargeA) {
        return std::sinh(a * lo) * std::sinh(a * (1.0 - hi)) / (a * std::sinh(a));
    }
    // sinh(p) sinh(q) / sinh(a) with p + q <= a, factored as exp(p + q - a) times
    // bounded correction terms.
    return std::exp(-a * (hi - lo)) * one_minus_exp2(a * lo) * one_minus_exp2(a * (1.0 - hi)) /
           (2.0 * a * one_minus_exp2(a));
}

double green_series(const KernelParams& params, double x, double y) {
    require_closed_unit(x, "x");
    require_closed_unit(y, "y");
    const double a2 = params.a() * params.a();
    double sum = 0.0;
    // Summed from the smallest terms up to limit rounding growth.
    for (int n = params.series_terms(); n >= 1; --n) {
        const double k = n * std::numbers::pi;
        sum += 2.0 * std::sin(k * x) * std::sin(k * y) / (k * k + a2);
    }
    return sum;
}

double green_dx(const KernelParams& params, double x, double y, bool left_branch) {
    require_closed_unit(x, "x");
    require_closed_unit(y, "y");
    const double a = params.a();
    if (a == 0.0) return left_branch ? 1.0 - y : -y;
    if (a <= kLargeA) {
        if (left_branch) return std::cosh(a * x) * std::sinh(a * (1.0 - y)) / std::sinh(a);
        return -std::sinh(a * y) * std::cosh(a * (1.0 - x)) / std::sinh(a);
    }
    // cosh(t) = exp(t) (1 + exp(-2t)) / 2
    const auto one_plus_exp2 = [](double t) { return 1.0 + std::exp(-2.0 * t); };
    if (left_branch) {
        return std::exp(-a * (y - x)) * one_plus_exp2(a * x) * one_minus_exp2(a * (1.0 - y)) /
               (2.0 * one_minus_exp2(a));
    }
    return -std::exp(-a * (x - y)) * one_minus_exp2(a * y) * one_plus_exp2(a * (1.0 - x)) /
           (2.0 * one_minus_exp2(a));
}

double l1_norm(const KernelParams& params, double y) {
    require_open_unit(y, "y");
    const double a = params.a();
    if (a == 0.0) return 0.5 * y * (1.0 - y);
    // (1 - cosh(ay) + (cosh a - 1) sinh(ay) / sinh a) / a^2, rewritten as a
    // product so that small a does not cancel.
    if (a <= kLargeA) {
        return 2.0 * std::sinh(0.5 * a * y) * std::sinh(0.5 * a * (1.0 - y)) /
               (a * a * std::cosh(0.5 * a));
    }
    return -std::expm1(-a * y) * -std::expm1(-a * (1.0 - y)) / (a * a * (1.0 + std::exp(-a)));
}

double normalized_green(const KernelParams& params, double x, double y) {
    require_closed_unit(x, "x");
    const double norm = l1_norm(params, y);
    return green_closed(params, x, y) / norm;
}

double rkhs_inner_product(const KernelParams& params, const TestFunction& u, double y) {
    require_open_unit(y, "y");
    const double a2 = params.a() * params.a();
    auto integrand = [&](bool left) {
        return [&, left](double x) {
            return u.derivative(x) * green_dx(params, x, y, left) +
                   a2 * u.value(x) * green_closed(params, x, y);
        };
    };
    // Each side uses its own one-sided derivative, including at the node x = y.
    return integrate(integrand(true), 0.0, y, params.quad()) +
           integrate(integrand(false), y, 1.0, params.quad());
}

}  // namespace greenreg
