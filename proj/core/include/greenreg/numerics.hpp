#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace greenreg {

/// Composite Simpson rule configuration.
///
/// `panel_count` panels are used on every sub-interval between consecutive
/// split points, so a kink at a split point never falls inside a panel.
struct QuadratureSpec {
    int panel_count = 2048;
    std::vector<double> split_points;

    /// Throws ValidationError unless panel_count is even and >= 2 and the
    /// split points are strictly increasing inside (0,1).
    void validate() const;

    /// Copy of this spec with `points` merged into the split points.
    /// Points outside (0,1) and exact duplicates are dropped.
    [[nodiscard]] QuadratureSpec with_splits(std::initializer_list<double> points) const;
};

/// Row-major dense matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix column(std::span<const double> values);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::span<const double> entries() const noexcept { return entries_; }

    double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] std::vector<double> col(std::size_t c) const;
    [[nodiscard]] std::span<const double> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }

    [[nodiscard]] DenseMatrix transposed() const;

    /// Maximum absolute row sum.
    [[nodiscard]] double norm_inf() const;

    friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);
    friend DenseMatrix operator-(const DenseMatrix& lhs, const DenseMatrix& rhs);
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

using Integrand = std::function<double(double)>;

/// Composite Simpson approximation of the integral of `f` over [lo, hi].
///
/// The interval is cut at every split point of `spec` lying strictly inside
/// (lo, hi), and each piece gets `spec.panel_count` panels. Throws
/// EvaluationError if `f` is non-finite at any node.
double integrate(const Integrand& f, double lo, double hi, const QuadratureSpec& spec);

/// Solves A·X = B by LU factorization with partial (row) pivoting.
///
/// A need not be symmetric. A pivot of magnitude below 1e-12·‖A‖∞ raises
/// SingularMatrixError carrying the zero-based pivot index.
DenseMatrix solve_linear(const DenseMatrix& a, const DenseMatrix& b);

inline constexpr double kSingularPivotRatio = 1e-12;

}  // namespace greenreg
