#include "greenreg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "greenreg/errors.hpp"

namespace greenreg {

void QuadratureSpec::validate() const {
    if (panel_count < 2 || panel_count % 2 != 0) {
        throw ValidationError("panel_count must be even and >= 2, got " +
                              std::to_string(panel_count));
    }
    for (std::size_t i = 0; i < split_points.size(); ++i) {
        const double p = split_points[i];
        if (!(p > 0.0 && p < 1.0)) {
            throw ValidationError("split point outside (0,1): " + std::to_string(p));
        }
        if (i > 0 && !(split_points[i - 1] < p)) {
            throw ValidationError("split points must be strictly increasing");
        }
    }
}

QuadratureSpec QuadratureSpec::with_splits(std::initializer_list<double> points) const {
    QuadratureSpec out = *this;
    for (double p : points) {
        if (p > 0.0 && p < 1.0) out.split_points.push_back(p);
    }
    std::sort(out.split_points.begin(), out.split_points.end());
    out.split_points.erase(std::unique(out.split_points.begin(), out.split_points.end()),
                           out.split_points.end());
    return out;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw ValidationError("matrix entry count does not match its shape");
    }
    for (double v : entries_) {
        if (!std::isfinite(v)) throw ValidationError("matrix entries must be finite");
    }
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ValidationError("ragged matrix initializer");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::column(std::span<const double> values) {
    return DenseMatrix(values.size(), 1, std::vector<double>(values.begin(), values.end()));
}

std::vector<double> DenseMatrix::col(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

double DenseMatrix::norm_inf() const {
    double best = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double sum = 0.0;
        for (double v : row(r)) sum += std::abs(v);
        best = std::max(best, sum);
    }
    return best;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw ValidationError("matrix product shape mismatch");
    DenseMatrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const double l = lhs(i, k);
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += l * rhs(k, j);
        }
    }
    return out;
}

DenseMatrix operator-(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
        throw ValidationError("matrix difference shape mismatch");
    }
    DenseMatrix out = lhs;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

namespace {

double simpson_piece(const Integrand& f, double lo, double hi, int panels) {
    const double h = (hi - lo) / panels;
    auto eval = [&](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "integrand is not finite at x = " << x;
            throw EvaluationError(x, msg.str());
        }
        return v;
    };
    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < panels; ++i) {
        // Nodes are computed from lo directly so the last node is exactly hi.
        const double x = lo + i * h;
        (i % 2 == 1 ? odd : even) += eval(x);
    }
    return h / 3.0 * (eval(lo) + 4.0 * odd + 2.0 * even + eval(hi));
}

}  // namespace

double integrate(const Integrand& f, double lo, double hi, const QuadratureSpec& spec) {
    spec.validate();
    if (!(lo < hi)) throw DomainError("integration bounds must satisfy lo < hi");

    double total = 0.0;
    double left = lo;
    for (double p : spec.split_points) {
        if (p <= lo || p >= hi) continue;
        total += simpson_piece(f, left, p, spec.panel_count);
        left = p;
    }
    total += simpson_piece(f, left, hi, spec.panel_count);
    return total;
}

DenseMatrix solve_linear(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw ValidationError("solve_linear: matrix is not square");
    if (b.rows() != n) throw ValidationError("solve_linear: right-hand side row count mismatch");

    const std::size_t k = b.cols();
    const double threshold = kSingularPivotRatio * a.norm_inf();
    DenseMatrix lu = a;
    DenseMatrix x = b;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
        }
        if (!(std::abs(lu(pivot, col)) >= threshold) || lu(pivot, col) == 0.0) {
            throw SingularMatrixError(col, "singular matrix: pivot " + std::to_string(col) +
                                               " is below threshold");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu(col, c), lu(pivot, c));
            for (std::size_t c = 0; c < k; ++c) std::swap(x(col, c), x(pivot, c));
        }
        const double diag = lu(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = lu(r, col) / diag;
            if (factor == 0.0) continue;
            lu(r, col) = factor;
            for (std::size_t c = col + 1; c < n; ++c) lu(r, c) -= factor * lu(col, c);
            for (std::size_t c = 0; c < k; ++c) x(r, c) -= factor * x(col, c);
        }
    }

    // Back substitution on the upper triangle.
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t c = 0; c < k; ++c) {
            double sum = x(ii, c);
            for (std::size_t j = ii + 1; j < n; ++j) sum -= lu(ii, j) * x(j, c);
            x(ii, c) = sum / lu(ii, ii);
        }
    }
    return x;
}

}  // namespace greenreg
