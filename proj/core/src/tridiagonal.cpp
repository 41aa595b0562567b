#include "hwlod/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hwlod {

namespace {

constexpr double kPivotFloor = 1e-300;
constexpr double kDominanceTol = 1e-12;

void check_shape(const TridiagonalSystem& sys) {
    const std::size_t n = sys.diag.size();
    if (n == 0) throw std::invalid_argument("TridiagonalSystem: empty diagonal");
    if (sys.sub.size() + 1 != n || sys.super.size() + 1 != n || sys.rhs.size() != n)
        throw std::invalid_argument("TridiagonalSystem: inconsistent array lengths");
}

}  // namespace

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    check_shape(sys);
    const std::size_t n = sys.size();
    std::vector<double> cp(n - 1), dp(n);
    double pivot = sys.diag[0];
    if (std::abs(pivot) < kPivotFloor) throw SingularSystemError("thomas_solve: zero pivot in row 0");
    if (n > 1) cp[0] = sys.super[0] / pivot;
    dp[0] = sys.rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.sub[i - 1] * cp[i - 1];
        if (std::abs(pivot) < kPivotFloor)
            throw SingularSystemError("thomas_solve: zero pivot in row " + std::to_string(i));
        if (i < n - 1) cp[i] = sys.super[i] / pivot;
        dp[i] = (sys.rhs[i] - sys.sub[i - 1] * dp[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) dp[i] -= cp[i] * dp[i + 1];
    return dp;
}

FactoredTridiag::FactoredTridiag(const TridiagonalSystem& sys) {
    check_shape(sys);
    const std::size_t n = sys.size();
    sub_ = sys.sub;
    super_scaled_.resize(n - 1);
    pivot_inv_.resize(n);
    double pivot = sys.diag[0];
    if (std::abs(pivot) < kPivotFloor) throw SingularSystemError("FactoredTridiag: zero pivot in row 0");
    pivot_inv_[0] = 1.0 / pivot;
    if (n > 1) super_scaled_[0] = sys.super[0] * pivot_inv_[0];
    for (std::size_t i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.sub[i - 1] * super_scaled_[i - 1];
        if (std::abs(pivot) < kPivotFloor)
            throw SingularSystemError("FactoredTridiag: zero pivot in row " + std::to_string(i));
        pivot_inv_[i] = 1.0 / pivot;
        if (i < n - 1) super_scaled_[i] = sys.super[i] * pivot_inv_[i];
    }
}

void FactoredTridiag::solve(std::span<const double> rhs, std::span<double> out) const {
    const std::size_t n = pivot_inv_.size();
    if (rhs.size() != n || out.size() != n)
        throw std::invalid_argument("FactoredTridiag::solve: size mismatch");
    out[0] = rhs[0] * pivot_inv_[0];
    for (std::size_t i = 1; i < n; ++i) out[i] = (rhs[i] - sub_[i - 1] * out[i - 1]) * pivot_inv_[i];
    for (std::size_t i = n - 1; i-- > 0;) out[i] -= super_scaled_[i] * out[i + 1];
}

MMatrixReport check_m_matrix(const TridiagonalSystem& sys) {
    check_shape(sys);
    const int n = static_cast<int>(sys.size());
    auto is_dirichlet = [&](int row) {
        return std::find(sys.dirichlet_rows.begin(), sys.dirichlet_rows.end(), row) != sys.dirichlet_rows.end();
    };

    int first = 0;
    while (first < n && is_dirichlet(first)) ++first;
    int last = n - 1;
    while (last >= first && is_dirichlet(last)) --last;

    MMatrixReport report;
    if (first > last) {  // purely Dirichlet system
        report.is_m_matrix_after_reduction = true;
        return report;
    }

    // Working copies of the reduced band. Couplings into expelled Dirichlet
    // rows move to the load vector, so they vanish from the matrix.
    std::vector<double> lo(sys.sub.begin(), sys.sub.end());
    std::vector<double> di(sys.diag.begin(), sys.diag.end());
    std::vector<double> hi(sys.super.begin(), sys.super.end());
    auto sub_of = [&](int row) -> double { return row > first ? lo[static_cast<std::size_t>(row - 1)] : 0.0; };
    auto super_of = [&](int row) -> double { return row < last ? hi[static_cast<std::size_t>(row)] : 0.0; };

    auto fail = [&](int row, const std::string& why) {
        report.is_m_matrix_after_reduction = false;
        report.offending_rows.push_back(row);
        if (report.detail.empty()) report.detail = "row " + std::to_string(row) + ": " + why;
    };

    // The first retained row may couple back into the expelled boundary row
    // with a positive coefficient. Fold it into its successor, which then
    // loses its sub-diagonal; the fold shifts the successor's diagonal by
    // -sub*super/diag of the folded row.
    if (first > 0 && first < last && sys.sub[static_cast<std::size_t>(first - 1)] > 0.0) {
        const double pivot = di[static_cast<std::size_t>(first)];
        if (!(pivot > 0.0)) {
            fail(first, "nonpositive diagonal in folded row");
            return report;
        }
        if (super_of(first) > kDominanceTol * std::abs(pivot)) {
            fail(first, "positive super-diagonal in folded row");
            return report;
        }
        di[static_cast<std::size_t>(first + 1)] -=
            lo[static_cast<std::size_t>(first)] * hi[static_cast<std::size_t>(first)] / pivot;
        lo[static_cast<std::size_t>(first)] = 0.0;
        ++first;
        if (first > last) {
            report.is_m_matrix_after_reduction = true;
            return report;
        }
    }

    bool any_strict = false;
    for (int row = first; row <= last; ++row) {
        const double s = sub_of(row);
        const double d = di[static_cast<std::size_t>(row)];
        const double p = super_of(row);
        const double scale = std::max({std::abs(s), std::abs(d), std::abs(p), 1e-30});
        const double tol = kDominanceTol * scale;
        if (!(d > tol)) fail(row, "diagonal not positive");
        if (s > tol) fail(row, "positive sub-diagonal");
        if (p > tol) fail(row, "positive super-diagonal");
        const double row_sum = d + s + p;  // = d - |s| - |p| for a sign-correct row
        if (row_sum < -tol) fail(row, "diagonal dominance violated");
        if (row_sum > tol) any_strict = true;
    }
    if (report.offending_rows.empty() && !any_strict) fail(first, "no strictly dominant row");
    report.is_m_matrix_after_reduction = report.offending_rows.empty();
    return report;
}

}  // namespace hwlod
