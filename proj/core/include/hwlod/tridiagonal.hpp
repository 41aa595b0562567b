#pragma once

#include <span>
#include <string>
#include <vector>

namespace hwlod {

/// One sweep's linear system. Row i couples to row i-1 through sub[i-1] and
/// to row i+1 through super[i]. Rows listed in dirichlet_rows are identity
/// rows (diag 1, off-diagonals 0) carrying boundary data in rhs.
struct TridiagonalSystem {
    std::vector<double> sub;    ///< size n-1, sub[i-1] multiplies u_{i-1} in row i
    std::vector<double> diag;   ///< size n
    std::vector<double> super;  ///< size n-1, super[i] multiplies u_{i+1} in row i
    std::vector<double> rhs;    ///< size n
    std::vector<int> dirichlet_rows;

    std::size_t size() const { return diag.size(); }
};

/// Thomas elimination. Throws SingularSystemError when a pivot collapses.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

struct SingularSystemError : std::runtime_error {
    explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// Reusable forward-elimination factors of a tridiagonal matrix. The sweep
/// matrices do not change across time steps, so factoring once and
/// re-running only the rhs pass saves most of the per-step work.
class FactoredTridiag {
public:
    FactoredTridiag() = default;
    explicit FactoredTridiag(const TridiagonalSystem& sys);

    void solve(std::span<const double> rhs, std::span<double> out) const;
    std::size_t size() const { return pivot_inv_.size(); }

private:
    std::vector<double> sub_;
    std::vector<double> super_scaled_;  ///< c'_i = super_i / pivot_i
    std::vector<double> pivot_inv_;
};

/// Outcome of the sign/dominance verification after Dirichlet reduction.
struct MMatrixReport {
    bool is_m_matrix_after_reduction = false;
    std::vector<int> offending_rows;  ///< original row indices, empty on pass
    std::string detail;               ///< description of the first violation
};

/// Verifies that the system is (reducible to) an M-matrix: leading/trailing
/// Dirichlet rows are expelled; if the first remaining row still couples
/// back with a positive coefficient it is folded into its successor. The
/// reduced matrix must then have positive diagonal, nonpositive
/// off-diagonals and weak diagonal dominance, strict in at least one row.
/// Comparisons use a 1e-12 tolerance scaled by each row's magnitude.
MMatrixReport check_m_matrix(const TridiagonalSystem& sys);

}  // namespace hwlod
