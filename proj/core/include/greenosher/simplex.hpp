#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace greenosher {

struct SolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// maximize objective . z  subject to  row_i . z <= rhs_i,  z free.
/// Dense, few variables (<= ~8), many rows.
struct DenseLp {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<double> rows;  // row-major, num_vars entries per row
  std::vector<double> rhs;

  std::size_t num_rows() const { return rhs.size(); }
  void add_row(std::initializer_list<double> coeffs, double bound);
};

struct LpSolution {
  double value = 0.0;
  std::vector<double> point;
};

/// Two-phase revised simplex on the dual (the dual has num_vars equality
/// rows and one nonnegative variable per primal constraint, so the basis
/// stays tiny).  Throws SolverFailure when the problem is infeasible,
/// unbounded, or the iteration cap is hit.
LpSolution maximize(const DenseLp& lp);

namespace detail {
/// Gaussian elimination with partial pivoting; a is n x n row-major,
/// overwritten.  rhs is overwritten with the solution.
void solve_linear(int n, std::vector<double> a, std::vector<double>& rhs);
}  // namespace detail

}  // namespace greenosher
