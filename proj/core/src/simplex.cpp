#include "greenosher/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

namespace greenosher {

void DenseLp::add_row(std::initializer_list<double> coeffs, double bound) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw std::invalid_argument("add_row: wrong coefficient count");
  rows.insert(rows.end(), coeffs.begin(), coeffs.end());
  rhs.push_back(bound);
}

namespace detail {

void solve_linear(int n, std::vector<double> a, std::vector<double>& rhs) {
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  const double pivot_tol = 1e-13 * std::max(1.0, scale);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (std::abs(a[piv * n + col]) < pivot_tol)
      throw SolverFailure("singular basis matrix");
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double v = rhs[r];
    for (int c = r + 1; c < n; ++c) v -= a[r * n + c] * rhs[c];
    rhs[r] = v / a[r * n + r];
  }
}

}  // namespace detail

// The dual of (max c.z : A z <= b) is (min b.y : A^T y = c, y >= 0), whose
// basis has only num_vars rows; we run a two-phase revised simplex there and
// read the primal point off the simplex multipliers at optimality.
LpSolution maximize(const DenseLp& lp) {
  const int n = lp.num_vars;
  const std::size_t m = lp.num_rows();
  if (n <= 0 || lp.objective.size() != static_cast<std::size_t>(n) ||
      lp.rows.size() != m * static_cast<std::size_t>(n))
    throw std::invalid_argument("maximize: inconsistent LP dimensions");
  if (m == 0) throw SolverFailure("unbounded: no constraints");

  // Flip equality rows so the dual right-hand side is nonnegative; phase 1
  // can then start from the artificial identity basis.
  std::vector<double> sign(n, 1.0), target(lp.objective);
  for (int i = 0; i < n; ++i)
    if (target[i] < 0.0) {
      sign[i] = -1.0;
      target[i] = -target[i];
    }

  std::vector<double> col(n);
  auto load_column = [&](std::size_t j) {
    if (j < m) {
      for (int i = 0; i < n; ++i) col[i] = sign[i] * lp.rows[j * n + i];
    } else {
      for (int i = 0; i < n; ++i) col[i] = 0.0;
      col[j - m] = 1.0;
    }
  };

  std::vector<std::size_t> basis(n);
  for (int i = 0; i < n; ++i) basis[i] = m + static_cast<std::size_t>(i);

  auto cost_of = [&](std::size_t j, int phase) -> double {
    if (phase == 1) return j >= m ? 1.0 : 0.0;
    return j >= m ? 0.0 : lp.rhs[j];
  };

  std::vector<double> bmat(static_cast<std::size_t>(n) * n);
  std::vector<double> btmat(static_cast<std::size_t>(n) * n);
  auto load_basis = [&] {
    for (int i = 0; i < n; ++i) {
      load_column(basis[i]);
      for (int r = 0; r < n; ++r) {
        bmat[r * n + i] = col[r];
        btmat[i * n + r] = col[r];
      }
    }
  };

  std::vector<double> xb(n), pi(n), dir(n), priced(n);
  auto compute_xb = [&] {
    load_basis();
    xb = target;
    detail::solve_linear(n, bmat, xb);
  };
  auto compute_pi = [&](int phase) {
    load_basis();
    for (int i = 0; i < n; ++i) pi[i] = cost_of(basis[i], phase);
    detail::solve_linear(n, btmat, pi);
  };

  const double tol = 1e-9;
  const long bland_after = 20 * static_cast<long>(m) + 500;
  const long iter_cap = 200 * static_cast<long>(m) + 5000;
  long iter = 0;

  std::vector<char> in_basis(m, 0);
  auto mark_basis = [&] {
    std::fill(in_basis.begin(), in_basis.end(), 0);
    for (int i = 0; i < n; ++i)
      if (basis[i] < m) in_basis[basis[i]] = 1;
  };

  for (int phase = 1; phase <= 2; ++phase) {
    for (;;) {
      if (++iter > iter_cap) throw SolverFailure("simplex iteration limit");
      bool bland = iter > bland_after;
      compute_pi(phase);
      for (int i = 0; i < n; ++i) priced[i] = pi[i] * sign[i];
      mark_basis();

      std::ptrdiff_t enter = -1;
      double best_reduced = -tol;
      for (std::size_t j = 0; j < m; ++j) {
        if (in_basis[j]) continue;
        double r = cost_of(j, phase);
        const double* row = &lp.rows[j * n];
        for (int i = 0; i < n; ++i) r -= priced[i] * row[i];
        if (r < best_reduced) {
          best_reduced = r;
          enter = static_cast<std::ptrdiff_t>(j);
          if (bland) break;
        } else if (bland && enter >= 0) {
          break;
        }
      }
      if (enter < 0) break;  // phase optimal

      compute_xb();
      load_column(static_cast<std::size_t>(enter));
      dir = col;
      load_basis();
      detail::solve_linear(n, bmat, dir);

      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < n; ++i) {
        if (dir[i] <= 1e-11) continue;
        double num = xb[i] > 0.0 ? xb[i] : 0.0;
        double ratio = num / dir[i];
        if (leave < 0 || ratio < best_ratio - 1e-14 ||
            (ratio < best_ratio + 1e-14 && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) throw SolverFailure("infeasible primal (dual unbounded)");
      basis[leave] = static_cast<std::size_t>(enter);
    }

    if (phase == 1) {
      compute_xb();
      double infeas = 0.0;
      for (int i = 0; i < n; ++i)
        if (basis[i] >= m) infeas += std::abs(xb[i]);
      if (infeas > 1e-7)
        throw SolverFailure("unbounded or inconsistent primal objective");

      // Pivot any zero-valued artificial out of the basis.
      for (int i = 0; i < n; ++i) {
        if (basis[i] < m) continue;
        load_basis();
        std::vector<double> w(n, 0.0);  // row i of B^{-1}: solve B^T w = e_i
        w[i] = 1.0;
        detail::solve_linear(n, btmat, w);
        mark_basis();
        // replace with the column of largest pivot so the new basis stays
        // well conditioned
        std::ptrdiff_t repl = -1;
        double best = 1e-7;
        for (std::size_t j = 0; j < m; ++j) {
          if (in_basis[j]) continue;
          double v = 0.0;
          for (int r = 0; r < n; ++r) v += w[r] * sign[r] * lp.rows[j * n + r];
          if (std::abs(v) > best) {
            best = std::abs(v);
            repl = static_cast<std::ptrdiff_t>(j);
          }
        }
        if (repl < 0)
          throw SolverFailure("degenerate equality system in dual");
        basis[i] = static_cast<std::size_t>(repl);
      }
    }
  }

  compute_pi(2);
  LpSolution sol;
  sol.point.resize(n);
  for (int i = 0; i < n; ++i) sol.point[i] = sign[i] * pi[i];
  sol.value = 0.0;
  for (int i = 0; i < n; ++i) sol.value += lp.objective[i] * sol.point[i];

  for (std::size_t j = 0; j < m; ++j) {
    double v = 0.0;
    for (int i = 0; i < n; ++i) v += lp.rows[j * n + i] * sol.point[i];
    if (v > lp.rhs[j] + 1e-5)
      throw SolverFailure("solution fails feasibility check");
  }
  return sol;
}

}  // namespace greenosher
