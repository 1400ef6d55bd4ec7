#include "greenosher/dilation.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "greenosher/simplex.hpp"

namespace greenosher {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFineTol = 1e-9;   // inter-node violation accepted as-is
constexpr double kSlack = 1e-9;     // roundoff relaxation of feasibility
constexpr double kInfeasTol = 1e-6;
constexpr int kMaxRefine = 2;

RadiusResult solve_radius(const SupportBody& k, const SupportBody& l,
                          std::size_t n, bool inner) {
  for (int pass = 0;; ++pass) {
    DenseLp lp;
    lp.num_vars = 3;  // (t, x1, x2)
    lp.objective = {inner ? 1.0 : -1.0, 0.0, 0.0};
    lp.rows.reserve(3 * n);
    GridProfile hk = sample_support(k, n), hl = sample_support(l, n);
    for (std::size_t j = 0; j < n; ++j) {
      double theta = kTwoPi * j / n;
      double c = std::cos(theta), s = std::sin(theta);
      if (inner) {
        // t h_L + <x, u> <= h_K
        lp.add_row({hl.values[j], c, s}, hk.values[j]);
      } else {
        // h_K <= t h_L + <x, u>
        lp.add_row({-hl.values[j], -c, -s}, -hk.values[j]);
      }
    }
    LpSolution sol = maximize(lp);
    double t = sol.point[0];
    Vec2 x{sol.point[1], sol.point[2]};

    // re-verify between nodes before trusting the optimum
    std::size_t fine = 4 * n;
    GridProfile fk = sample_support(k, fine), fl = sample_support(l, fine);
    double viol = 0.0;
    for (std::size_t j = 0; j < fine; ++j) {
      double theta = kTwoPi * j / fine;
      double g = x.x * std::cos(theta) + x.y * std::sin(theta);
      double v = inner ? (t * fl.values[j] + g - fk.values[j])
                       : (fk.values[j] - t * fl.values[j] - g);
      if (v > viol) viol = v;
    }
    if (viol <= kFineTol || pass >= kMaxRefine) return {t, x};
    n = fine;
  }
}

}  // namespace

const char* to_string(OriginClass c) {
  switch (c) {
    case OriginClass::Interior: return "interior";
    case OriginClass::Tangent: return "tangent";
    default: return "invalid";
  }
}

RadiusResult inradius(const SupportBody& k, const SupportBody& l,
                      std::size_t n) {
  return solve_radius(k, l, n, true);
}

RadiusResult outradius(const SupportBody& k, const SupportBody& l,
                       std::size_t n) {
  return solve_radius(k, l, n, false);
}

OriginClass classify_origin(const SupportBody& k, const SupportBody& l,
                            std::size_t n, double tol_boundary) {
  GridProfile hk = sample_support(k, n);
  GridProfile hl = sample_support(l, n);
  std::size_t arg_k = 0, arg_l = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (hk.values[j] < hk.values[arg_k]) arg_k = j;
    if (hl.values[j] < hl.values[arg_l]) arg_l = j;
  }
  double min_k = hk.values[arg_k], min_l = hl.values[arg_l];
  if (min_k > tol_boundary && min_l > tol_boundary) return OriginClass::Interior;
  if (std::abs(min_k) <= tol_boundary && std::abs(min_l) <= tol_boundary) {
    std::size_t d = arg_k > arg_l ? arg_k - arg_l : arg_l - arg_k;
    if (d <= 1 || d >= n - 1) return OriginClass::Tangent;
  }
  return OriginClass::Invalid;
}

namespace {

// Feasibility over translations (uK, vL), posed as a max-margin LP in
// z = (ux, uy, vx, vy, s), followed by an L1-minimal-displacement polish.
// Throws SolverFailure on a numerically degenerate grid; the caller retries
// on a slightly perturbed node count.
std::array<double, 4> solve_translations(const SupportBody& k,
                                         const SupportBody& l, double r,
                                         double R, std::size_t n,
                                         double infeas_tol) {
  DenseLp lp;
  lp.num_vars = 5;
  lp.objective = {0.0, 0.0, 0.0, 0.0, 1.0};
  std::vector<double> fixed_rhs;  // rhs without the roundoff slack
  std::vector<double> rows4;      // rows restricted to (ux, uy, vx, vy)
  auto add = [&](double ux, double uy, double vx, double vy, double b) {
    lp.add_row({ux, uy, vx, vy, 1.0}, b + kSlack);
    rows4.insert(rows4.end(), {ux, uy, vx, vy});
    fixed_rhs.push_back(b + kSlack);
  };
  GridProfile hks = sample_support(k, n), hls = sample_support(l, n);
  for (std::size_t j = 0; j < n; ++j) {
    double theta = kTwoPi * j / n;
    double hk = hks.values[j], hl = hls.values[j];
    double c = std::cos(theta), s = std::sin(theta);
    // r (h_L + <vL, u>) <= h_K + <uK, u>
    add(-c, -s, r * c, r * s, hk - r * hl);
    // h_K + <uK, u> <= R (h_L + <vL, u>)
    add(c, s, -R * c, -R * s, R * hl - hk);
    // origin in the translated K and L
    add(-c, -s, 0.0, 0.0, hk);
    add(0.0, 0.0, -c, -s, hl);
  }

  LpSolution sol = maximize(lp);
  if (sol.value < -infeas_tol) {
    std::ostringstream msg;
    msg << "no translations reach a dilation position (margin " << sol.value
        << "); numerical failure";
    throw Infeasible(msg.str());
  }

  // polish: among the feasible translations pick one of least total
  // displacement (L1, via the usual positive/negative split), so an
  // already-centered pair stays put
  double allow = sol.value < 0.0 ? -sol.value : 0.0;
  const std::size_t rows = fixed_rhs.size();
  DenseLp polish;
  polish.num_vars = 8;  // z_c = p_c - q_c with p, q >= 0
  polish.objective.assign(8, -1.0);
  polish.rows.reserve(8 * (rows + 8));
  polish.rhs.reserve(rows + 8);
  for (std::size_t i = 0; i < rows; ++i) {
    const double* a = &rows4[4 * i];
    polish.add_row({a[0], a[1], a[2], a[3], -a[0], -a[1], -a[2], -a[3]},
                   fixed_rhs[i] + allow);
  }
  for (int i = 0; i < 8; ++i) {
    for (int q = 0; q < 8; ++q) polish.rows.push_back(q == i ? -1.0 : 0.0);
    polish.rhs.push_back(0.0);
  }
  LpSolution fix = maximize(polish);
  return {fix.point[0] - fix.point[4], fix.point[1] - fix.point[5],
          fix.point[2] - fix.point[6], fix.point[3] - fix.point[7]};
}

}  // namespace

DilationPlacement to_dilation_position(const SupportBody& k,
                                       const SupportBody& l,
                                       std::size_t n) {
  RadiusResult in = inradius(k, l, n);
  RadiusResult out = outradius(k, l, n);
  const double r = in.value, R = out.value;

  std::array<double, 4> z{};
  for (std::size_t attempt = 0;; ++attempt) {
    try {
      z = solve_translations(k, l, r, R, n + 37 * attempt, kInfeasTol);
      break;
    } catch (const SolverFailure&) {
      if (attempt >= 2) throw;
    }
  }

  Vec2 u_k{z[0], z[1]}, v_l{z[2], z[3]};
  DilationPlacement placed;
  placed.k = translate(k, u_k);
  placed.l = translate(l, v_l);

  DilationCertificate cert;
  cert.r = r;
  cert.R = R;
  cert.x_in = {in.witness.x + u_k.x - r * v_l.x,
               in.witness.y + u_k.y - r * v_l.y};
  cert.x_out = {out.witness.x + u_k.x - R * v_l.x,
                out.witness.y + u_k.y - R * v_l.y};

  double worst = 0.0;
  GridProfile hks = sample_support(placed.k, n), hls = sample_support(placed.l, n);
  for (std::size_t j = 0; j < n; ++j) {
    double hk = hks.values[j], hl = hls.values[j];
    double v1 = r * hl - hk;
    double v2 = hk - R * hl;
    double v3 = -hk;
    double v4 = -hl;
    for (double v : {v1, v2, v3, v4})
      if (v > worst) worst = v;
  }
  cert.at_dilation_position = worst <= kInfeasTol;
  cert.origin_class = classify_origin(placed.k, placed.l, n);
  placed.certificate = cert;
  return placed;
}

}  // namespace greenosher
