#include "greenosher/support_body.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace greenosher {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double eval(const SupportBody& body, double theta) {
  double v = body.a0;
  for (std::size_t i = 0; i < body.cos_coeffs.size(); ++i)
    v += body.cos_coeffs[i] * std::cos((i + 1) * theta);
  for (std::size_t i = 0; i < body.sin_coeffs.size(); ++i)
    v += body.sin_coeffs[i] * std::sin((i + 1) * theta);
  return v;
}

double eval_derivative(const SupportBody& body, double theta) {
  double v = 0.0;
  for (std::size_t i = 0; i < body.cos_coeffs.size(); ++i) {
    double k = static_cast<double>(i + 1);
    v += -k * body.cos_coeffs[i] * std::sin(k * theta);
  }
  for (std::size_t i = 0; i < body.sin_coeffs.size(); ++i) {
    double k = static_cast<double>(i + 1);
    v += k * body.sin_coeffs[i] * std::cos(k * theta);
  }
  return v;
}

namespace {

// h + h'': the k-th harmonic picks up the factor 1 - k^2.
SupportBody curvature_body(const SupportBody& body) {
  SupportBody c;
  c.a0 = body.a0;
  c.cos_coeffs.resize(body.cos_coeffs.size());
  c.sin_coeffs.resize(body.sin_coeffs.size());
  for (std::size_t i = 0; i < body.cos_coeffs.size(); ++i) {
    double k = static_cast<double>(i + 1);
    c.cos_coeffs[i] = (1.0 - k * k) * body.cos_coeffs[i];
  }
  for (std::size_t i = 0; i < body.sin_coeffs.size(); ++i) {
    double k = static_cast<double>(i + 1);
    c.sin_coeffs[i] = (1.0 - k * k) * body.sin_coeffs[i];
  }
  return c;
}

// One sin/cos pair per node; the higher harmonics follow from the
// angle-addition recurrence.
GridProfile sample_fourier(const SupportBody& body, std::size_t n) {
  GridProfile p;
  p.node_count = n;
  p.values.resize(n);
  const std::size_t nc = body.cos_coeffs.size(), ns = body.sin_coeffs.size();
  const std::size_t deg = std::max(nc, ns);
  for (std::size_t j = 0; j < n; ++j) {
    double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    double c1 = std::cos(theta), s1 = std::sin(theta);
    double ck = 1.0, sk = 0.0;
    double v = body.a0;
    for (std::size_t k = 1; k <= deg; ++k) {
      double cn = ck * c1 - sk * s1;
      double sn = sk * c1 + ck * s1;
      ck = cn;
      sk = sn;
      if (k <= nc) v += body.cos_coeffs[k - 1] * ck;
      if (k <= ns) v += body.sin_coeffs[k - 1] * sk;
    }
    p.values[j] = v;
  }
  return p;
}

// d/dtheta (a cos k theta + b sin k theta) = kb cos k theta - ka sin k theta
SupportBody derivative_body(const SupportBody& body) {
  SupportBody d;
  d.a0 = 0.0;
  std::size_t deg = static_cast<std::size_t>(body.degree());
  d.cos_coeffs.assign(deg, 0.0);
  d.sin_coeffs.assign(deg, 0.0);
  for (std::size_t i = 0; i < body.sin_coeffs.size(); ++i)
    d.cos_coeffs[i] = static_cast<double>(i + 1) * body.sin_coeffs[i];
  for (std::size_t i = 0; i < body.cos_coeffs.size(); ++i)
    d.sin_coeffs[i] = -static_cast<double>(i + 1) * body.cos_coeffs[i];
  return d;
}

}  // namespace

double eval_curvature(const SupportBody& body, double theta) {
  return eval(curvature_body(body), theta);
}

GridProfile sample_support(const SupportBody& body, std::size_t n) {
  return sample_fourier(body, n);
}

GridProfile sample_derivative(const SupportBody& body, std::size_t n) {
  return sample_fourier(derivative_body(body), n);
}

GridProfile curvature_profile(const SupportBody& body, std::size_t n) {
  return sample_fourier(curvature_body(body), n);
}

SupportBody translate(const SupportBody& body, Vec2 v) {
  SupportBody out = body;
  if (out.cos_coeffs.empty()) out.cos_coeffs.resize(1, 0.0);
  if (out.sin_coeffs.empty()) out.sin_coeffs.resize(1, 0.0);
  out.cos_coeffs[0] += v.x;
  out.sin_coeffs[0] += v.y;
  return out;
}

SupportBody scale(const SupportBody& body, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("scale factor must be positive");
  SupportBody out = body;
  out.a0 *= t;
  for (double& c : out.cos_coeffs) c *= t;
  for (double& s : out.sin_coeffs) s *= t;
  return out;
}

SupportBody minkowski_sum(const SupportBody& a, const SupportBody& b) {
  SupportBody out;
  out.a0 = a.a0 + b.a0;
  out.cos_coeffs.resize(std::max(a.cos_coeffs.size(), b.cos_coeffs.size()), 0.0);
  out.sin_coeffs.resize(std::max(a.sin_coeffs.size(), b.sin_coeffs.size()), 0.0);
  for (std::size_t i = 0; i < a.cos_coeffs.size(); ++i)
    out.cos_coeffs[i] += a.cos_coeffs[i];
  for (std::size_t i = 0; i < b.cos_coeffs.size(); ++i)
    out.cos_coeffs[i] += b.cos_coeffs[i];
  for (std::size_t i = 0; i < a.sin_coeffs.size(); ++i)
    out.sin_coeffs[i] += a.sin_coeffs[i];
  for (std::size_t i = 0; i < b.sin_coeffs.size(); ++i)
    out.sin_coeffs[i] += b.sin_coeffs[i];
  return out;
}

ConvexityCheck validate(const SupportBody& body, std::size_t node_count,
                        double eps_convex) {
  std::size_t n = node_count;
  std::size_t need = 4 * static_cast<std::size_t>(body.degree());
  while (n < need) n *= 2;
  GridProfile c = curvature_profile(body, n);
  ConvexityCheck out;
  out.min_value = c.values[0];
  out.argmin_node = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (c.values[j] < out.min_value) {
      out.min_value = c.values[j];
      out.argmin_node = j;
    }
  }
  out.accepted = out.min_value >= eps_convex;
  return out;
}

void require_valid(const SupportBody& body, std::size_t node_count,
                   double eps_convex) {
  ConvexityCheck c = validate(body, node_count, eps_convex);
  if (!c.accepted) {
    std::ostringstream msg;
    msg << "body is not strictly convex: min(h + h'') = " << c.min_value
        << " at node " << c.argmin_node;
    throw ValidationError(msg.str());
  }
}

SupportBody random_body(std::uint64_t seed, int degree, double decay) {
  if (degree < 2) throw std::invalid_argument("degree must be >= 2");
  if (decay < 2.0) throw std::invalid_argument("decay must be >= 2");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  SupportBody body;
  body.a0 = 1.0;
  body.cos_coeffs.assign(degree, 0.0);
  body.sin_coeffs.assign(degree, 0.0);
  // first harmonics stay zero: canonical centering
  for (int k = 2; k <= degree; ++k) {
    double amp = 0.35 * std::pow(static_cast<double>(k), -decay);
    body.cos_coeffs[k - 1] = amp * gauss(rng);
    body.sin_coeffs[k - 1] = amp * gauss(rng);
  }

  auto grid_min = [](const SupportBody& b) {
    return validate(b, 1024, 0.0).min_value;
  };
  double m = grid_min(body);
  if (m < 0.1) {
    double f = 0.9 / (1.0 - m);
    for (;;) {
      SupportBody scaled = body;
      for (double& c : scaled.cos_coeffs) c *= f;
      for (double& s : scaled.sin_coeffs) s *= f;
      if (grid_min(scaled) >= 0.1) {
        body = scaled;
        break;
      }
      f *= 0.999;
    }
  }
  return body;
}

Vec2 boundary_point(const SupportBody& body, double theta) {
  double h = eval(body, theta);
  double hp = eval_derivative(body, theta);
  double c = std::cos(theta), s = std::sin(theta);
  return {h * c - hp * s, h * s + hp * c};
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace greenosher
