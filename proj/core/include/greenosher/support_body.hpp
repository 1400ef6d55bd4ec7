#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace greenosher {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A smooth strictly convex planar body, encoded by the truncated Fourier
/// series of its support function
///   h(theta) = a0 + sum_k (cos_coeffs[k-1] cos(k theta) + sin_coeffs[k-1] sin(k theta)).
/// Immutable by convention: every operation below returns a new body.
struct SupportBody {
  double a0 = 0.0;
  std::vector<double> cos_coeffs;  // harmonic k = index + 1
  std::vector<double> sin_coeffs;

  int degree() const {
    std::size_t d = cos_coeffs.size() > sin_coeffs.size() ? cos_coeffs.size()
                                                          : sin_coeffs.size();
    return d < 1 ? 1 : static_cast<int>(d);
  }

  static SupportBody disk(double radius) { return SupportBody{radius, {}, {}}; }
};

/// Uniform samples of a 2pi-periodic function at theta_j = 2 pi j / N.
struct GridProfile {
  std::size_t node_count = 0;
  std::vector<double> values;
};

struct ConvexityCheck {
  bool accepted = false;
  double min_value = 0.0;
  std::size_t argmin_node = 0;
};

double eval(const SupportBody& body, double theta);
double eval_derivative(const SupportBody& body, double theta);
double eval_curvature(const SupportBody& body, double theta);  // h + h''

GridProfile sample_support(const SupportBody& body, std::size_t node_count);
GridProfile sample_derivative(const SupportBody& body, std::size_t node_count);

/// Samples of h + h''.  Exact: the k-th harmonic is scaled by 1 - k^2.
GridProfile curvature_profile(const SupportBody& body, std::size_t node_count);

SupportBody translate(const SupportBody& body, Vec2 v);
SupportBody scale(const SupportBody& body, double t);
SupportBody minkowski_sum(const SupportBody& a, const SupportBody& b);

/// Accepts iff min over the grid of (h + h'') >= eps_convex.
ConvexityCheck validate(const SupportBody& body, std::size_t node_count = 1024,
                        double eps_convex = 1e-8);

/// Throws ValidationError (with the violating node) if validate rejects.
void require_valid(const SupportBody& body, std::size_t node_count = 1024,
                   double eps_convex = 1e-8);

/// Deterministic random body: a0 = 1, zero first harmonics, harmonics
/// k = 2..degree drawn with amplitude scale k^(-decay), then rescaled by a
/// single factor so that min(h + h'') >= 0.1.
SupportBody random_body(std::uint64_t seed, int degree, double decay);

/// Boundary point with outward normal (cos theta, sin theta):
///   x(theta) = h(theta) u(theta) + h'(theta) u'(theta).
Vec2 boundary_point(const SupportBody& body, double theta);

/// SplitMix64 finalizer; used to derive independent seed streams.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace greenosher
