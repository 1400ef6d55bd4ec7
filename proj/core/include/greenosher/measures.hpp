#pragma once

#include <stdexcept>

#include "greenosher/support_body.hpp"

namespace greenosher {

/// Signals V(K,L)^2 - V(K)V(L) < -1e-12, which the Minkowski inequality
/// forbids for valid bodies; always indicates a numerics bug upstream.
struct NegativeDiscriminant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Areas, mixed area, and the two roots t1 >= t2 (both negative) of the
/// relative Steiner polynomial V(K) + 2 V(K,L) t + V(L) t^2.
struct SteinerData {
  double vK = 0.0;
  double vL = 0.0;
  double vKL = 0.0;
  double delta = 0.0;  // sqrt(V(K,L)^2 - V(K)V(L)), clamped at tiny negatives
  double t1 = 0.0;
  double t2 = 0.0;
};

/// Uniform trapezoidal rule on [0, 2pi); exact for trigonometric
/// polynomials of degree < N/2.
double integrate_periodic(const GridProfile& profile);

/// Node count guaranteeing exact integration of every product of
/// degree-limited trigonometric polynomials used here:
/// max(1024, next power of two >= 8 (deg K + deg L)).
std::size_t quadrature_nodes(const SupportBody& k, const SupportBody& l);

double area(const SupportBody& k);

/// Computed as (1/2) int h_K (h_L + h_L'') dtheta and cross-checked against
/// (1/2) int (h_K h_L - h_K' h_L') dtheta within 1e-10.
double mixed_area(const SupportBody& k, const SupportBody& l);

SteinerData steiner_data(const SupportBody& k, const SupportBody& l);

/// V(K) + 2 V(K,L) t + V(L) t^2, evaluated as a polynomial for any real t.
double steiner_eval(const SupportBody& k, const SupportBody& l, double t);

}  // namespace greenosher
