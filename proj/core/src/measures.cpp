#include "greenosher/measures.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace greenosher {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double integrate_periodic(const GridProfile& profile) {
  if (profile.values.empty())
    throw std::invalid_argument("integrate_periodic: empty profile");
  double sum = 0.0;
  for (double v : profile.values) sum += v;
  return kTwoPi / static_cast<double>(profile.node_count) * sum;
}

std::size_t quadrature_nodes(const SupportBody& k, const SupportBody& l) {
  std::size_t need = 8 * static_cast<std::size_t>(k.degree() + l.degree());
  std::size_t n = 1024;
  while (n < need) n *= 2;
  return n;
}

namespace {

// (1/2) int h_K (h_L + h_L'') dtheta, exact for these trigonometric
// polynomials at the chosen node count.
double mixed_area_curvature_form(const SupportBody& k, const SupportBody& l,
                                 std::size_t n) {
  GridProfile hk = sample_support(k, n);
  GridProfile cl = curvature_profile(l, n);
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) sum += hk.values[j] * cl.values[j];
  return 0.5 * kTwoPi / static_cast<double>(n) * sum;
}

double mixed_area_gradient_form(const SupportBody& k, const SupportBody& l,
                                std::size_t n) {
  GridProfile hk = sample_support(k, n);
  GridProfile hl = sample_support(l, n);
  GridProfile dk = sample_derivative(k, n);
  GridProfile dl = sample_derivative(l, n);
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    sum += hk.values[j] * hl.values[j] - dk.values[j] * dl.values[j];
  return 0.5 * kTwoPi / static_cast<double>(n) * sum;
}

}  // namespace

double area(const SupportBody& k) {
  return mixed_area_curvature_form(k, k, quadrature_nodes(k, k));
}

double mixed_area(const SupportBody& k, const SupportBody& l) {
  std::size_t n = quadrature_nodes(k, l);
  double v = mixed_area_curvature_form(k, l, n);
  double alt = mixed_area_gradient_form(k, l, n);
  if (std::abs(v - alt) > 1e-10 * (1.0 + std::abs(v))) {
    std::ostringstream msg;
    msg << "mixed-area forms disagree: " << v << " vs " << alt;
    throw std::logic_error(msg.str());
  }
  return v;
}

SteinerData steiner_data(const SupportBody& k, const SupportBody& l) {
  SteinerData sd;
  sd.vK = area(k);
  sd.vL = area(l);
  sd.vKL = mixed_area(k, l);
  double radicand = sd.vKL * sd.vKL - sd.vK * sd.vL;
  if (radicand < -1e-12) {
    std::ostringstream msg;
    msg << "V(K,L)^2 - V(K)V(L) = " << radicand
        << " < -1e-12; Minkowski inequality violated";
    throw NegativeDiscriminant(msg.str());
  }
  sd.delta = std::sqrt(radicand > 0.0 ? radicand : 0.0);
  sd.t1 = (-sd.vKL + sd.delta) / sd.vL;
  sd.t2 = (-sd.vKL - sd.delta) / sd.vL;
  return sd;
}

double steiner_eval(const SupportBody& k, const SupportBody& l, double t) {
  return area(k) + 2.0 * mixed_area(k, l) * t + area(l) * t * t;
}

}  // namespace greenosher
