#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenosher/dilation.hpp"
#include "greenosher/measures.hpp"
#include "greenosher/support_body.hpp"

namespace greenosher {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAtDilationPosition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Split of the circle into I1 (the smallest set of measure V(L), measure
/// h_L (h_L + h_L'') dtheta, maximizing the rho-integral) and its
/// complement I2.  Realized as a superlevel-set prefix under descending-rho
/// sort with one fractional boundary node, so the measure of I1 is V(L)
/// exactly.
struct PartitionResult {
  double a = 0.0;                // rho-value at the straddling node
  std::vector<double> weights;   // per-node membership in I1, in [0,1]
  double rho1 = 0.0;             // measure-normalized average of rho on I1
  double rho2 = 0.0;             // same on I2
  double b = 0.0;                // rho1 = V(K,L)/V(L) + b
  double measure_error = 0.0;    // |sum weights_j w_j - V(L)|
};

/// A function strictly convex on (0, +inf).  Registry entries carry
/// convexity_checked = true; user-supplied functionals are accepted with
/// the flag cleared and the report says so.
struct ConvexFunctional {
  std::string name;
  std::function<double(double)> value;
  bool convexity_checked = true;
};

/// square x^2, reciprocal 1/x, expneg e^(-x), xlogx x ln x,
/// power x^p (p > 1).  Second derivatives on (0, +inf): 2, 2/x^3, e^(-x),
/// 1/x, p(p-1) x^(p-2) -- all positive.
std::vector<ConvexFunctional> functional_registry(double power_exponent = 3.0);

ConvexFunctional make_power_functional(double p);
ConvexFunctional make_custom_functional(std::string name,
                                        std::function<double(double)> value);

struct FunctionalCheck {
  std::string name;
  double lhs = 0.0;    // (1/V(L)) int F(rho) h_L (h_L + h_L'') dtheta
  double mid = 0.0;    // F(rho1) + F(rho2)
  double rhs = 0.0;    // F(-t1) + F(-t2)
  double slack = 0.0;  // lhs - rhs
  bool convexity_checked = true;
};

struct HomothetyResult {
  bool homothetic = false;
  double residual = 0.0;  // max node deviation of the best fit
  double lambda = 0.0;
  Vec2 shift;
};

struct GreenOsherReport {
  SteinerData steiner;
  DilationCertificate certificate;
  PartitionResult partition;
  std::vector<FunctionalCheck> functionals;
  double rho1_bound = 0.0;  // rho1 - (-t2)
  double b_bound = 0.0;     // b - delta / V(L)
  bool homothetic = false;
  double residual = 0.0;
};

/// rho(theta) = (h_K + h_K'') / (h_L + h_L'').  Constant iff K and L are
/// homothetic; satisfies (1/2) int rho h_L (h_L + h_L'') dtheta = V(K,L).
GridProfile relative_curvature_radius(const SupportBody& k,
                                      const SupportBody& l,
                                      std::size_t node_count = 1024);

PartitionResult partition(const SupportBody& k, const SupportBody& l,
                          std::size_t node_count = 1024);

double lhs_functional(const SupportBody& k, const SupportBody& l,
                      const ConvexFunctional& f,
                      std::size_t node_count = 1024);

double rhs_bound(const SteinerData& steiner, const ConvexFunctional& f);

/// Least-squares fit h_K ~ lambda h_L + <c, u(theta)> over (lambda, c);
/// homothetic iff the max deviation is below 1e-8 (1 + max h_K).
HomothetyResult homothety_test(const SupportBody& k, const SupportBody& l,
                               std::size_t node_count = 1024);

/// Full verification at a dilation position.  Throws NotAtDilationPosition
/// if pointwise support-function domination fails; call
/// to_dilation_position first if unsure.
GreenOsherReport verify(const SupportBody& k, const SupportBody& l,
                        const std::vector<ConvexFunctional>& functionals,
                        std::size_t node_count = 1024);

/// Same, reusing a certificate already computed for this exact pair.
GreenOsherReport verify(const SupportBody& k, const SupportBody& l,
                        const DilationCertificate& certificate,
                        const std::vector<ConvexFunctional>& functionals,
                        std::size_t node_count = 1024);

}  // namespace greenosher
