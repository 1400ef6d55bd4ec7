#include "greenosher/greenosher.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "greenosher/simplex.hpp"

namespace greenosher {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t effective_nodes(const SupportBody& k, const SupportBody& l,
                            std::size_t requested) {
  std::size_t n = quadrature_nodes(k, l);
  return requested > n ? requested : n;
}

}  // namespace

GridProfile relative_curvature_radius(const SupportBody& k,
                                      const SupportBody& l,
                                      std::size_t node_count) {
  std::size_t n = effective_nodes(k, l, node_count);
  GridProfile ck = curvature_profile(k, n);
  GridProfile cl = curvature_profile(l, n);
  GridProfile rho;
  rho.node_count = n;
  rho.values.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    rho.values[j] = ck.values[j] / cl.values[j];
  return rho;
}

PartitionResult partition(const SupportBody& k, const SupportBody& l,
                          std::size_t node_count) {
  std::size_t n = effective_nodes(k, l, node_count);
  GridProfile rho = relative_curvature_radius(k, l, n);
  GridProfile hl = sample_support(l, n);
  GridProfile cl = curvature_profile(l, n);

  std::vector<double> w(n);
  double step = kTwoPi / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j)
    w[j] = step * hl.values[j] * cl.values[j];

  const double v_l = area(l);
  const double v_kl = mixed_area(k, l);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rho.values[a] != rho.values[b]) return rho.values[a] > rho.values[b];
    return a < b;
  });

  PartitionResult out;
  out.weights.assign(n, 0.0);
  double cum = 0.0;
  bool straddled = false;
  out.a = rho.values[order.back()];
  for (std::size_t idx : order) {
    if (straddled) break;
    if (cum + w[idx] <= v_l) {
      out.weights[idx] = 1.0;
      cum += w[idx];
      out.a = rho.values[idx];
    } else {
      out.weights[idx] = w[idx] > 0.0 ? (v_l - cum) / w[idx] : 0.0;
      cum = v_l;
      out.a = rho.values[idx];
      straddled = true;
    }
  }

  double sum1 = 0.0, sum2 = 0.0, measure1 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sum1 += out.weights[j] * rho.values[j] * w[j];
    sum2 += (1.0 - out.weights[j]) * rho.values[j] * w[j];
    measure1 += out.weights[j] * w[j];
  }
  out.rho1 = sum1 / v_l;
  out.rho2 = sum2 / v_l;
  out.b = out.rho1 - v_kl / v_l;
  out.measure_error = std::abs(measure1 - v_l);
  return out;
}

std::vector<ConvexFunctional> functional_registry(double power_exponent) {
  std::vector<ConvexFunctional> reg;
  reg.push_back({"square", [](double x) { return x * x; }, true});
  reg.push_back({"reciprocal", [](double x) { return 1.0 / x; }, true});
  reg.push_back({"expneg", [](double x) { return std::exp(-x); }, true});
  reg.push_back({"xlogx", [](double x) { return x * std::log(x); }, true});
  reg.push_back(make_power_functional(power_exponent));
  return reg;
}

ConvexFunctional make_power_functional(double p) {
  if (!(p > 1.0))
    throw std::invalid_argument("power exponent must exceed 1");
  return {"power", [p](double x) { return std::pow(x, p); }, true};
}

ConvexFunctional make_custom_functional(std::string name,
                                        std::function<double(double)> value) {
  return {std::move(name), std::move(value), false};
}

double lhs_functional(const SupportBody& k, const SupportBody& l,
                      const ConvexFunctional& f, std::size_t node_count) {
  std::size_t n = effective_nodes(k, l, node_count);
  GridProfile rho = relative_curvature_radius(k, l, n);
  GridProfile hl = sample_support(l, n);
  GridProfile cl = curvature_profile(l, n);
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(rho.values[j] > 0.0))
      throw DomainError("relative curvature radius is not positive");
    sum += f.value(rho.values[j]) * hl.values[j] * cl.values[j];
  }
  return kTwoPi / static_cast<double>(n) * sum / area(l);
}

double rhs_bound(const SteinerData& steiner, const ConvexFunctional& f) {
  if (!(-steiner.t1 > 0.0))
    throw DomainError("-t1 must be positive for a valid pair");
  return f.value(-steiner.t1) + f.value(-steiner.t2);
}

HomothetyResult homothety_test(const SupportBody& k, const SupportBody& l,
                               std::size_t node_count) {
  std::size_t n = effective_nodes(k, l, node_count);
  GridProfile hk = sample_support(k, n);
  GridProfile hl = sample_support(l, n);

  // normal equations for h_K ~ lambda h_L + c1 cos + c2 sin
  std::vector<double> m(9, 0.0), rhs(3, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double theta = kTwoPi * j / n;
    double basis[3] = {hl.values[j], std::cos(theta), std::sin(theta)};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) m[a * 3 + b] += basis[a] * basis[b];
      rhs[a] += basis[a] * hk.values[j];
    }
  }
  detail::solve_linear(3, m, rhs);

  HomothetyResult out;
  out.lambda = rhs[0];
  out.shift = {rhs[1], rhs[2]};
  double max_h = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double theta = kTwoPi * j / n;
    double fit = rhs[0] * hl.values[j] + rhs[1] * std::cos(theta) +
                 rhs[2] * std::sin(theta);
    double dev = std::abs(hk.values[j] - fit);
    if (dev > out.residual) out.residual = dev;
    if (hk.values[j] > max_h) max_h = hk.values[j];
  }
  out.homothetic = out.residual < 1e-8 * (1.0 + max_h);
  return out;
}

namespace {

DilationCertificate certify_in_place(const SupportBody& k,
                                     const SupportBody& l, std::size_t n) {
  RadiusResult in = inradius(k, l, n);
  RadiusResult out = outradius(k, l, n);
  DilationCertificate cert;
  cert.r = in.value;
  cert.R = out.value;
  cert.x_in = in.witness;
  cert.x_out = out.witness;
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double theta = kTwoPi * j / n;
    double hk = eval(k, theta), hl = eval(l, theta);
    for (double v : {cert.r * hl - hk, hk - cert.R * hl, -hk, -hl})
      if (v > worst) worst = v;
  }
  cert.at_dilation_position = worst <= 1e-6;
  cert.origin_class = classify_origin(k, l, n);
  return cert;
}

}  // namespace

GreenOsherReport verify(const SupportBody& k, const SupportBody& l,
                        const std::vector<ConvexFunctional>& functionals,
                        std::size_t node_count) {
  std::size_t n = effective_nodes(k, l, node_count);
  return verify(k, l, certify_in_place(k, l, n), functionals, n);
}

GreenOsherReport verify(const SupportBody& k, const SupportBody& l,
                        const DilationCertificate& certificate,
                        const std::vector<ConvexFunctional>& functionals,
                        std::size_t node_count) {
  if (!certificate.at_dilation_position)
    throw NotAtDilationPosition(
        "pair is not at a dilation position; call to_dilation_position");

  std::size_t n = effective_nodes(k, l, node_count);
  GreenOsherReport report;
  report.certificate = certificate;
  report.steiner = steiner_data(k, l);
  report.partition = partition(k, l, n);

  double identity = report.partition.rho1 + report.partition.rho2 -
                    2.0 * report.steiner.vKL / report.steiner.vL;
  if (std::abs(identity) > 1e-10 * (1.0 + std::abs(report.partition.rho1))) {
    std::ostringstream msg;
    msg << "rho1 + rho2 deviates from 2V(K,L)/V(L) by " << identity;
    throw std::logic_error(msg.str());
  }

  for (const ConvexFunctional& f : functionals) {
    FunctionalCheck check;
    check.name = f.name;
    check.convexity_checked = f.convexity_checked;
    check.lhs = lhs_functional(k, l, f, n);
    check.mid = f.value(report.partition.rho1) + f.value(report.partition.rho2);
    check.rhs = rhs_bound(report.steiner, f);
    check.slack = check.lhs - check.rhs;
    report.functionals.push_back(std::move(check));
  }

  report.rho1_bound = report.partition.rho1 + report.steiner.t2;
  report.b_bound = report.partition.b - report.steiner.delta / report.steiner.vL;

  HomothetyResult hom = homothety_test(k, l, n);
  report.homothetic = hom.homothetic;
  report.residual = hom.residual;
  return report;
}

}  // namespace greenosher
