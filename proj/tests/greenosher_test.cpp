#include <cmath>
#include <numbers>

#include <doctest.h>

#include "greenosher/greenosher.hpp"

using namespace greenosher;

namespace {
constexpr double kPi = std::numbers::pi;

SupportBody worked_body() { return SupportBody{1.0, {0.0, 0.2}, {}}; }
const SupportBody kDisk = SupportBody::disk(1.0);

ConvexFunctional square() { return functional_registry()[0]; }
}  // namespace

TEST_CASE("relative_curvature_radius") {
  GridProfile homothetic =
      relative_curvature_radius(SupportBody::disk(2.0), kDisk);
  for (double v : homothetic.values) CHECK(v == doctest::Approx(2.0));

  GridProfile rho = relative_curvature_radius(worked_body(), kDisk, 1024);
  double lo = 1e30, hi = -1e30;
  for (std::size_t j = 0; j < rho.values.size(); ++j) {
    double theta = 2.0 * kPi * j / rho.values.size();
    CHECK(rho.values[j] ==
          doctest::Approx(1.0 - 0.6 * std::cos(2.0 * theta)).epsilon(1e-12));
    lo = std::min(lo, rho.values[j]);
    hi = std::max(hi, rho.values[j]);
  }
  CHECK(lo == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(hi == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("rho reproduces the mixed area") {
  // (1/2) int rho h_L (h_L + h_L'') dtheta = V(K,L)
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SupportBody k = random_body(seed + 10, 6, 2.5);
    SupportBody l = random_body(seed + 20, 6, 2.5);
    std::size_t n = quadrature_nodes(k, l);
    GridProfile rho = relative_curvature_radius(k, l, n);
    GridProfile hl = sample_support(l, n);
    GridProfile cl = curvature_profile(l, n);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      sum += rho.values[j] * hl.values[j] * cl.values[j];
    double integral = 0.5 * 2.0 * kPi / n * sum;
    CHECK(std::abs(integral - mixed_area(k, l)) < 1e-10);
  }
}

TEST_CASE("partition on a homothetic pair") {
  PartitionResult part = partition(SupportBody::disk(2.0), kDisk);
  CHECK(part.a == doctest::Approx(2.0));
  CHECK(part.rho1 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(part.rho2 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(part.b == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("partition on the worked pair") {
  // measure is dtheta; {rho >= 1} = {cos 2theta <= 0} has measure pi and
  // int_{cos 2theta <= 0} cos 2theta dtheta = -2
  PartitionResult part = partition(worked_body(), kDisk, 1 << 16);
  CHECK(part.a == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(part.rho1 == doctest::Approx(1.0 + 1.2 / kPi).epsilon(1e-8));
  CHECK(part.rho2 == doctest::Approx(1.0 - 1.2 / kPi).epsilon(1e-8));
  CHECK(part.b == doctest::Approx(1.2 / kPi).epsilon(1e-8));
  CHECK(part.measure_error < 1e-12);

  // Lemma-level bound: b >= delta / V(L)
  SteinerData sd = steiner_data(worked_body(), kDisk);
  CHECK(part.b >= sd.delta / sd.vL);
  CHECK(part.b == doctest::Approx(0.381972).epsilon(1e-5));
  CHECK(sd.delta / sd.vL == doctest::Approx(0.244949).epsilon(1e-5));
}

TEST_CASE("partition identities on random pairs") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    SupportBody k = random_body(seed + 30, 6, 2.5);
    SupportBody l = random_body(seed + 60, 6, 2.5);
    PartitionResult part = partition(k, l);
    SteinerData sd = steiner_data(k, l);
    CHECK(part.measure_error < 1e-12);
    CHECK(part.rho1 + part.rho2 ==
          doctest::Approx(2.0 * sd.vKL / sd.vL).epsilon(1e-10));
    CHECK(part.rho1 >= part.rho2);
    CHECK(part.b >= -1e-12);
  }
}

TEST_CASE("functional registry is usable and strictly convex by probe") {
  std::vector<ConvexFunctional> reg = functional_registry(2.5);
  CHECK(reg.size() == 5);
  for (const ConvexFunctional& f : reg) {
    CHECK(f.convexity_checked);
    // midpoint-convexity spot check on (0, +inf)
    for (double x : {0.3, 1.0, 2.7}) {
      double mid = f.value(x) + f.value(x + 1.0);
      CHECK(mid > 2.0 * f.value(x + 0.5));
    }
  }
  CHECK_THROWS_AS(make_power_functional(1.0), std::invalid_argument);
  ConvexFunctional custom = make_custom_functional("probe", [](double x) { return x; });
  CHECK_FALSE(custom.convexity_checked);
}

TEST_CASE("lhs_functional") {
  CHECK(lhs_functional(SupportBody::disk(2.0), kDisk, square()) ==
        doctest::Approx(8.0).epsilon(1e-12));

  // (1/pi) int (1 - 0.6 cos 2theta)^2 dtheta = 2 + 0.36
  CHECK(lhs_functional(worked_body(), kDisk, square()) ==
        doctest::Approx(2.36).epsilon(1e-12));

  // affine probe: lhs = 2 V(K,L)/V(L) = rho1 + rho2
  ConvexFunctional affine = make_custom_functional("id", [](double x) { return x; });
  SteinerData sd = steiner_data(worked_body(), kDisk);
  CHECK(lhs_functional(worked_body(), kDisk, affine) ==
        doctest::Approx(2.0 * sd.vKL / sd.vL).epsilon(1e-12));
}

TEST_CASE("rhs_bound") {
  SteinerData disks = steiner_data(SupportBody::disk(2.0), kDisk);
  CHECK(rhs_bound(disks, square()) == doctest::Approx(8.0).epsilon(1e-9));

  SteinerData sd = steiner_data(worked_body(), kDisk);
  CHECK(rhs_bound(sd, square()) == doctest::Approx(2.12).epsilon(1e-12));

  ConvexFunctional recip = functional_registry()[1];
  CHECK(rhs_bound(sd, recip) == doctest::Approx(2.0 / 0.94).epsilon(1e-12));
}

TEST_CASE("homothety_test") {
  SupportBody l = random_body(77, 6, 2.5);
  SupportBody k = translate(scale(l, 3.0), {1.0, -2.0});
  HomothetyResult fit = homothety_test(k, l);
  CHECK(fit.homothetic);
  CHECK(fit.lambda == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(fit.shift.x == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fit.shift.y == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(fit.residual < 1e-10);

  HomothetyResult off = homothety_test(worked_body(), kDisk);
  CHECK_FALSE(off.homothetic);
  CHECK(off.residual >= 0.15);  // best fit leaves most of the 0.2 cos 2theta

  HomothetyResult self = homothety_test(l, l);
  CHECK(self.homothetic);
  CHECK(self.lambda == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("verify on homothetic disks: the equality case") {
  GreenOsherReport report =
      verify(SupportBody::disk(2.0), kDisk, {square()}, 512);
  CHECK(report.homothetic);
  CHECK(std::abs(report.functionals[0].slack) < 1e-9);
  CHECK(report.certificate.at_dilation_position);
}

TEST_CASE("verify on the worked pair: the Jensen chain is ordered") {
  GreenOsherReport report =
      verify(worked_body(), kDisk, {square()}, 1 << 15);
  const FunctionalCheck& f = report.functionals[0];
  CHECK(f.lhs == doctest::Approx(2.36).epsilon(1e-10));
  CHECK(f.rhs == doctest::Approx(2.12).epsilon(1e-10));
  double b = report.partition.b;
  CHECK(f.mid == doctest::Approx(2.0 + 2.0 * b * b).epsilon(1e-10));
  CHECK(f.lhs >= f.mid - 1e-9);
  CHECK(f.mid >= f.rhs - 1e-9);
  CHECK_FALSE(report.homothetic);
  CHECK(report.rho1_bound >= -1e-9);
  CHECK(report.b_bound >= -1e-9);
}

TEST_CASE("verify rejects pairs away from a dilation position") {
  SupportBody k = translate(worked_body(), {2.0, 0.0});
  CHECK_THROWS_AS(verify(k, kDisk, {square()}), NotAtDilationPosition);
}

TEST_CASE("scale covariance of roots and rho") {
  SupportBody k = random_body(123, 5, 2.5);
  SupportBody l = random_body(321, 5, 2.5);
  SteinerData sd = steiner_data(k, l);
  SteinerData scaled = steiner_data(scale(k, 1.75), l);
  CHECK(scaled.t1 == doctest::Approx(1.75 * sd.t1).epsilon(1e-10));
  CHECK(scaled.t2 == doctest::Approx(1.75 * sd.t2).epsilon(1e-10));

  GridProfile rho = relative_curvature_radius(k, l, 2048);
  GridProfile rho_scaled = relative_curvature_radius(scale(k, 1.75), l, 2048);
  for (std::size_t j = 0; j < rho.values.size(); j += 97)
    CHECK(rho_scaled.values[j] ==
          doctest::Approx(1.75 * rho.values[j]).epsilon(1e-12));
}
