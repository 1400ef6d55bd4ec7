#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "greenosher/support_body.hpp"

using namespace greenosher;

namespace {
constexpr double kPi = std::numbers::pi;

SupportBody worked_body() {
  // h = 1 + 0.2 cos 2theta
  return SupportBody{1.0, {0.0, 0.2}, {}};
}
}  // namespace

TEST_CASE("eval") {
  CHECK(eval(SupportBody::disk(1.0), 1.7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eval(worked_body(), 0.0) == doctest::Approx(1.2).epsilon(1e-14));
  // unit disk translated by (1,0): h = 1 + cos theta, boundary through origin
  SupportBody shifted = translate(SupportBody::disk(1.0), {1.0, 0.0});
  CHECK(eval(shifted, kPi) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("curvature_profile is the exact coefficient-wise derivative") {
  GridProfile disk = curvature_profile(SupportBody::disk(1.0), 64);
  for (double v : disk.values) CHECK(v == doctest::Approx(1.0));

  GridProfile worked = curvature_profile(worked_body(), 64);
  for (std::size_t j = 0; j < 64; ++j) {
    double theta = 2.0 * kPi * j / 64;
    CHECK(worked.values[j] ==
          doctest::Approx(1.0 - 0.6 * std::cos(2.0 * theta)).epsilon(1e-13));
  }

  // translates share the curvature profile: first harmonics solve h + h'' = 0
  SupportBody moved = translate(worked_body(), {0.7, -1.3});
  GridProfile a = curvature_profile(worked_body(), 128);
  GridProfile b = curvature_profile(moved, 128);
  for (std::size_t j = 0; j < 128; ++j)
    CHECK(a.values[j] == doctest::Approx(b.values[j]).epsilon(1e-14));
}

TEST_CASE("curvature matches second finite differences at O(dtheta^2)") {
  SupportBody body = random_body(99, 6, 2.5);
  auto max_error = [&](std::size_t n) {
    GridProfile h = sample_support(body, n);
    GridProfile c = curvature_profile(body, n);
    double dt = 2.0 * kPi / n, worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double second = (h.values[(j + 1) % n] - 2.0 * h.values[j] +
                       h.values[(j + n - 1) % n]) /
                      (dt * dt);
      worst = std::max(worst, std::abs(h.values[j] + second - c.values[j]));
    }
    return worst;
  };
  double coarse = max_error(256), fine = max_error(512);
  CHECK(coarse < 1e-3);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("translate") {
  SupportBody moved = translate(SupportBody::disk(1.0), {1.0, 0.0});
  CHECK(moved.cos_coeffs[0] == doctest::Approx(1.0));
  CHECK(moved.sin_coeffs[0] == doctest::Approx(0.0));

  SupportBody body = worked_body();
  SupportBody back = translate(translate(body, {0.3, -0.4}), {-0.3, 0.4});
  CHECK(back.a0 == body.a0);
  for (std::size_t i = 0; i < back.cos_coeffs.size(); ++i)
    CHECK(back.cos_coeffs[i] == doctest::Approx(i < body.cos_coeffs.size()
                                                    ? body.cos_coeffs[i]
                                                    : 0.0));
}

TEST_CASE("scale and minkowski_sum") {
  CHECK(eval(scale(SupportBody::disk(1.0), 3.0), 0.4) == doctest::Approx(3.0));
  SupportBody sum = minkowski_sum(SupportBody::disk(1.0), SupportBody::disk(2.0));
  CHECK(sum.a0 == doctest::Approx(3.0));
  CHECK_THROWS_AS(scale(SupportBody::disk(1.0), -1.0), std::invalid_argument);

  // support functions add: h_{K+tL}(theta0) = h_K(theta0) + t h_L(theta0)
  SupportBody k = worked_body();
  SupportBody combined = minkowski_sum(k, scale(SupportBody::disk(1.0), 0.5));
  double theta0 = kPi / 3.0;
  CHECK(eval(combined, theta0) ==
        doctest::Approx(eval(k, theta0) + 0.5).epsilon(1e-14));
}

TEST_CASE("operations commute with eval pointwise") {
  SupportBody a = random_body(7, 5, 2.5);
  SupportBody b = random_body(8, 4, 3.0);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int i = 0; i < 50; ++i) {
    double theta = angle(rng);
    double c = std::cos(theta), s = std::sin(theta);
    CHECK(eval(translate(a, {0.4, -0.2}), theta) ==
          doctest::Approx(eval(a, theta) + 0.4 * c - 0.2 * s).epsilon(1e-13));
    CHECK(eval(scale(a, 1.7), theta) ==
          doctest::Approx(1.7 * eval(a, theta)).epsilon(1e-13));
    CHECK(eval(minkowski_sum(a, b), theta) ==
          doctest::Approx(eval(a, theta) + eval(b, theta)).epsilon(1e-13));
  }
}

TEST_CASE("validate") {
  ConvexityCheck ok = validate(worked_body(), 64);
  CHECK(ok.accepted);
  CHECK(ok.min_value == doctest::Approx(0.4).epsilon(1e-13));
  CHECK(ok.argmin_node == 0);  // min of 1 - 0.6 cos 2theta is at theta = 0

  ConvexityCheck bad = validate(SupportBody{1.0, {0.0, 0.5}, {}}, 64);
  CHECK_FALSE(bad.accepted);
  CHECK(bad.min_value == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK_THROWS_AS(require_valid(SupportBody{1.0, {0.0, 0.5}, {}}),
                  ValidationError);

  ConvexityCheck disk = validate(SupportBody::disk(1.0));
  CHECK(disk.accepted);
  CHECK(disk.min_value == doctest::Approx(1.0));
}

TEST_CASE("random_body") {
  SupportBody a = random_body(42, 6, 2.5);
  SupportBody b = random_body(42, 6, 2.5);
  CHECK(a.a0 == b.a0);
  CHECK(a.cos_coeffs == b.cos_coeffs);
  CHECK(a.sin_coeffs == b.sin_coeffs);

  CHECK(a.a0 == 1.0);
  CHECK(a.cos_coeffs[0] == 0.0);  // canonical centering
  CHECK(a.sin_coeffs[0] == 0.0);

  for (std::uint64_t seed = 0; seed < 50; ++seed)
    CHECK(validate(random_body(seed, 6, 2.0), 1024, 0.1).accepted);

  CHECK_THROWS_AS(random_body(1, 1, 2.5), std::invalid_argument);
  CHECK_THROWS_AS(random_body(1, 4, 1.5), std::invalid_argument);
}

TEST_CASE("boundary_point") {
  // disk: x(theta) = u(theta)
  Vec2 p = boundary_point(SupportBody::disk(1.0), 0.3);
  CHECK(p.x == doctest::Approx(std::cos(0.3)).epsilon(1e-14));
  CHECK(p.y == doctest::Approx(std::sin(0.3)).epsilon(1e-14));

  // worked body at theta = 0: (h(0), h'(0)) = (1.2, 0)
  Vec2 q = boundary_point(worked_body(), 0.0);
  CHECK(q.x == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(q.y == doctest::Approx(0.0).epsilon(1e-14));
}
