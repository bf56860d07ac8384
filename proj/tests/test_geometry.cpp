#include <doctest.h>

#include "kohnlab/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <random>

using namespace kohnlab::geom;

namespace {

std::mt19937_64 rng(20250810);

SpheroidalPoint random_point(double lambda_max = 4.0) {
  std::uniform_real_distribution<double> ul(1.0 + 1e-6, lambda_max);
  std::uniform_real_distribution<double> um(-0.999, 0.999);
  std::uniform_real_distribution<double> up(0.0, 2 * pi);
  return {ul(rng), um(rng), up(rng)};
}

}  // namespace

TEST_CASE("focal distances at coordinate landmarks") {
  NuclearFrame f(1.4);
  auto [ra, rb] = focal_distances({1.0, 1.0, 0.0}, f);
  CHECK(ra == doctest::Approx(1.4));
  CHECK(rb == doctest::Approx(0.0));
  auto [ra2, rb2] = focal_distances({1.0, 0.0, 0.0}, f);
  CHECK(ra2 == doctest::Approx(0.7));
  CHECK(rb2 == doctest::Approx(0.7));
  auto [ra3, rb3] = focal_distances({2.0, 0.5, 0.0}, NuclearFrame(2.0));
  CHECK(ra3 == doctest::Approx(2.5));
  CHECK(rb3 == doctest::Approx(1.5));
}

TEST_CASE("scaled distance: coincident points, foci, and Cartesian oracle") {
  NuclearFrame f(1.4);
  SpheroidalPoint p(1.7, 0.3, 1.1);
  CHECK(scaled_distance(p, p, f) == doctest::Approx(0.0));

  // the two foci are at lambda=1, mu=+-1, any phi
  SpheroidalPoint fa(1.0, 1.0, 0.0), fb(1.0, -1.0, 0.0);
  CHECK(scaled_distance(fa, fb, f) == doctest::Approx(2.0));

  for (int i = 0; i < 50; ++i) {
    auto a = random_point(), b = random_point();
    const Vec3 ca = to_cartesian(a, f), cb = to_cartesian(b, f);
    const double direct =
        std::sqrt((ca.x - cb.x) * (ca.x - cb.x) + (ca.y - cb.y) * (ca.y - cb.y) +
                  (ca.z - cb.z) * (ca.z - cb.z));
    CHECK(scaled_distance(a, b, f) == doctest::Approx(2.0 / f.R * direct).epsilon(1e-14));
  }
}

TEST_CASE("m_factor zeros, unit value, and symmetry") {
  SpheroidalPoint q(2.0, 0.2, 0.0);
  CHECK(m_factor({1.0, 0.5, 0.0}, q) == doctest::Approx(0.0));
  CHECK(m_factor(q, {3.0, 1.0, 0.0}) == doctest::Approx(0.0));
  const double s2 = std::sqrt(2.0);
  CHECK(m_factor({s2, 0.0, 0.0}, {s2, 0.0, 0.0}) == doctest::Approx(1.0));
  for (int i = 0; i < 20; ++i) {
    auto a = random_point(), b = random_point();
    CHECK(m_factor(a, b) == m_factor(b, a));
  }
}

TEST_CASE("m_factor cos(dphi) reproduces the azimuthal cross term of r_pq^2") {
  NuclearFrame f(1.4);
  const double k = f.half();
  for (int i = 0; i < 40; ++i) {
    auto a = random_point(), b = random_point();
    const Vec3 ca = to_cartesian(a, f), cb = to_cartesian(b, f);
    const double cross = (ca.x * cb.x + ca.y * cb.y) / (k * k);
    CHECK(m_factor(a, b) * std::cos(a.phi - b.phi) == doctest::Approx(cross).epsilon(1e-12));
  }
}

TEST_CASE("volume weight values and degenerate focus") {
  NuclearFrame f2(2.0);
  CHECK(volume_weight({1.0, 1.0, 0.0}, f2) == doctest::Approx(0.0));
  CHECK(volume_weight({2.0, 0.0, 0.0}, f2) == doctest::Approx(4.0));
}

TEST_CASE("volume weight integrates to the Cartesian volume (Monte Carlo oracle)") {
  // region lambda <= 2 is a prolate ellipsoid; integrate the weight exactly in
  // mu, phi and by midpoint sum in lambda, and compare with hit-or-miss volume.
  NuclearFrame f(1.4);
  const int nl = 2000;
  double vol_weight = 0.0;
  for (int i = 0; i < nl; ++i) {
    const double lam = 1.0 + (i + 0.5) / nl;
    // integral over mu of (lam^2 - mu^2) is 2 lam^2 - 2/3
    vol_weight += (2 * pi) * f.half() * f.half() * f.half() * (2 * lam * lam - 2.0 / 3.0) / nl;
  }

  std::mt19937_64 mc(7);
  std::uniform_real_distribution<double> ux(-1.0, 1.0), uz(-1.5, 1.5);
  const double a_ax = f.half() * 2.0;                  // semi-axis along z
  const double b_ax = f.half() * std::sqrt(3.0);       // transverse
  const long n = 400000;
  long hits = 0;
  for (long i = 0; i < n; ++i) {
    const double x = ux(mc) * b_ax, y = ux(mc) * b_ax, z = uz(mc) * a_ax;
    const double ra = std::sqrt(x * x + y * y + (z - f.half()) * (z - f.half()));
    const double rb = std::sqrt(x * x + y * y + (z + f.half()) * (z + f.half()));
    if ((ra + rb) / f.R <= 2.0) ++hits;
  }
  const double box = (2 * b_ax) * (2 * b_ax) * (3 * a_ax);
  const double vol_mc = box * static_cast<double>(hits) / n;
  CHECK(vol_weight == doctest::Approx(vol_mc).epsilon(0.01));
}

TEST_CASE("spheroidal -> Cartesian -> spheroidal round trip") {
  NuclearFrame f(1.4);
  for (int i = 0; i < 100; ++i) {
    auto p = random_point();
    auto q = from_cartesian(to_cartesian(p, f), f);
    CHECK(q.lambda == doctest::Approx(p.lambda).epsilon(1e-12));
    CHECK(q.mu == doctest::Approx(p.mu).epsilon(1e-12));
    CHECK(std::abs(delta_angle(q.phi, p.phi)) < 1e-12);
  }
}

TEST_CASE("scaled distance satisfies the triangle inequality") {
  NuclearFrame f(1.4);
  for (int i = 0; i < 60; ++i) {
    auto a = random_point(), b = random_point(), c = random_point();
    CHECK(scaled_distance(a, c, f) <=
          scaled_distance(a, b, f) + scaled_distance(b, c, f) + 1e-13);
  }
}

TEST_CASE("point validation and phi wrapping") {
  CHECK_THROWS_AS(SpheroidalPoint(0.5, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SpheroidalPoint(1.5, 1.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(NuclearFrame(-1.0), std::invalid_argument);
  SpheroidalPoint p(1.5, 0.0, 2 * pi + 0.25);
  CHECK(p.phi == doctest::Approx(0.25));
}
