#include <doctest.h>

#include "kohnlab/legendre.hpp"

#include <cmath>

using namespace kohnlab::num;

// Reference values computed with 25-digit arithmetic (type-2 on the cut,
// type-3 off the cut).
TEST_CASE("off-cut P and Q against frozen references") {
  CHECK(assoc_legendre_p(0, 0, 1.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(assoc_legendre_p(3, 0, 1.5) == doctest::Approx(6.1875).epsilon(1e-14));
  CHECK(assoc_legendre_p(5, 1, 2.3) == doctest::Approx(1998.50320037133797).epsilon(1e-13));
  CHECK(assoc_legendre_p(8, 2, 1.05) == doctest::Approx(107.353481348254526).epsilon(1e-13));
  CHECK(assoc_legendre_p(12, 0, 4.0) == doctest::Approx(9218722728.94433594).epsilon(1e-13));
  CHECK(assoc_legendre_p(7, 1, 1.002) == doctest::Approx(1.81999835575227427).epsilon(1e-13));

  CHECK(assoc_legendre_q(0, 0, 1.5) == doctest::Approx(0.804718956217050187).epsilon(1e-14));
  CHECK(assoc_legendre_q(3, 0, 1.5) == doctest::Approx(0.0208652082596647006).epsilon(1e-13));
  CHECK(assoc_legendre_q(5, 1, 2.3) == doctest::Approx(-0.000656876611303258261).epsilon(1e-12));
  CHECK(assoc_legendre_q(8, 2, 1.05) == doctest::Approx(6.90493037326340724).epsilon(1e-12));
  CHECK(assoc_legendre_q(12, 0, 4.0) == doctest::Approx(1.12038410053748449e-12).epsilon(1e-12));
  CHECK(assoc_legendre_q(7, 1, 1.002) == doctest::Approx(-13.2882815336040041).epsilon(1e-12));
}

TEST_CASE("on-cut associated P with Condon-Shortley phase") {
  CHECK(assoc_legendre_p(1, 1, 0.5) == doctest::Approx(-std::sqrt(0.75)).epsilon(1e-14));
  CHECK(assoc_legendre_p(4, 0, 0.3) == doctest::Approx(0.0729375).epsilon(1e-13));
  CHECK(assoc_legendre_p(6, 1, -0.7) == doctest::Approx(-2.33145231960229518).epsilon(1e-13));
  CHECK(assoc_legendre_p(9, 2, 0.95) == doctest::Approx(43.6216730144403099).epsilon(1e-13));
  // m > 0 vanishes at the poles
  CHECK(assoc_legendre_p(5, 1, 1.0) == 0.0);
  CHECK(assoc_legendre_p(5, 2, -1.0) == 0.0);
}

TEST_CASE("Q_0 and Q_1 closed forms") {
  for (double z : {1.001, 1.3, 2.0, 7.5, 40.0}) {
    const double q0 = 0.5 * std::log((z + 1) / (z - 1));
    CHECK(legendre_q(0, z) == doctest::Approx(q0).epsilon(1e-14));
    CHECK(legendre_q(1, z) == doctest::Approx(z * q0 - 1.0).epsilon(1e-12));
  }
}

TEST_CASE("rows are consistent with scalar evaluation and recurrences") {
  std::vector<double> q;
  legendre_q_row(30, 1.002, q);
  // three-term recurrence must hold to working precision
  for (int l = 1; l < 30; ++l) {
    const double lhs = (l + 1.0) * q[l + 1];
    const double rhs = (2.0 * l + 1.0) * 1.002 * q[l] - l * q[l - 1];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
  // Q decays with l for z > 1
  CHECK(std::abs(q[29]) < std::abs(q[3]));
}

TEST_CASE("legendre wronskian P_l Q_l' - P_l' Q_l = -1/(z^2-1)") {
  for (double z : {1.05, 1.7, 3.0}) {
    for (int l : {0, 2, 7, 15}) {
      // derivative via the associated row relation m=1: f^1 = sqrt(z^2-1) f'
      const double s = std::sqrt(z * z - 1.0);
      const double dp = l == 0 ? 0.0 : assoc_legendre_p(l, 1, z) / s;
      const double dq0 = -1.0 / (z * z - 1.0);
      const double dq = l == 0 ? dq0 : assoc_legendre_q(l, 1, z) / s;
      const double w = legendre_p(l, z) * dq - dp * legendre_q(l, z);
      CHECK(w == doctest::Approx(-1.0 / (z * z - 1.0)).epsilon(1e-10));
    }
  }
}
