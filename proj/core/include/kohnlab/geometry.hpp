#pragma once

#include <cmath>
#include <utility>

// Prolate spheroidal geometry for a fixed two-centre frame. The foci sit at
// z = +-R/2 on the internuclear axis; each particle carries coordinates
// (lambda, mu, phi) with lambda >= 1, |mu| <= 1, phi in [0, 2pi).
//
// Distances are always evaluated through the Cartesian embedding, so there is
// a single code path that every closed-form identity can be tested against.

namespace kohnlab::geom {

constexpr double pi = 3.14159265358979323846;

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

inline double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

// Wrap an angle to [0, 2pi).
double wrap_angle(double phi);

// Principal value of an angle difference, in (-pi, pi].
double delta_angle(double a, double b);

struct NuclearFrame {
  double R = 1.4;  // internuclear separation, bohr

  explicit NuclearFrame(double separation = 1.4);
  double half() const { return 0.5 * R; }
};

struct SpheroidalPoint {
  double lambda = 1.0;
  double mu = 0.0;
  double phi = 0.0;  // stored wrapped to [0, 2pi)

  SpheroidalPoint() = default;
  SpheroidalPoint(double lambda_, double mu_, double phi_);
};

Vec3 to_cartesian(const SpheroidalPoint& p, const NuclearFrame& frame);
SpheroidalPoint from_cartesian(const Vec3& r, const NuclearFrame& frame);

// (r_A, r_B) = (R(lambda+mu)/2, R(lambda-mu)/2).
std::pair<double, double> focal_distances(const SpheroidalPoint& p, const NuclearFrame& frame);

// |r_p - r_q| in bohr, via the Cartesian embedding.
double distance(const SpheroidalPoint& p, const SpheroidalPoint& q, const NuclearFrame& frame);

// rho_pq = (2/R) |r_p - r_q|.
double scaled_distance(const SpheroidalPoint& p, const SpheroidalPoint& q,
                       const NuclearFrame& frame);

// M_pq = sqrt((lambda_p^2-1)(1-mu_p^2)(lambda_q^2-1)(1-mu_q^2)).
double m_factor(const SpheroidalPoint& p, const SpheroidalPoint& q);

// Volume element weight (R/2)^3 (lambda^2 - mu^2); dV = weight dlambda dmu dphi.
double volume_weight(const SpheroidalPoint& p, const NuclearFrame& frame);

}  // namespace kohnlab::geom
