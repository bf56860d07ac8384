#include "kohnlab/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace kohnlab::geom {

double wrap_angle(double phi) {
  double w = std::fmod(phi, 2 * pi);
  if (w < 0) w += 2 * pi;
  return w;
}

double delta_angle(double a, double b) {
  double d = std::remainder(a - b, 2 * pi);
  if (d <= -pi) d += 2 * pi;
  return d;
}

NuclearFrame::NuclearFrame(double separation) : R(separation) {
  if (!(R > 0)) throw std::invalid_argument("NuclearFrame: R must be positive");
}

SpheroidalPoint::SpheroidalPoint(double lambda_, double mu_, double phi_)
    : lambda(lambda_), mu(mu_), phi(wrap_angle(phi_)) {
  if (!(lambda >= 1.0)) throw std::invalid_argument("SpheroidalPoint: lambda must be >= 1");
  if (!(mu >= -1.0 && mu <= 1.0)) throw std::invalid_argument("SpheroidalPoint: |mu| must be <= 1");
}

Vec3 to_cartesian(const SpheroidalPoint& p, const NuclearFrame& frame) {
  const double k = frame.half();
  const double s2 = std::max((p.lambda * p.lambda - 1.0) * (1.0 - p.mu * p.mu), 0.0);
  const double rho = k * std::sqrt(s2);
  return {rho * std::cos(p.phi), rho * std::sin(p.phi), k * p.lambda * p.mu};
}

SpheroidalPoint from_cartesian(const Vec3& r, const NuclearFrame& frame) {
  const double k = frame.half();
  const Vec3 fa{0, 0, k}, fb{0, 0, -k};
  const double ra = norm({r.x - fa.x, r.y - fa.y, r.z - fa.z});
  const double rb = norm({r.x - fb.x, r.y - fb.y, r.z - fb.z});
  double lambda = (ra + rb) / frame.R;
  double mu = (rb - ra) / frame.R;
  lambda = std::max(lambda, 1.0);
  mu = std::clamp(mu, -1.0, 1.0);
  return SpheroidalPoint(lambda, mu, std::atan2(r.y, r.x));
}

std::pair<double, double> focal_distances(const SpheroidalPoint& p, const NuclearFrame& frame) {
  const double k = frame.half();
  return {k * (p.lambda + p.mu), k * (p.lambda - p.mu)};
}

double distance(const SpheroidalPoint& p, const SpheroidalPoint& q, const NuclearFrame& frame) {
  const Vec3 a = to_cartesian(p, frame);
  const Vec3 b = to_cartesian(q, frame);
  return norm({a.x - b.x, a.y - b.y, a.z - b.z});
}

double scaled_distance(const SpheroidalPoint& p, const SpheroidalPoint& q,
                       const NuclearFrame& frame) {
  return 2.0 / frame.R * distance(p, q, frame);
}

double m_factor(const SpheroidalPoint& p, const SpheroidalPoint& q) {
  const double f = (p.lambda * p.lambda - 1.0) * (1.0 - p.mu * p.mu) *
                   (q.lambda * q.lambda - 1.0) * (1.0 - q.mu * q.mu);
  return std::sqrt(std::max(f, 0.0));
}

double volume_weight(const SpheroidalPoint& p, const NuclearFrame& frame) {
  const double k = frame.half();
  return k * k * k * (p.lambda * p.lambda - p.mu * p.mu);
}

}  // namespace kohnlab::geom
