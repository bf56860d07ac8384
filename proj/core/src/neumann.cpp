#include "kohnlab/neumann.hpp"

#include "kohnlab/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kohnlab::num {

NeumannKernel::NeumannKernel(int l, int m, double t) : l_max(l), m_max(m), tol(t) {
  if (l_max < 0) throw std::invalid_argument("NeumannKernel: l_max must be >= 0");
  if (m_max < 0 || m_max > 2) throw std::invalid_argument("NeumannKernel: m_max must be 0..2");
}

double neumann_coefficient(int l, int m) {
  if (m > l) return 0.0;
  // [(l-m)!/(l+m)!]^2 accumulated as a product to avoid factorial overflow.
  double ratio = 1.0;
  for (int j = l - m + 1; j <= l + m; ++j) ratio /= j;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double two = (m == 0) ? 1.0 : 2.0;
  return two * sign * (2.0 * l + 1.0) * ratio * ratio;
}

namespace {

double series_sum(const geom::SpheroidalPoint& p1, const geom::SpheroidalPoint& p2,
                  const geom::NuclearFrame& frame, int l_max, int m_max, double tol,
                  bool check_convergence) {
  const double lam_lt = std::min(p1.lambda, p2.lambda);
  const double lam_gt = std::max(p1.lambda, p2.lambda);
  if (!(lam_gt > 1.0))
    throw std::invalid_argument("coulomb_kernel: both points on the focal segment");

  const AssociatedRows plt = assoc_p_off(l_max, lam_lt);
  const AssociatedRows qgt = assoc_q_off(l_max, lam_gt);
  const AssociatedRows pm1 = assoc_p_cut(l_max, p1.mu);
  const AssociatedRows pm2 = assoc_p_cut(l_max, p2.mu);
  const double dphi = p1.phi - p2.phi;
  const double c1 = std::cos(dphi), c2 = std::cos(2.0 * dphi);

  double total = 0.0;
  int small_streak = 0;  // parity can zero alternate terms; demand two in a row
  bool converged = false;
  for (int l = 0; l <= l_max; ++l) {
    double term = neumann_coefficient(l, 0) * plt.m0[l] * qgt.m0[l] * pm1.m0[l] * pm2.m0[l];
    if (m_max >= 1 && l >= 1)
      term += neumann_coefficient(l, 1) * plt.m1[l] * qgt.m1[l] * pm1.m1[l] * pm2.m1[l] * c1;
    if (m_max >= 2 && l >= 2)
      term += neumann_coefficient(l, 2) * plt.m2[l] * qgt.m2[l] * pm1.m2[l] * pm2.m2[l] * c2;
    total += term;
    if (check_convergence) {
      small_streak = (std::abs(term) <= tol * std::abs(total)) ? small_streak + 1 : 0;
      if (l >= 4 && small_streak >= 2) {
        converged = true;
        break;
      }
    }
  }
  if (check_convergence && !converged)
    throw series_error("coulomb_kernel: Neumann series not converged at l_max");
  return (2.0 / frame.R) * total;
}

}  // namespace

double coulomb_kernel(const geom::SpheroidalPoint& p1, const geom::SpheroidalPoint& p2,
                      const geom::NuclearFrame& frame, const NeumannKernel& kernel) {
  return series_sum(p1, p2, frame, kernel.l_max, kernel.m_max, kernel.tol, true);
}

double coulomb_kernel_partial(const geom::SpheroidalPoint& p1, const geom::SpheroidalPoint& p2,
                              const geom::NuclearFrame& frame, int l_cut, int m_max) {
  return series_sum(p1, p2, frame, l_cut, m_max, 0.0, false);
}

}  // namespace kohnlab::num
