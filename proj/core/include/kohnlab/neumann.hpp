#pragma once

#include "kohnlab/geometry.hpp"

#include <stdexcept>
#include <vector>

namespace kohnlab::num {

// Truncation control for the two-centre Neumann expansion of 1/r12:
//
//   1/r12 = (2/R) sum_{l,m} (2-d_m0) (-1)^m (2l+1) [(l-m)!/(l+m)!]^2
//           P_l^m(lam<) Q_l^m(lam>) P_l^m(mu1) P_l^m(mu2) cos(m dphi)
//
// with on-cut P carrying the Condon-Shortley phase and off-cut P, Q real.
struct NeumannKernel {
  int l_max = 40;
  int m_max = 2;
  double tol = 1e-10;  // relative early-exit tolerance on the partial sums

  NeumannKernel() = default;
  NeumannKernel(int l, int m, double t = 1e-10);
};

// Coefficient (2-d_m0) (-1)^m (2l+1) [(l-m)!/(l+m)!]^2.
double neumann_coefficient(int l, int m);

// Truncated series value of 1/r12 (1/bohr). Throws kohnlab::num::series_error
// if the partial sums have not met `tol` by l_max.
double coulomb_kernel(const geom::SpheroidalPoint& p1, const geom::SpheroidalPoint& p2,
                      const geom::NuclearFrame& frame, const NeumannKernel& kernel);

// Same series truncated at l <= l_cut, no convergence check (for diagnostics).
double coulomb_kernel_partial(const geom::SpheroidalPoint& p1, const geom::SpheroidalPoint& p2,
                              const geom::NuclearFrame& frame, int l_cut, int m_max);

struct series_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kohnlab::num
