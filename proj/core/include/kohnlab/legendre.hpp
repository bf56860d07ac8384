#pragma once

#include <vector>

// Legendre functions of the first and second kind on the cut (|x| <= 1) and
// off the cut (z > 1), for the orders needed by the two-centre Neumann
// expansion of 1/r12.
//
// Conventions (verified against 25-digit reference values):
//   on the cut:  P_l^m(x) carries the Condon-Shortley phase,
//                P_m^m(x) = (-1)^m (2m-1)!! (1-x^2)^{m/2}.
//   off the cut: P_l^m(z) = (z^2-1)^{m/2} d^m P_l/dz^m      (no phase),
//                Q_l^m(z) = (z^2-1)^{m/2} d^m Q_l/dz^m.
// Q_l(z) is computed by backward (Miller) recurrence normalized at Q_0, which
// stays accurate arbitrarily close to z = 1 where the forward direction fails.

namespace kohnlab::num {

// P_0..P_lmax at x (valid on and off the cut).
void legendre_p_row(int lmax, double x, std::vector<double>& p);

// Q_0..Q_lmax at z > 1.
void legendre_q_row(int lmax, double z, std::vector<double>& q);

double legendre_p(int l, double x);
double legendre_q(int l, double z);

// Associated functions for m = 0..2 as used by the kernel tables.
// Rows indexed by l; each valid for l >= m (entries below m are zero).
struct AssociatedRows {
  std::vector<double> m0, m1, m2;
};

// On-cut associated P rows at |x| <= 1 (Condon-Shortley phase).
AssociatedRows assoc_p_cut(int lmax, double x);
// Off-cut associated P and Q rows at z > 1.
AssociatedRows assoc_p_off(int lmax, double z);
AssociatedRows assoc_q_off(int lmax, double z);

double assoc_legendre_p(int l, int m, double x);  // dispatches on |x| vs 1
double assoc_legendre_q(int l, int m, double z);  // z > 1

}  // namespace kohnlab::num
