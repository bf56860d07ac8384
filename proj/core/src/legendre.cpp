#include "kohnlab/legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace kohnlab::num {

void legendre_p_row(int lmax, double x, std::vector<double>& p) {
  p.assign(lmax + 1, 0.0);
  p[0] = 1.0;
  if (lmax == 0) return;
  p[1] = x;
  for (int l = 1; l < lmax; ++l)
    p[l + 1] = ((2.0 * l + 1.0) * x * p[l] - l * p[l - 1]) / (l + 1);
}

void legendre_q_row(int lmax, double z, std::vector<double>& q) {
  if (!(z > 1.0)) throw std::invalid_argument("legendre_q_row: requires z > 1");
  q.assign(lmax + 1, 0.0);
  const double q0 = 0.5 * std::log((z + 1.0) / (z - 1.0));
  if (lmax == 0) {
    q[0] = q0;
    return;
  }
  // Backward recurrence is the stable direction for Q (Q_l ~ t^-l with
  // t = z + sqrt(z^2-1)); start far enough above lmax that the contaminating
  // P-solution has decayed below round-off.
  const double t = z + std::sqrt(z * z - 1.0);
  const double lnt = std::log(t);
  long start = lmax + 30;
  if (lnt > 0)
    start = std::max<long>(start, lmax + static_cast<long>(std::ceil(20.0 / lnt)) + 2);
  start = std::min<long>(start, 4'000'000);

  std::vector<double> raw(lmax + 1, 0.0);
  std::vector<int> scale(lmax + 1, 0);
  double hi = 0.0, lo = 1e-280;  // Q~_{l+1}, Q~_l seeds
  int rescales = 0;
  for (long l = start; l >= 1; --l) {
    const double next = ((2.0 * l + 1.0) * z * lo - (l + 1.0) * hi) / l;  // Q~_{l-1}
    hi = lo;
    lo = next;
    if (l - 1 <= lmax) {
      raw[l - 1] = lo;
      scale[l - 1] = rescales;
    }
    if (std::abs(lo) > 1e280) {
      lo *= 1e-280;
      hi *= 1e-280;
      ++rescales;
    }
  }
  const double norm = q0 / lo;
  for (int l = 0; l <= lmax; ++l) {
    double v = raw[l] * norm;
    for (int s = scale[l]; s < rescales; ++s) v *= 1e-280;
    q[l] = v;
  }
}

double legendre_p(int l, double x) {
  std::vector<double> p;
  legendre_p_row(l, x, p);
  return p[l];
}

double legendre_q(int l, double z) {
  std::vector<double> q;
  legendre_q_row(l, z, q);
  return q[l];
}

namespace {

// Associated rows for m = 0..2 from the base row y and the recurrences
//   (x^2-1) y_l' = l (x y_l - y_{l-1}),
//   (1-x^2) y_l'' = 2 x y_l' - l(l+1) y_l.
// off_cut selects the (z^2-1)^{m/2} (no phase) vs (-1)^m (1-x^2)^{m/2}
// conventions.
AssociatedRows associated_from_row(const std::vector<double>& y, double x, bool off_cut) {
  const int lmax = static_cast<int>(y.size()) - 1;
  AssociatedRows r;
  r.m0 = y;
  r.m1.assign(lmax + 1, 0.0);
  r.m2.assign(lmax + 1, 0.0);
  const double x2m1 = x * x - 1.0;
  if (x2m1 == 0.0) return r;  // P_l^m(+-1) = 0 for m > 0
  const double s = std::sqrt(std::abs(x2m1));
  for (int l = 1; l <= lmax; ++l) {
    const double dy = l * (x * y[l] - y[l - 1]) / x2m1;
    const double d2y = (2.0 * x * dy - l * (l + 1.0) * y[l]) / (1.0 - x * x);
    if (off_cut) {
      r.m1[l] = s * dy;
      r.m2[l] = x2m1 * d2y;
    } else {
      r.m1[l] = -s * dy;
      r.m2[l] = -x2m1 * d2y;
    }
  }
  r.m1[0] = 0.0;
  r.m2[0] = 0.0;
  if (lmax >= 1) r.m2[1] = 0.0;
  return r;
}

}  // namespace

AssociatedRows assoc_p_cut(int lmax, double x) {
  if (std::abs(x) > 1.0) throw std::invalid_argument("assoc_p_cut: requires |x| <= 1");
  std::vector<double> p;
  legendre_p_row(lmax, x, p);
  return associated_from_row(p, x, false);
}

AssociatedRows assoc_p_off(int lmax, double z) {
  if (!(z >= 1.0)) throw std::invalid_argument("assoc_p_off: requires z >= 1");
  std::vector<double> p;
  legendre_p_row(lmax, z, p);
  return associated_from_row(p, z, true);
}

AssociatedRows assoc_q_off(int lmax, double z) {
  std::vector<double> q;
  legendre_q_row(lmax, z, q);
  return associated_from_row(q, z, true);
}

double assoc_legendre_p(int l, int m, double x) {
  if (m < 0 || m > 2) throw std::invalid_argument("assoc_legendre_p: m must be 0..2");
  const AssociatedRows r = std::abs(x) <= 1.0 ? assoc_p_cut(l, x) : assoc_p_off(l, x);
  return m == 0 ? r.m0[l] : (m == 1 ? r.m1[l] : r.m2[l]);
}

double assoc_legendre_q(int l, int m, double z) {
  if (m < 0 || m > 2) throw std::invalid_argument("assoc_legendre_q: m must be 0..2");
  const AssociatedRows r = assoc_q_off(l, z);
  return m == 0 ? r.m0[l] : (m == 1 ? r.m1[l] : r.m2[l]);
}

}  // namespace kohnlab::num
