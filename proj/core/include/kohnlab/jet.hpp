#pragma once

#include <array>
#include <cmath>

// Forward-mode value / gradient / diagonal-second-derivative bundle over N
// coordinates. Cross second derivatives are not tracked: products compose as
// d2(fg)_i = f'' g + 2 f' g' + f g'' per coordinate, which is all a Laplacian
// needs.

namespace kohnlab::num {

template <int N>
struct Jet {
  double v = 0.0;
  std::array<double, N> d{};    // first derivatives
  std::array<double, N> d2{};   // pure second derivatives

  static Jet constant(double c) {
    Jet j;
    j.v = c;
    return j;
  }
  // Coordinate i with value x.
  static Jet variable(int i, double x) {
    Jet j;
    j.v = x;
    j.d[i] = 1.0;
    return j;
  }

  Jet operator-() const {
    Jet r;
    r.v = -v;
    for (int i = 0; i < N; ++i) {
      r.d[i] = -d[i];
      r.d2[i] = -d2[i];
    }
    return r;
  }
};

template <int N>
Jet<N> operator+(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v + b.v;
  for (int i = 0; i < N; ++i) {
    r.d[i] = a.d[i] + b.d[i];
    r.d2[i] = a.d2[i] + b.d2[i];
  }
  return r;
}

template <int N>
Jet<N> operator-(const Jet<N>& a, const Jet<N>& b) {
  return a + (-b);
}

template <int N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v * b.v;
  for (int i = 0; i < N; ++i) {
    r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    r.d2[i] = a.d2[i] * b.v + 2.0 * a.d[i] * b.d[i] + a.v * b.d2[i];
  }
  return r;
}

template <int N>
Jet<N> operator*(double c, const Jet<N>& a) {
  Jet<N> r;
  r.v = c * a.v;
  for (int i = 0; i < N; ++i) {
    r.d[i] = c * a.d[i];
    r.d2[i] = c * a.d2[i];
  }
  return r;
}

template <int N>
Jet<N> operator+(const Jet<N>& a, double c) {
  Jet<N> r = a;
  r.v += c;
  return r;
}

// Chain rule through a scalar function given f(v), f'(v), f''(v).
template <int N>
Jet<N> compose(const Jet<N>& g, double f, double df, double d2f) {
  Jet<N> r;
  r.v = f;
  for (int i = 0; i < N; ++i) {
    r.d[i] = df * g.d[i];
    r.d2[i] = d2f * g.d[i] * g.d[i] + df * g.d2[i];
  }
  return r;
}

template <int N>
Jet<N> exp(const Jet<N>& a) {
  const double e = std::exp(a.v);
  return compose(a, e, e, e);
}

template <int N>
Jet<N> sqrt(const Jet<N>& a) {
  const double s = std::sqrt(a.v);
  return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}

template <int N>
Jet<N> sin(const Jet<N>& a) {
  return compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v));
}

template <int N>
Jet<N> cos(const Jet<N>& a) {
  return compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v));
}

template <int N>
Jet<N> pow_int(const Jet<N>& a, int p) {
  if (p == 0) return Jet<N>::constant(1.0);
  const double v = a.v;
  const double f = std::pow(v, p);
  const double df = p * std::pow(v, p - 1);
  const double d2f = p > 1 ? p * (p - 1.0) * std::pow(v, p - 2) : 0.0;
  return compose(a, f, df, d2f);
}

// 1/x.
template <int N>
Jet<N> inv(const Jet<N>& a) {
  const double v = a.v;
  return compose(a, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

template <int N>
double laplacian(const Jet<N>& a) {
  double s = 0.0;
  for (int i = 0; i < N; ++i) s += a.d2[i];
  return s;
}

}  // namespace kohnlab::num
