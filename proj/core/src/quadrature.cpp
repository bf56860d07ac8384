#include "kohnlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace kohnlab::num {

void gauss_legendre_core(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev estimate of the i-th root, refined by Newton.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::abs(z - z1) > 1e-15);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

QuadratureRule QuadratureRule::legendre(int n) {
  if (n < 1) throw std::invalid_argument("QuadratureRule: node count must be >= 1");
  QuadratureRule r;
  gauss_legendre_core(n, r.nodes, r.weights);
  r.exactness = 2 * n - 1;
  return r;
}

QuadratureRule QuadratureRule::legendre(int n, double a, double b) {
  if (!(b > a)) throw std::invalid_argument("QuadratureRule: empty interval");
  QuadratureRule r = legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = mid + half * r.nodes[i];
    r.weights[i] *= half;
  }
  return r;
}

QuadratureRule QuadratureRule::exp_tail(int n, double a, double decay, double cutoff) {
  if (n < 1) throw std::invalid_argument("QuadratureRule: node count must be >= 1");
  if (!(decay > 0)) throw std::invalid_argument("QuadratureRule: decay must be positive");
  if (!(cutoff > a)) throw std::invalid_argument("QuadratureRule: cutoff must exceed a");
  // x = a - log(u)/decay maps u in (u_min, 1] onto [a, cutoff); a rule in u
  // integrates f(x) du/(decay u) and is exact for pure exponentials.
  const double u_min = std::exp(-decay * (cutoff - a));
  QuadratureRule base = legendre(n, u_min, 1.0);
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double u = base.nodes[i];
    r.nodes[n - 1 - i] = a - std::log(u) / decay;  // keep ascending order
    r.weights[n - 1 - i] = base.weights[i] / (decay * u);
  }
  r.exactness = 0;  // not a polynomial rule
  return r;
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
  return s;
}

PanelGrid PanelGrid::geometric(double a, double cutoff, double first_width, double ratio,
                               int per_panel) {
  if (!(cutoff > a)) throw std::invalid_argument("PanelGrid: cutoff must exceed a");
  if (!(first_width > 0) || !(ratio >= 1.0)) throw std::invalid_argument("PanelGrid: bad panel spec");
  if (per_panel < 2) throw std::invalid_argument("PanelGrid: need >= 2 nodes per panel");
  PanelGrid g;
  g.per_panel = per_panel;
  g.breaks.push_back(a);
  double w = first_width;
  while (g.breaks.back() + 1.25 * w < cutoff) {
    g.breaks.push_back(g.breaks.back() + w);
    w *= ratio;
  }
  g.breaks.push_back(cutoff);
  std::vector<double> x, ww;
  gauss_legendre_core(per_panel, x, ww);
  for (int p = 0; p < g.panel_count(); ++p) {
    const double lo = g.breaks[p], hi = g.breaks[p + 1];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int i = 0; i < per_panel; ++i) {
      g.nodes.push_back(mid + half * x[i]);
      g.weights.push_back(half * ww[i]);
    }
  }
  return g;
}

PanelGrid PanelGrid::uniform(double a, double b, int panels, int per_panel) {
  if (!(b > a) || panels < 1) throw std::invalid_argument("PanelGrid: bad interval");
  PanelGrid g;
  g.per_panel = per_panel;
  for (int p = 0; p <= panels; ++p) g.breaks.push_back(a + (b - a) * p / panels);
  std::vector<double> x, ww;
  gauss_legendre_core(per_panel, x, ww);
  for (int p = 0; p < panels; ++p) {
    const double lo = g.breaks[p], hi = g.breaks[p + 1];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int i = 0; i < per_panel; ++i) {
      g.nodes.push_back(mid + half * x[i]);
      g.weights.push_back(half * ww[i]);
    }
  }
  return g;
}

double PanelGrid::integrate(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
  return s;
}

std::vector<double> PanelGrid::interp_weights(int p, double x) const {
  const int off = p * per_panel;
  std::vector<double> bw(per_panel, 1.0);
  // Barycentric weights for the panel's nodes.
  for (int i = 0; i < per_panel; ++i)
    for (int j = 0; j < per_panel; ++j)
      if (j != i) bw[i] /= (nodes[off + i] - nodes[off + j]);
  std::vector<double> w(per_panel, 0.0);
  double denom = 0.0;
  for (int i = 0; i < per_panel; ++i) {
    const double d = x - nodes[off + i];
    if (d == 0.0) {
      std::fill(w.begin(), w.end(), 0.0);
      w[i] = 1.0;
      return w;
    }
    w[i] = bw[i] / d;
    denom += w[i];
  }
  for (double& v : w) v /= denom;
  return w;
}

double PanelGrid::interpolate(int p, const std::vector<double>& nodal, double x) const {
  const auto w = interp_weights(p, x);
  const int off = p * per_panel;
  double s = 0.0;
  for (int i = 0; i < per_panel; ++i) s += w[i] * nodal[off + i];
  return s;
}

}  // namespace kohnlab::num
