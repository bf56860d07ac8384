#pragma once

#include <functional>
#include <vector>

namespace kohnlab::num {

// A concrete quadrature rule: nodes, positive weights, and the polynomial
// exactness degree it advertises on its native domain.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exactness = 0;

  // Gauss-Legendre on [-1, 1].
  static QuadratureRule legendre(int n);
  // Gauss-Legendre mapped to [a, b].
  static QuadratureRule legendre(int n, double a, double b);
  // Semi-infinite [a, inf) with exponential map u = exp(-decay (x-a)),
  // truncated at x = cutoff. Exact (up to the truncated tail) for
  // integrands proportional to exp(-decay (x-a)).
  static QuadratureRule exp_tail(int n, double a, double decay, double cutoff);

  double integrate(const std::function<double(double)>& f) const;
  std::size_t size() const { return nodes.size(); }
};

// Composite Gauss-Legendre grid over contiguous panels. Panel boundaries are
// kept so that kernel-coupled weights can correct the panels crossed by the
// lambda< / lambda> diagonal, and so that smooth functions can be interpolated
// from their nodal values within a panel.
struct PanelGrid {
  std::vector<double> breaks;   // size = panels + 1, ascending
  int per_panel = 0;
  std::vector<double> nodes;    // concatenated, ascending
  std::vector<double> weights;

  // Panels of geometrically growing width starting at `a`, ending at the
  // first boundary >= cutoff.
  static PanelGrid geometric(double a, double cutoff, double first_width, double ratio,
                             int per_panel);
  // Equal-width panels on [a, b].
  static PanelGrid uniform(double a, double b, int panels, int per_panel);

  int panel_count() const { return static_cast<int>(breaks.size()) - 1; }
  int panel_of_node(int node_index) const { return node_index / per_panel; }
  double a() const { return breaks.front(); }
  double b() const { return breaks.back(); }

  double integrate(const std::function<double(double)>& f) const;

  // Barycentric interpolation of nodal values within panel p at point x.
  double interpolate(int p, const std::vector<double>& nodal, double x) const;
  // Interpolation weights: value(x) = sum_i w[i] * nodal[panel offset + i].
  std::vector<double> interp_weights(int p, double x) const;
};

// Gauss-Legendre nodes/weights on [-1,1] (Newton iteration on P_n).
void gauss_legendre_core(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace kohnlab::num
