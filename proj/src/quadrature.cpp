#include "alh/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "alh/error.hpp"

namespace alh {

Quad1D gauss_legendre(int n, Real a, Real b) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  Quad1D q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const Real xm = 0.5L * (b + a);
  const Real xl = 0.5L * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    // Newton iteration on P_n, starting from the Chebyshev estimate.
    Real z = std::cos(kPi * (i - 0.25L) / (n + 0.5L));
    Real pp = 0, z1;
    do {
      Real p1 = 1, p2 = 0;
      for (int j = 1; j <= n; ++j) {
        Real p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::fabs(z - z1) > 1e-19L);
    q.nodes[i - 1] = xm - xl * z;
    q.nodes[n - i] = xm + xl * z;
    q.weights[i - 1] = 2 * xl / ((1 - z * z) * pp * pp);
    q.weights[n - i] = q.weights[i - 1];
  }
  return q;
}

Quad1D polar_cos_rule(int n, Real lo, Real hi) {
  if (!(lo >= 0 && hi <= kPi && lo < hi))
    throw std::invalid_argument("polar range must lie inside [0, pi]");
  Quad1D gl = gauss_legendre(n, std::cos(hi), std::cos(lo));
  Quad1D q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    Real t = std::acos(gl.nodes[i]);
    q.nodes[i] = t;
    q.weights[i] = gl.weights[i] / std::sin(t);
  }
  return q;
}

Quad1D periodic_rule(int n, Real lo, Real period) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  Quad1D q;
  q.nodes.resize(n);
  q.weights.assign(n, period / n);
  for (int i = 0; i < n; ++i) q.nodes[i] = lo + period * i / n;
  return q;
}

LevelSetQuadrature level_set_quadrature(const Chart& chart, Real level, int order) {
  LevelSetQuadrature out;
  out.level = level;
  out.order = order;
  out.angular = chart.angular_indices();

  std::vector<Quad1D> rules;
  for (int idx : out.angular) {
    const CoordSpec& c = chart.coord(idx);
    switch (c.kind) {
      case CoordKind::Polar:
        rules.push_back(polar_cos_rule(order, c.lo, c.hi));
        break;
      case CoordKind::Periodic:
        rules.push_back(periodic_rule(order, c.lo, c.period));
        break;
      case CoordKind::Interval:
        if (!std::isfinite((double)c.lo) || !std::isfinite((double)c.hi))
          throw ChartError("cannot integrate over unbounded coordinate '" + c.name + "'");
        rules.push_back(gauss_legendre(order, c.lo, c.hi));
        break;
    }
  }

  const int na = (int)out.angular.size();
  std::vector<int> idx(na, 0);
  std::vector<Real> p(chart.dim(), 0);
  p[chart.asymptotic()] = level;
  while (true) {
    Real w = 1;
    for (int a = 0; a < na; ++a) {
      p[out.angular[a]] = rules[a].nodes[idx[a]];
      w *= rules[a].weights[idx[a]];
    }
    out.nodes.push_back(p);
    out.weights.push_back(w);
    int a = na - 1;
    while (a >= 0 && ++idx[a] == (int)rules[a].nodes.size()) idx[a--] = 0;
    if (a < 0) break;
  }
  return out;
}

}  // namespace alh
