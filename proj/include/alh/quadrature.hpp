#ifndef ALH_QUADRATURE_HPP_
#define ALH_QUADRATURE_HPP_

#include <vector>

#include "alh/chart.hpp"

namespace alh {

struct Quad1D {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// Gauss-Legendre rule on [a, b].
Quad1D gauss_legendre(int n, Real a = -1, Real b = 1);

// Rule for a colatitude angle on [lo, hi] in (0, pi): Gauss-Legendre in
// the cosine. Weights are coordinate-measure weights (the metric's own
// area element supplies the sin factors), so w = w_gl / sin(t).
Quad1D polar_cos_rule(int n, Real lo, Real hi);

// Uniform nodes over one period; exact for trigonometric polynomials of
// degree < n and spectrally accurate for smooth periodic integrands.
Quad1D periodic_rule(int n, Real lo, Real period);

// Tensor-product quadrature over the cross-section {asymptotic = level}.
// Weights are products of coordinate-measure weights; the induced area
// element is not included here.
struct LevelSetQuadrature {
  Real level = 0;
  int order = 0;
  std::vector<int> angular;               // angular coordinate indices
  std::vector<std::vector<Real>> nodes;   // full n-dimensional points
  std::vector<Real> weights;
};

LevelSetQuadrature level_set_quadrature(const Chart& chart, Real level, int order);

// Compensated accumulation; totals are stable against summation order to
// the last few bits.
struct KahanSum {
  Real sum = 0, carry = 0;
  void add(Real x) {
    Real y = x - carry;
    Real t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  Real value() const { return sum; }
};

}  // namespace alh

#endif  // ALH_QUADRATURE_HPP_
