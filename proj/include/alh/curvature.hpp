#ifndef ALH_CURVATURE_HPP_
#define ALH_CURVATURE_HPP_

#include <vector>

#include "alh/metric.hpp"

namespace alh {

// Christoffel symbols, Ricci tensor and scalar curvature at one point.
struct CurvatureBundle {
  int dim = 0;
  std::vector<Real> gamma;  // [k][i][j] = Gamma^k_ij
  std::vector<Real> ricci;  // [i][j]
  Real scalar = 0;

  explicit CurvatureBundle(int n) : dim(n), gamma(n * n * n, 0), ricci(n * n, 0) {}
  CurvatureBundle() = default;

  Real Gamma(int k, int i, int j) const { return gamma[(k * dim + i) * dim + j]; }
  Real& Gamma(int k, int i, int j) { return gamma[(k * dim + i) * dim + j]; }
  Real Ric(int i, int j) const { return ricci[i * dim + j]; }
  Real& Ric(int i, int j) { return ricci[i * dim + j]; }
};

// Gamma^k_ij alone, laid out as [k][i][j].
std::vector<Real> christoffel(const MetricJet& mj);

// Levi-Civita connection and contracted curvature from a metric jet.
CurvatureBundle curvature(const MetricJet& mj);

// Fully lowered Riemann tensor R_ijkl, sign fixed so that the round unit
// sphere has positive sectional curvature.
std::vector<Real> riemann_lower(const MetricJet& mj, const CurvatureBundle& cb);

// K(u, v) for the plane spanned by u, v. Throws std::invalid_argument when
// the plane is degenerate (denominator below 1e-14 of scale).
Real sectional_curvature(const MetricJet& mj, const std::vector<Real>& u,
                         const std::vector<Real>& v);
Real sectional_curvature(const MetricJet& mj, const std::vector<Real>& riemann,
                         const std::vector<Real>& u, const std::vector<Real>& v);

// D_i D_j V = d_i d_j V - Gamma^k_ij d_k V at p, as a dense n x n matrix.
std::vector<Real> covariant_hessian(const MetricField& g, const ScalarField& V,
                                    const std::vector<Real>& p);

// Mean curvature of the level set {coordinate = value} through p, as the
// divergence of the unit normal along +/- the coordinate direction.
// orientation = +1 picks the normal with positive coordinate component;
// with +1 a coordinate sphere in hyperbolic space has positive H.
Real mean_curvature(const MetricField& g, int level_coord, const std::vector<Real>& p,
                    int orientation);
Real mean_curvature(const MetricJet& mj, int level_coord, int orientation);

}  // namespace alh

#endif  // ALH_CURVATURE_HPP_
