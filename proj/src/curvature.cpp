#include "alh/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace alh {

namespace {

// d_m g^{kl} = -g^{ka} (d_m g_ab) g^{bl}
Real dginv(const MetricJet& mj, int m, int k, int l) {
  const int n = mj.dim;
  Real s = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      s -= mj.Ginv(k, a) * mj.dG(m, a, b) * mj.Ginv(b, l);
  return s;
}

}  // namespace

std::vector<Real> christoffel(const MetricJet& mj) {
  const int n = mj.dim;
  std::vector<Real> gamma((std::size_t)n * n * n, 0);
  auto Gam = [&](int k, int i, int j) -> Real& {
    return gamma[((std::size_t)k * n + i) * n + j];
  };
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Real s = 0;
        for (int l = 0; l < n; ++l)
          s += mj.Ginv(k, l) * (mj.dG(i, j, l) + mj.dG(j, i, l) - mj.dG(l, i, j));
        Gam(k, i, j) = 0.5L * s;
        Gam(k, j, i) = Gam(k, i, j);
      }
  return gamma;
}

CurvatureBundle curvature(const MetricJet& mj) {
  const int n = mj.dim;
  CurvatureBundle cb(n);
  cb.gamma = christoffel(mj);

  // d_m Gamma^k_ij
  std::vector<Real> dgamma((std::size_t)n * n * n * n, 0);
  auto dGam = [&](int m, int k, int i, int j) -> Real& {
    return dgamma[(((std::size_t)m * n + k) * n + i) * n + j];
  };
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Real s = 0;
          for (int l = 0; l < n; ++l) {
            s += dginv(mj, m, k, l) * (mj.dG(i, j, l) + mj.dG(j, i, l) - mj.dG(l, i, j));
            s += mj.Ginv(k, l) *
                 (mj.ddG(m, i, j, l) + mj.ddG(m, j, i, l) - mj.ddG(m, l, i, j));
          }
          dGam(m, k, i, j) = 0.5L * s;
          dGam(m, k, j, i) = dGam(m, k, i, j);
        }

  // R_ij = d_k Gamma^k_ij - d_i Gamma^k_kj + Gamma^k_kl Gamma^l_ij
  //        - Gamma^k_il Gamma^l_kj
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Real s = 0;
      for (int k = 0; k < n; ++k) {
        s += dGam(k, k, i, j) - dGam(i, k, k, j);
        for (int l = 0; l < n; ++l)
          s += cb.Gamma(k, k, l) * cb.Gamma(l, i, j) -
               cb.Gamma(k, i, l) * cb.Gamma(l, k, j);
      }
      cb.Ric(i, j) = s;
    }

  Real R = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R += mj.Ginv(i, j) * cb.Ric(i, j);
  cb.scalar = R;
  return cb;
}

std::vector<Real> riemann_lower(const MetricJet& mj, const CurvatureBundle& cb) {
  const int n = mj.dim;
  std::vector<Real> rm((std::size_t)n * n * n * n, 0);
  auto Rm = [&](int i, int j, int k, int l) -> Real& {
    return rm[(((std::size_t)i * n + j) * n + k) * n + l];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Real s = 0.5L * (mj.ddG(j, k, i, l) + mj.ddG(i, l, j, k) -
                           mj.ddG(j, l, i, k) - mj.ddG(i, k, j, l));
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              s += mj.G(a, b) * (cb.Gamma(a, j, k) * cb.Gamma(b, i, l) -
                                 cb.Gamma(a, j, l) * cb.Gamma(b, i, k));
          Rm(i, j, k, l) = s;
        }
  return rm;
}

Real sectional_curvature(const MetricJet& mj, const std::vector<Real>& riemann,
                         const std::vector<Real>& u, const std::vector<Real>& v) {
  const int n = mj.dim;
  auto Rm = [&](int i, int j, int k, int l) {
    return riemann[(((std::size_t)i * n + j) * n + k) * n + l];
  };
  Real num = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          num += Rm(i, j, k, l) * u[i] * v[j] * u[k] * v[l];

  Real uu = 0, vv = 0, uv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      uu += mj.G(i, j) * u[i] * u[j];
      vv += mj.G(i, j) * v[i] * v[j];
      uv += mj.G(i, j) * u[i] * v[j];
    }
  Real den = uu * vv - uv * uv;
  if (!(den > 1e-14L * uu * vv))
    throw std::invalid_argument("degenerate plane for sectional curvature");
  return num / den;
}

Real sectional_curvature(const MetricJet& mj, const std::vector<Real>& u,
                         const std::vector<Real>& v) {
  CurvatureBundle cb = curvature(mj);
  return sectional_curvature(mj, riemann_lower(mj, cb), u, v);
}

std::vector<Real> covariant_hessian(const MetricField& g, const ScalarField& V,
                                    const std::vector<Real>& p) {
  MetricJet mj = g.jet(p);
  std::vector<Real> gamma = christoffel(mj);
  Jet2 vj = V.jet(p);
  const int n = mj.dim;
  std::vector<Real> h(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Real s = vj.hess(i, j);
      for (int k = 0; k < n; ++k) s -= gamma[((std::size_t)k * n + i) * n + j] * vj.grad(k);
      h[i * n + j] = s;
    }
  return h;
}

Real mean_curvature(const MetricJet& mj, int level_coord, int orientation) {
  const int n = mj.dim;
  const int c = level_coord;
  Real w2 = mj.Ginv(c, c);
  if (!(w2 > 1e-28L))
    throw std::invalid_argument("degenerate level set: |d coord|_g vanishes");
  Real w = std::sqrt(w2);

  std::vector<Real> gamma = christoffel(mj);
  auto Gam = [&](int k, int i, int j) {
    return gamma[((std::size_t)k * n + i) * n + j];
  };
  Real s = 0;
  for (int i = 0; i < n; ++i) {
    Real dw_i = dginv(mj, i, c, c) / (2 * w);
    s -= mj.Ginv(i, c) * dw_i / w2;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s -= mj.Ginv(i, j) * Gam(c, i, j) / w;
  return orientation >= 0 ? s : -s;
}

Real mean_curvature(const MetricField& g, int level_coord, const std::vector<Real>& p,
                    int orientation) {
  return mean_curvature(g.jet(p), level_coord, orientation);
}

}  // namespace alh
