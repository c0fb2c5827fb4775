#include "alh/metric.hpp"

#include <cmath>
#include <sstream>

#include "alh/error.hpp"

namespace alh {

namespace {

std::string point_str(const std::vector<Real>& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i)
    os << (i ? ", " : "") << (double)p[i];
  os << ")";
  return os.str();
}

}  // namespace

void MetricField::invert_and_check(MetricJet* mj, const std::vector<Real>& p) {
  const int n = mj->dim;
  // Cholesky factorization g = L L^T; any non-positive pivot means the
  // metric is not positive definite here.
  std::vector<Real> L(n * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      Real s = mj->G(i, j);
      for (int k = 0; k < j; ++k) s -= L[i * n + k] * L[j * n + k];
      if (i == j) {
        if (!(s > 0))
          throw MetricError("metric not positive definite at " + point_str(p));
        L[i * n + i] = std::sqrt(s);
      } else {
        L[i * n + j] = s / L[j * n + j];
      }
    }
  }
  Real det = 1;
  for (int i = 0; i < n; ++i) det *= L[i * n + i] * L[i * n + i];
  mj->det = det;

  // ginv = L^-T L^-1.
  std::vector<Real> Linv(n * n, 0);
  for (int j = 0; j < n; ++j) {
    Linv[j * n + j] = 1 / L[j * n + j];
    for (int i = j + 1; i < n; ++i) {
      Real s = 0;
      for (int k = j; k < i; ++k) s += L[i * n + k] * Linv[k * n + j];
      Linv[i * n + j] = -s / L[i * n + i];
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Real s = 0;
      for (int k = (i > j ? i : j); k < n; ++k)
        s += Linv[k * n + i] * Linv[k * n + j];
      mj->Ginv(i, j) = s;
    }
}

MetricJet MetricField::jet(const std::vector<Real>& p) const {
  chart_.require(p);
  const int n = chart_.dim();
  MetricJet mj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Jet2 c = component_jet(i, j, p);
      mj.G(i, j) = mj.G(j, i) = c.value();
      for (int k = 0; k < n; ++k) {
        mj.dG(k, i, j) = mj.dG(k, j, i) = c.grad(k);
        for (int l = 0; l < n; ++l) {
          Real h = c.hess(k, l);
          mj.ddG(l, k, i, j) = h;
          mj.ddG(l, k, j, i) = h;
        }
      }
    }
  invert_and_check(&mj, p);
  return mj;
}

Real MetricField::component_value(int i, int j, const std::vector<Real>& p) const {
  return component_jet(i <= j ? i : j, i <= j ? j : i, p).value();
}

int ExpressionMetric::pack(int i, int j) const {
  const int n = chart().dim();
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + j;
}

ExpressionMetric::ExpressionMetric(Chart chart_in,
                                   std::map<std::pair<int, int>, std::string> components,
                                   std::vector<std::string> param_names,
                                   std::vector<Real> param_values)
    : MetricField(std::move(chart_in)),
      param_names_(std::move(param_names)),
      param_values_(std::move(param_values)) {
  if (param_names_.size() != param_values_.size())
    throw SpecError("parameter names and values differ in length");
  const int n = chart().dim();
  comps_.resize(n * (n + 1) / 2);
  for (const auto& [ij, src] : components) {
    if (ij.first < 0 || ij.second < 0 || ij.first >= n || ij.second >= n)
      throw SpecError("metric component index out of range");
    comps_[pack(ij.first, ij.second)] =
        parse_expression(src, chart().names(), param_names_);
  }
}

ExpressionMetric::ExpressionMetric(Chart chart_in,
                                   std::map<std::pair<int, int>, Expression> components,
                                   std::vector<Real> param_values)
    : MetricField(std::move(chart_in)), param_values_(std::move(param_values)) {
  const int n = chart().dim();
  comps_.resize(n * (n + 1) / 2);
  for (auto& [ij, e] : components) {
    if (!e.params().empty()) param_names_ = e.params();
    comps_[pack(ij.first, ij.second)] = std::move(e);
  }
  if (param_names_.size() != param_values_.size())
    throw SpecError("parameter names and values differ in length");
}

const Expression* ExpressionMetric::component_expression(int i, int j) const {
  const Expression& e = comps_[pack(i, j)];
  return e.valid() ? &e : nullptr;
}

Jet2 ExpressionMetric::component_jet(int i, int j, const std::vector<Real>& p) const {
  const Expression& e = comps_[pack(i, j)];
  if (!e.valid()) return Jet2::constant(chart().dim(), 0);
  return e.eval_jet2(p, param_values_);
}

Real ExpressionMetric::component_value(int i, int j, const std::vector<Real>& p) const {
  const Expression& e = comps_[pack(i, j)];
  if (!e.valid()) return 0;
  return e.eval(p, param_values_);
}

}  // namespace alh
