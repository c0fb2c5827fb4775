#ifndef ALH_METRIC_HPP_
#define ALH_METRIC_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "alh/chart.hpp"
#include "alh/expr.hpp"
#include "alh/jet.hpp"

namespace alh {

// Metric, inverse, and first/second coordinate derivatives at one point.
// Symmetric blocks are filled on both sides of the diagonal.
struct MetricJet {
  int dim = 0;
  std::vector<Real> g;     // [i][j]
  std::vector<Real> ginv;  // [i][j]
  std::vector<Real> dg;    // [k][i][j] = d_k g_ij
  std::vector<Real> ddg;   // [l][k][i][j] = d_l d_k g_ij
  Real det = 0;

  explicit MetricJet(int n)
      : dim(n), g(n * n, 0), ginv(n * n, 0), dg(n * n * n, 0), ddg(n * n * n * n, 0) {}
  MetricJet() = default;

  Real G(int i, int j) const { return g[i * dim + j]; }
  Real& G(int i, int j) { return g[i * dim + j]; }
  Real Ginv(int i, int j) const { return ginv[i * dim + j]; }
  Real& Ginv(int i, int j) { return ginv[i * dim + j]; }
  Real dG(int k, int i, int j) const { return dg[(k * dim + i) * dim + j]; }
  Real& dG(int k, int i, int j) { return dg[(k * dim + i) * dim + j]; }
  Real ddG(int l, int k, int i, int j) const {
    return ddg[((l * dim + k) * dim + i) * dim + j];
  }
  Real& ddG(int l, int k, int i, int j) {
    return ddg[((l * dim + k) * dim + i) * dim + j];
  }
};

// A scalar field given in closed form on a chart (static potentials, test
// perturbations). Pure and reentrant.
struct ScalarField {
  Expression expr;
  std::vector<Real> param_values;

  Jet2 jet(const std::vector<Real>& p) const { return expr.eval_jet2(p, param_values); }
  Real value(const std::vector<Real>& p) const { return expr.eval(p, param_values); }
  ScalarField scaled(Real factor) const { return {expr.scaled(factor), param_values}; }
};

// A Riemannian metric on a chart, evaluable to a MetricJet at any chart
// point. Positive definiteness is checked at every evaluation; failure is
// a hard MetricError. Immutable after construction.
class MetricField {
 public:
  explicit MetricField(Chart chart) : chart_(std::move(chart)) {}
  virtual ~MetricField() = default;

  const Chart& chart() const { return chart_; }

  // Components, inverse, and derivatives at p. Throws ChartError for
  // points outside the chart and MetricError if g fails its Cholesky test.
  virtual MetricJet jet(const std::vector<Real>& p) const;

  Real component(int i, int j, const std::vector<Real>& p) const {
    return component_value(i, j, p);
  }

 protected:
  // i <= j; derived classes supply per-component jets.
  virtual Jet2 component_jet(int i, int j, const std::vector<Real>& p) const = 0;
  virtual Real component_value(int i, int j, const std::vector<Real>& p) const;

  // Cholesky-based SPD check; fills ginv and det or throws MetricError.
  static void invert_and_check(MetricJet* mj, const std::vector<Real>& p);

 private:
  Chart chart_;
};

// Free-function spelling of the evaluation contract.
inline MetricJet metric_jet(const MetricField& g, const std::vector<Real>& p) {
  return g.jet(p);
}

// Metric with closed-form components (upper triangle; absent means 0).
class ExpressionMetric : public MetricField {
 public:
  ExpressionMetric(Chart chart, std::map<std::pair<int, int>, std::string> components,
                   std::vector<std::string> param_names = {},
                   std::vector<Real> param_values = {});
  ExpressionMetric(Chart chart, std::map<std::pair<int, int>, Expression> components,
                   std::vector<Real> param_values);

  const Expression* component_expression(int i, int j) const;  // null if 0
  const std::vector<Real>& param_values() const { return param_values_; }
  const std::vector<std::string>& param_names() const { return param_names_; }

 protected:
  Jet2 component_jet(int i, int j, const std::vector<Real>& p) const override;
  Real component_value(int i, int j, const std::vector<Real>& p) const override;

 private:
  int pack(int i, int j) const;
  std::vector<Expression> comps_;  // packed upper triangle; !valid() means 0
  std::vector<std::string> param_names_;
  std::vector<Real> param_values_;
};

}  // namespace alh

#endif  // ALH_METRIC_HPP_
