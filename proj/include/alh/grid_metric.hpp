#ifndef ALH_GRID_METRIC_HPP_
#define ALH_GRID_METRIC_HPP_

#include <functional>
#include <string>
#include <vector>

#include "alh/metric.hpp"

namespace alh {

// One uniformly spaced sample axis. Periodic axes wrap (node count * step
// must equal the chart period); bounded axes use one-sided stencils near
// the edges.
struct GridAxis {
  Real origin = 0;
  Real step = 0;
  int count = 0;
  bool periodic = false;

  Real max() const { return origin + step * (count - 1); }
  Real period() const { return step * count; }
};

// Metric given by component samples on a rectilinear grid. Values and
// first/second derivatives come from local degree-5 tensor-product
// Lagrange stencils (6 nodes per axis); the second derivatives are
// 4th-order accurate, with one-sided windows within 2 cells of an edge.
class GridMetric : public MetricField {
 public:
  // data: one array per packed upper-triangle component (i <= j, row-major
  // over i then j), each laid out row-major with the last axis fastest.
  GridMetric(Chart chart, std::vector<GridAxis> axes,
             std::vector<std::vector<double>> data);

  // Sample another metric's components onto a grid.
  static GridMetric sample(const MetricField& src, const std::vector<GridAxis>& axes);

  // Delimited-text reader. Header row: coordinate names (chart order),
  // then upper-triangle component names g_<ci>_<cj>. One row per node,
  // last coordinate fastest. Whitespace- or comma-separated.
  static GridMetric load(Chart chart, const std::string& path);

  const std::vector<GridAxis>& axes() const { return axes_; }

 protected:
  Jet2 component_jet(int i, int j, const std::vector<Real>& p) const override;
  Real component_value(int i, int j, const std::vector<Real>& p) const override;

 private:
  struct AxisWindow {
    int start = 0;                 // first stencil node index (may wrap)
    Real w0[6], w1[6], w2[6];      // value/derivative weights
  };
  AxisWindow window(int axis, Real x, bool derivatives) const;
  int pack(int i, int j) const;

  std::vector<GridAxis> axes_;
  std::vector<std::vector<double>> data_;
  std::vector<std::size_t> stride_;
};

// Write src sampled on axes in the format GridMetric::load reads.
void write_grid(const MetricField& src, const std::vector<GridAxis>& axes,
                const std::string& path);

}  // namespace alh

#endif  // ALH_GRID_METRIC_HPP_
