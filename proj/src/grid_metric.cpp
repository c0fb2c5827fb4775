#include "alh/grid_metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "alh/error.hpp"

namespace alh {

namespace {

constexpr int kStencil = 6;

void validate_axes(const Chart& chart, const std::vector<GridAxis>& axes) {
  if ((int)axes.size() != chart.dim())
    throw SpecError("grid axes do not match chart dimension");
  for (int i = 0; i < chart.dim(); ++i) {
    const GridAxis& a = axes[i];
    if (a.count < kStencil)
      throw SpecError("grid axis '" + chart.coord(i).name + "' needs at least 6 nodes");
    if (!(a.step > 0))
      throw SpecError("grid axis '" + chart.coord(i).name + "' needs positive spacing");
    bool chart_periodic = chart.coord(i).kind == CoordKind::Periodic;
    if (a.periodic != chart_periodic)
      throw SpecError("grid axis '" + chart.coord(i).name +
                      "' periodicity disagrees with the chart");
    if (a.periodic) {
      Real period = chart.coord(i).period;
      if (std::fabs(a.period() - period) > 1e-9L * period)
        throw SpecError("grid axis '" + chart.coord(i).name +
                        "' does not tile the declared period");
    }
  }
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int GridMetric::pack(int i, int j) const {
  const int n = chart().dim();
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + j;
}

GridMetric::GridMetric(Chart chart_in, std::vector<GridAxis> axes,
                       std::vector<std::vector<double>> data)
    : MetricField(std::move(chart_in)), axes_(std::move(axes)), data_(std::move(data)) {
  validate_axes(chart(), axes_);
  const int n = chart().dim();
  if ((int)data_.size() != n * (n + 1) / 2)
    throw SpecError("grid data must hold one array per upper-triangle component");
  std::size_t total = 1;
  stride_.assign(n, 1);
  for (int i = n - 1; i >= 0; --i) {
    stride_[i] = total;
    total *= (std::size_t)axes_[i].count;
  }
  for (const auto& comp : data_)
    if (comp.size() != total)
      throw SpecError("grid component array size does not match the axes");
}

GridMetric::AxisWindow GridMetric::window(int axis, Real x, bool derivatives) const {
  const GridAxis& a = axes_[axis];
  Real s = (x - a.origin) / a.step;
  int base = (int)std::floor(s);
  int start = base - 2;
  if (!a.periodic) {
    if (x < a.origin - 1e-9L * a.step || x > a.max() + 1e-9L * a.step)
      throw ChartError("point leaves the sampled grid along axis '" +
                       chart().coord(axis).name + "'");
    start = std::clamp(start, 0, a.count - kStencil);
  }

  AxisWindow w;
  w.start = start;
  // Work in units of the step: stencil nodes sit at integers 0..5 and the
  // evaluation point at xi. Avoids cancellation for fine grids.
  Real xi = s - start;
  for (int m = 0; m < kStencil; ++m) {
    Real denom = 1;
    for (int q = 0; q < kStencil; ++q)
      if (q != m) denom *= (Real)(m - q);
    Real p0 = 1;
    for (int q = 0; q < kStencil; ++q)
      if (q != m) p0 *= xi - q;
    w.w0[m] = p0 / denom;
    if (!derivatives) {
      w.w1[m] = w.w2[m] = 0;
      continue;
    }
    Real p1 = 0, p2 = 0;
    for (int a1 = 0; a1 < kStencil; ++a1) {
      if (a1 == m) continue;
      Real prod = 1;
      for (int q = 0; q < kStencil; ++q)
        if (q != m && q != a1) prod *= xi - q;
      p1 += prod;
      for (int b = 0; b < kStencil; ++b) {
        if (b == m || b == a1) continue;
        Real prod2 = 1;
        for (int q = 0; q < kStencil; ++q)
          if (q != m && q != a1 && q != b) prod2 *= xi - q;
        p2 += prod2;
      }
    }
    w.w1[m] = p1 / (denom * a.step);
    w.w2[m] = p2 / (denom * a.step * a.step);
  }
  return w;
}

Jet2 GridMetric::component_jet(int i, int j, const std::vector<Real>& p) const {
  const int n = chart().dim();
  const std::vector<double>& comp = data_[pack(i, j)];

  std::vector<AxisWindow> win(n);
  for (int a = 0; a < n; ++a) win[a] = window(a, p[a], true);

  Jet2 out(n, 0);
  std::vector<int> m(n, 0);
  std::vector<std::size_t> node_index(n);
  while (true) {
    std::size_t flat = 0;
    for (int a = 0; a < n; ++a) {
      int idx = win[a].start + m[a];
      if (axes_[a].periodic) {
        idx %= axes_[a].count;
        if (idx < 0) idx += axes_[a].count;
      }
      node_index[a] = (std::size_t)idx;
      flat += node_index[a] * stride_[a];
    }
    Real d = (Real)comp[flat];

    Real prod0 = 1;
    for (int a = 0; a < n; ++a) prod0 *= win[a].w0[m[a]];
    out.value() += d * prod0;
    for (int k = 0; k < n; ++k) {
      Real pk = d;
      for (int a = 0; a < n; ++a) pk *= (a == k) ? win[a].w1[m[a]] : win[a].w0[m[a]];
      out.grad(k) += pk;
      for (int l = k; l < n; ++l) {
        Real pkl = d;
        if (l == k) {
          for (int a = 0; a < n; ++a)
            pkl *= (a == k) ? win[a].w2[m[a]] : win[a].w0[m[a]];
        } else {
          for (int a = 0; a < n; ++a)
            pkl *= (a == k || a == l) ? win[a].w1[m[a]] : win[a].w0[m[a]];
        }
        out.hess(k, l) += pkl;
      }
    }

    int a = n - 1;
    while (a >= 0 && ++m[a] == kStencil) m[a--] = 0;
    if (a < 0) break;
  }
  return out;
}

Real GridMetric::component_value(int i, int j, const std::vector<Real>& p) const {
  const int n = chart().dim();
  const std::vector<double>& comp = data_[pack(i, j)];
  std::vector<AxisWindow> win(n);
  for (int a = 0; a < n; ++a) win[a] = window(a, p[a], false);

  Real out = 0;
  std::vector<int> m(n, 0);
  while (true) {
    std::size_t flat = 0;
    Real prod = 1;
    for (int a = 0; a < n; ++a) {
      int idx = win[a].start + m[a];
      if (axes_[a].periodic) {
        idx %= axes_[a].count;
        if (idx < 0) idx += axes_[a].count;
      }
      flat += (std::size_t)idx * stride_[a];
      prod *= win[a].w0[m[a]];
    }
    out += (Real)comp[flat] * prod;
    int a = n - 1;
    while (a >= 0 && ++m[a] == kStencil) m[a--] = 0;
    if (a < 0) break;
  }
  return out;
}

GridMetric GridMetric::sample(const MetricField& src, const std::vector<GridAxis>& axes) {
  const Chart& chart = src.chart();
  validate_axes(chart, axes);
  const int n = chart.dim();
  std::size_t total = 1;
  for (const auto& a : axes) total *= (std::size_t)a.count;

  std::vector<std::vector<double>> data(n * (n + 1) / 2,
                                        std::vector<double>(total, 0.0));
  std::vector<int> idx(n, 0);
  std::vector<Real> p(n);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (int a = 0; a < n; ++a) p[a] = axes[a].origin + axes[a].step * idx[a];
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j, ++c)
        data[c][flat] = (double)src.component(i, j, p);
    int a = n - 1;
    while (a >= 0 && ++idx[a] == axes[a].count) idx[a--] = 0;
  }
  return GridMetric(chart, axes, std::move(data));
}

GridMetric GridMetric::load(Chart chart, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open grid file '" + path + "'");
  const int n = chart.dim();
  const int ncomp = n * (n + 1) / 2;

  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    header = split_tokens(line);
    if (!header.empty() && header[0][0] != '#') break;
    header.clear();
  }
  if ((int)header.size() != n + ncomp)
    throw SpecError("grid header must name " + std::to_string(n) + " coordinates and " +
                    std::to_string(ncomp) + " components");
  for (int i = 0; i < n; ++i)
    if (header[i] != chart.coord(i).name)
      throw SpecError("grid header coordinate '" + header[i] + "' does not match chart '" +
                      chart.coord(i).name + "'");
  {
    int c = n;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j, ++c) {
        std::string want = "g_" + chart.coord(i).name + "_" + chart.coord(j).name;
        if (header[c] != want)
          throw SpecError("grid header component '" + header[c] + "', expected '" + want + "'");
      }
  }

  std::vector<std::vector<Real>> coords(n);
  std::vector<std::vector<double>> values(ncomp);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> tok = split_tokens(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if ((int)tok.size() != n + ncomp)
      throw SpecError("grid row " + std::to_string(rows + 1) + " has " +
                      std::to_string(tok.size()) + " fields, expected " +
                      std::to_string(n + ncomp));
    for (int i = 0; i < n; ++i) coords[i].push_back(strtold(tok[i].c_str(), nullptr));
    for (int c = 0; c < ncomp; ++c)
      values[c].push_back(strtod(tok[n + c].c_str(), nullptr));
    ++rows;
  }
  if (rows == 0) throw SpecError("grid file has no data rows");

  // Reconstruct the axes from the distinct values of each column.
  std::vector<GridAxis> axes(n);
  std::vector<std::vector<Real>> levels(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Real> u = coords[i];
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if ((int)u.size() < kStencil)
      throw SpecError("grid axis '" + chart.coord(i).name + "' has fewer than 6 levels");
    Real step = (u.back() - u.front()) / (Real)(u.size() - 1);
    for (std::size_t k = 0; k + 1 < u.size(); ++k)
      if (std::fabs(u[k + 1] - u[k] - step) > 1e-9L * step)
        throw SpecError("grid axis '" + chart.coord(i).name + "' is not uniformly spaced");
    axes[i].origin = u.front();
    axes[i].step = step;
    axes[i].count = (int)u.size();
    axes[i].periodic = chart.coord(i).kind == CoordKind::Periodic;
    levels[i] = std::move(u);
  }

  std::size_t total = 1;
  std::vector<std::size_t> stride(n, 1);
  for (int i = n - 1; i >= 0; --i) {
    stride[i] = total;
    total *= (std::size_t)axes[i].count;
  }
  if (rows != total)
    throw SpecError("grid has " + std::to_string(rows) + " rows but the axes span " +
                    std::to_string(total) + " nodes");

  std::vector<std::vector<double>> data(ncomp, std::vector<double>(total, 0.0));
  std::vector<char> seen(total, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t flat = 0;
    for (int i = 0; i < n; ++i) {
      Real v = coords[i][r];
      long idx = std::lround((double)((v - axes[i].origin) / axes[i].step));
      if (idx < 0 || idx >= axes[i].count ||
          std::fabs(v - (axes[i].origin + axes[i].step * idx)) > 1e-9L * axes[i].step)
        throw SpecError("grid row " + std::to_string(r + 1) + " is off-lattice");
      flat += (std::size_t)idx * stride[i];
    }
    if (seen[flat])
      throw SpecError("grid row " + std::to_string(r + 1) + " duplicates a node");
    seen[flat] = 1;
    for (int c = 0; c < ncomp; ++c) data[c][flat] = values[c][r];
  }
  return GridMetric(std::move(chart), std::move(axes), std::move(data));
}

void write_grid(const MetricField& src, const std::vector<GridAxis>& axes,
                const std::string& path) {
  const Chart& chart = src.chart();
  validate_axes(chart, axes);
  const int n = chart.dim();
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write grid file '" + path + "'");

  for (int i = 0; i < n; ++i) out << (i ? " " : "") << chart.coord(i).name;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      out << " g_" << chart.coord(i).name << "_" << chart.coord(j).name;
  out << "\n";

  std::vector<int> idx(n, 0);
  std::vector<Real> p(n);
  char buf[40];
  while (true) {
    for (int a = 0; a < n; ++a) p[a] = axes[a].origin + axes[a].step * idx[a];
    for (int a = 0; a < n; ++a) {
      snprintf(buf, sizeof buf, "%.17g", (double)p[a]);
      out << (a ? " " : "") << buf;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        snprintf(buf, sizeof buf, "%.17g", (double)src.component(i, j, p));
        out << " " << buf;
      }
    out << "\n";
    int a = n - 1;
    while (a >= 0 && ++idx[a] == axes[a].count) idx[a--] = 0;
    if (a < 0) break;
  }
}

}  // namespace alh
