#include "alh/sampling.hpp"

#include <cmath>
#include <sstream>

namespace alh {

namespace {

const int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

Real halton(std::uint64_t index, int base) {
  Real f = 1, r = 0;
  while (index > 0) {
    f /= base;
    r += f * (Real)(index % base);
    index /= base;
  }
  return r;
}

Real place(const CoordSpec& c, Real u) {
  switch (c.kind) {
    case CoordKind::Periodic:
      return c.lo + u * c.period;
    case CoordKind::Polar: {
      Real margin = 0.05L * (c.hi - c.lo);
      return c.lo + margin + u * (c.hi - c.lo - 2 * margin);
    }
    case CoordKind::Interval:
    default: {
      Real lo = c.lo, hi = c.hi;
      return lo + u * (hi - lo);
    }
  }
}

}  // namespace

HaltonSampler::HaltonSampler(int dim, std::uint64_t seed) : dim_(dim), index_(seed + 1) {}

std::vector<Real> HaltonSampler::next() {
  std::vector<Real> u(dim_);
  for (int i = 0; i < dim_; ++i) u[i] = halton(index_, kPrimes[i % 12]);
  ++index_;
  return u;
}

SampleSet chart_samples(const Chart& chart, int count, std::uint64_t seed,
                        Real radial_lo, Real radial_hi) {
  const int n = chart.dim();
  HaltonSampler h(n, seed);
  SampleSet out;
  out.seed = seed;
  std::ostringstream os;
  os << count << " Halton points, seed " << seed << ", radial range ["
     << (double)radial_lo << ", " << (double)radial_hi << "]";
  out.description = os.str();
  for (int k = 0; k < count; ++k) {
    std::vector<Real> u = h.next();
    std::vector<Real> p(n);
    for (int i = 0; i < n; ++i) {
      if (i == chart.asymptotic())
        p[i] = radial_lo * std::pow(radial_hi / radial_lo, u[i]);
      else
        p[i] = place(chart.coord(i), u[i]);
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

SampleSet level_samples(const Chart& chart, Real level, int count, std::uint64_t seed) {
  const int n = chart.dim();
  HaltonSampler h(n - 1, seed);
  SampleSet out;
  out.seed = seed;
  std::ostringstream os;
  os << count << " Halton points on level " << (double)level << ", seed " << seed;
  out.description = os.str();
  for (int k = 0; k < count; ++k) {
    std::vector<Real> u = h.next();
    std::vector<Real> p(n);
    int a = 0;
    for (int i = 0; i < n; ++i) {
      if (i == chart.asymptotic())
        p[i] = level;
      else
        p[i] = place(chart.coord(i), u[a++]);
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

}  // namespace alh
