#ifndef ALH_SAMPLING_HPP_
#define ALH_SAMPLING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "alh/chart.hpp"

namespace alh {

// Deterministic low-discrepancy points. The seed is the start offset into
// the Halton sequence, so every report can state exactly which points it
// used.
class HaltonSampler {
 public:
  HaltonSampler(int dim, std::uint64_t seed);
  std::vector<Real> next();  // in [0,1)^dim

 private:
  int dim_;
  std::uint64_t index_;
};

struct SampleSet {
  std::vector<std::vector<Real>> points;
  std::uint64_t seed = 0;
  std::string description;
};

// count chart points with the asymptotic coordinate log-uniform in
// [radial_lo, radial_hi], polar angles kept a small margin away from the
// axis, periodic angles uniform over one period.
SampleSet chart_samples(const Chart& chart, int count, std::uint64_t seed,
                        Real radial_lo, Real radial_hi);

// count points on the level set {asymptotic = level}.
SampleSet level_samples(const Chart& chart, Real level, int count, std::uint64_t seed);

}  // namespace alh

#endif  // ALH_SAMPLING_HPP_
