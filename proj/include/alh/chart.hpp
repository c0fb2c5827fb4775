#ifndef ALH_CHART_HPP_
#define ALH_CHART_HPP_

#include <limits>
#include <string>
#include <vector>

#include "alh/jet.hpp"

namespace alh {

// How a coordinate is sampled and integrated over.
//   Interval: plain bounded range, Gauss-Legendre quadrature.
//   Polar:    colatitude-type angle in (0, pi); quadrature nodes are
//             Gauss-Legendre in the cosine.
//   Periodic: wraps with the given period; uniform trapezoid quadrature.
enum class CoordKind { Interval, Polar, Periodic };

// Which way the conformal boundary lies along the asymptotic coordinate.
enum class InfinityDirection { CoordToInfinity, CoordToZero };

struct CoordSpec {
  std::string name;
  CoordKind kind = CoordKind::Interval;
  Real lo = -std::numeric_limits<Real>::infinity();
  Real hi = std::numeric_limits<Real>::infinity();
  Real period = 0;  // Periodic only
};

// An n-dimensional coordinate chart with one distinguished asymptotic
// coordinate. Immutable after construction.
class Chart {
 public:
  Chart() = default;
  // Throws ChartError unless dim >= 3, names are unique, periodic coords
  // have positive period, and asymptotic indexes a non-periodic coordinate.
  Chart(std::vector<CoordSpec> coords, int asymptotic, InfinityDirection direction);

  int dim() const { return (int)coords_.size(); }
  int asymptotic() const { return asymptotic_; }
  InfinityDirection direction() const { return direction_; }
  const CoordSpec& coord(int i) const { return coords_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 if absent

  // All coordinates except the asymptotic one, in chart order.
  std::vector<int> angular_indices() const;

  bool contains(const std::vector<Real>& p) const;
  void require(const std::vector<Real>& p) const;  // throws ChartError

 private:
  std::vector<CoordSpec> coords_;
  std::vector<std::string> names_;
  int asymptotic_ = 0;
  InfinityDirection direction_ = InfinityDirection::CoordToInfinity;
};

// Default inner evaluation cutoff for polar-type charts: the mass pipeline
// only needs large-radius data, and r = 0 is a coordinate singularity.
constexpr Real kDefaultRadialFloor = 1e-3L;

}  // namespace alh

#endif  // ALH_CHART_HPP_
