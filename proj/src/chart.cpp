#include "alh/chart.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "alh/error.hpp"

namespace alh {

Chart::Chart(std::vector<CoordSpec> coords, int asymptotic, InfinityDirection direction)
    : coords_(std::move(coords)), asymptotic_(asymptotic), direction_(direction) {
  if ((int)coords_.size() < 3)
    throw ChartError("chart dimension must be at least 3");
  if (asymptotic_ < 0 || asymptotic_ >= (int)coords_.size())
    throw ChartError("asymptotic coordinate index out of range");
  if (coords_[asymptotic_].kind == CoordKind::Periodic)
    throw ChartError("asymptotic coordinate cannot be periodic");
  std::set<std::string> seen;
  for (const auto& c : coords_) {
    if (c.name.empty()) throw ChartError("coordinate with empty name");
    if (!seen.insert(c.name).second)
      throw ChartError("duplicate coordinate name '" + c.name + "'");
    if (c.kind == CoordKind::Periodic && !(c.period > 0))
      throw ChartError("periodic coordinate '" + c.name + "' needs period > 0");
    if (c.kind != CoordKind::Periodic && !(c.lo < c.hi))
      throw ChartError("coordinate '" + c.name + "' has empty range");
    names_.push_back(c.name);
  }
}

int Chart::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return (int)i;
  return -1;
}

std::vector<int> Chart::angular_indices() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (i != asymptotic_) out.push_back(i);
  return out;
}

bool Chart::contains(const std::vector<Real>& p) const {
  if ((int)p.size() != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    const CoordSpec& c = coords_[i];
    if (c.kind == CoordKind::Periodic) continue;
    if (!(p[i] >= c.lo && p[i] <= c.hi)) return false;
  }
  return true;
}

void Chart::require(const std::vector<Real>& p) const {
  if ((int)p.size() != dim())
    throw ChartError("point dimension does not match chart");
  for (int i = 0; i < dim(); ++i) {
    const CoordSpec& c = coords_[i];
    if (c.kind == CoordKind::Periodic) continue;
    if (!(p[i] >= c.lo && p[i] <= c.hi)) {
      std::ostringstream os;
      os << "coordinate " << c.name << " = " << (double)p[i]
         << " outside chart range [" << (double)c.lo << ", " << (double)c.hi << "]";
      throw ChartError(os.str());
    }
  }
}

}  // namespace alh
