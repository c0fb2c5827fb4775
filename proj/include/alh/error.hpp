#ifndef ALH_ERROR_HPP_
#define ALH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace alh {

// Parse failure; position is a 0-based offset into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Evaluation left a function's domain (sqrt of a negative number, division
// by zero, ...). Carries the offending subexpression.
class EvalDomainError : public std::runtime_error {
 public:
  EvalDomainError(const std::string& what, std::string subexpr)
      : std::runtime_error(what + " in '" + subexpr + "'"),
        subexpr_(std::move(subexpr)) {}
  const std::string& subexpression() const { return subexpr_; }

 private:
  std::string subexpr_;
};

// Metric not positive definite / not invertible at an evaluated point.
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Point outside the chart's declared validity region, or a chart that
// violates its own constraints.
class ChartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file (metric spec, grid table).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alh

#endif  // ALH_ERROR_HPP_
