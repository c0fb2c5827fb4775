#ifndef ALH_EXPR_HPP_
#define ALH_EXPR_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "alh/jet.hpp"

namespace alh {

enum class BinOp { Add, Sub, Mul, Div, Pow };
enum class Func { Sqrt, Exp, Log, Sin, Cos, Tan, Sinh, Cosh, Tanh, Abs };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// One AST node. Immutable after parsing; shared freely across threads.
struct ExprNode {
  enum class Kind { Number, Coord, Param, Neg, Binary, Call };
  Kind kind;
  Real number = 0;       // Number
  int slot = -1;         // Coord/Param index into the declared name lists
  std::string name;      // Coord/Param spelling
  BinOp bin = BinOp::Add;
  Func func = Func::Sqrt;
  ExprPtr lhs, rhs;      // rhs unused for Neg/Call
};

// A parsed scalar expression over declared coordinates and parameters.
class Expression {
 public:
  Expression() = default;
  Expression(ExprPtr root, std::vector<std::string> coords,
             std::vector<std::string> params);

  bool valid() const { return root_ != nullptr; }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<std::string>& params() const { return params_; }

  // Value together with exact first and second partials in the coordinates.
  // point.size() == coords().size(), param_values.size() == params().size().
  Jet2 eval_jet2(const std::vector<Real>& point,
                 const std::vector<Real>& param_values) const;

  // Value-only fast path.
  Real eval(const std::vector<Real>& point,
            const std::vector<Real>& param_values) const;

  Jet2 eval_jet2(const std::vector<Real>& point,
                 const std::map<std::string, Real>& params_by_name) const;

  std::string str() const;

  // A copy scaled by a constant factor (wraps the tree, no rewriting).
  Expression scaled(Real factor) const;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  std::vector<Real> resolve(const std::map<std::string, Real>& by_name) const;

  ExprPtr root_;
  std::vector<std::string> coords_;
  std::vector<std::string> params_;
};

// Recursive-descent parser. Precedence: ^ over * / over + -, with ^
// right-associative and tighter than unary minus. Every identifier must be
// a declared coordinate or parameter; anything else is a ParseError.
Expression parse_expression(std::string_view src,
                            std::vector<std::string> coords,
                            std::vector<std::string> params = {});

std::string to_string(const ExprNode& node);

}  // namespace alh

#endif  // ALH_EXPR_HPP_
