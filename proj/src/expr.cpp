#include "alh/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "alh/error.hpp"

namespace alh {

namespace {

const std::pair<const char*, Func> kFuncs[] = {
    {"sqrt", Func::Sqrt}, {"exp", Func::Exp},   {"log", Func::Log},
    {"sin", Func::Sin},   {"cos", Func::Cos},   {"tan", Func::Tan},
    {"sinh", Func::Sinh}, {"cosh", Func::Cosh}, {"tanh", Func::Tanh},
    {"abs", Func::Abs}};

bool lookup_func(const std::string& name, Func* out) {
  for (const auto& [fname, f] : kFuncs)
    if (name == fname) {
      *out = f;
      return true;
    }
  return false;
}

const char* func_name(Func f) {
  for (const auto& [fname, ff] : kFuncs)
    if (ff == f) return fname;
  return "?";
}

int find_name(const std::vector<std::string>& names, const std::string& s) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return (int)i;
  return -1;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& coords,
         const std::vector<std::string>& params)
      : src_(src), coords_(coords), params_(params) {}  // src_ owns a copy: strtold needs NUL termination

  ExprPtr run() {
    ExprPtr e = expression();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expression() {
    ExprPtr a = term();
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      ExprPtr b = term();
      a = make_bin(c == '+' ? BinOp::Add : BinOp::Sub, a, b);
    }
    return a;
  }

  ExprPtr term() {
    ExprPtr a = unary();
    while (true) {
      char c = peek();
      if (c != '*' && c != '/') break;
      ++pos_;
      ExprPtr b = unary();
      a = make_bin(c == '*' ? BinOp::Mul : BinOp::Div, a, b);
    }
    return a;
  }

  ExprPtr unary() {
    if (consume('-')) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Neg;
      n->lhs = unary();
      return n;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (consume('^')) {
      // Right-associative; the exponent may start with a unary minus.
      ExprPtr exp = unary();
      return make_bin(BinOp::Pow, base, exp);
    }
    return base;
  }

  ExprPtr primary() {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      ExprPtr e = expression();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit((unsigned char)c) || c == '.') return number();
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string name = identifier();
      Func f;
      if (lookup_func(name, &f)) {
        if (!consume('(')) throw ParseError("expected '(' after '" + name + "'", pos_);
        ExprPtr arg = expression();
        if (!consume(')')) throw ParseError("expected ')'", pos_);
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::Call;
        n->func = f;
        n->lhs = arg;
        return n;
      }
      auto n = std::make_shared<ExprNode>();
      int slot = find_name(coords_, name);
      if (slot >= 0) {
        n->kind = ExprNode::Kind::Coord;
      } else if ((slot = find_name(params_, name)) >= 0) {
        n->kind = ExprNode::Kind::Param;
      } else {
        throw ParseError("unknown identifier '" + name + "'", start);
      }
      n->slot = slot;
      n->name = name;
      return n;
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  ExprPtr number() {
    const char* begin = src_.data() + pos_;
    char* end = nullptr;
    Real v = strtold(begin, &end);
    if (end == begin) throw ParseError("malformed number", pos_);
    pos_ += (std::size_t)(end - begin);
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Number;
    n->number = v;
    return n;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  static ExprPtr make_bin(BinOp op, ExprPtr a, ExprPtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Binary;
    n->bin = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  std::string src_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& coords_;
  const std::vector<std::string>& params_;
};

int precedence(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::Binary:
      switch (n.bin) {
        case BinOp::Add:
        case BinOp::Sub:
          return 1;
        case BinOp::Mul:
        case BinOp::Div:
          return 2;
        case BinOp::Pow:
          return 4;
      }
      return 1;
    case ExprNode::Kind::Neg:
      return 3;
    default:
      return 5;
  }
}

void print_node(const ExprNode& n, int min_prec, std::string* out) {
  int prec = precedence(n);
  bool parens = prec < min_prec;
  if (parens) out->push_back('(');
  switch (n.kind) {
    case ExprNode::Kind::Number: {
      Real v = n.number;
      if (v == std::floor(v) && std::fabs(v) < 1e15L) {
        char buf[32];
        snprintf(buf, sizeof buf, "%.0Lf", v);
        *out += buf;
      } else {
        char buf[48];
        snprintf(buf, sizeof buf, "%.21Lg", v);
        *out += buf;
      }
      break;
    }
    case ExprNode::Kind::Coord:
    case ExprNode::Kind::Param:
      *out += n.name;
      break;
    case ExprNode::Kind::Neg:
      *out += "-";
      print_node(*n.lhs, 3, out);
      break;
    case ExprNode::Kind::Call:
      *out += func_name(n.func);
      out->push_back('(');
      print_node(*n.lhs, 0, out);
      out->push_back(')');
      break;
    case ExprNode::Kind::Binary: {
      const char* op = "";
      int lp = prec, rp = prec + 1;
      switch (n.bin) {
        case BinOp::Add: op = "+"; rp = prec; break;
        case BinOp::Sub: op = "-"; break;
        case BinOp::Mul: op = "*"; rp = prec; break;
        case BinOp::Div: op = "/"; break;
        case BinOp::Pow: op = "^"; lp = prec + 1; rp = 3; break;
      }
      print_node(*n.lhs, lp, out);
      *out += op;
      print_node(*n.rhs, rp, out);
      break;
    }
  }
  if (parens) out->push_back(')');
}

bool node_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprNode::Kind::Number:
      return a.number == b.number;
    case ExprNode::Kind::Coord:
    case ExprNode::Kind::Param:
      return a.slot == b.slot && a.name == b.name;
    case ExprNode::Kind::Neg:
      return node_equal(*a.lhs, *b.lhs);
    case ExprNode::Kind::Call:
      return a.func == b.func && node_equal(*a.lhs, *b.lhs);
    case ExprNode::Kind::Binary:
      return a.bin == b.bin && node_equal(*a.lhs, *b.lhs) &&
             node_equal(*a.rhs, *b.rhs);
  }
  return false;
}

[[noreturn]] void domain_error(const char* what, const ExprNode& n) {
  throw EvalDomainError(what, to_string(n));
}

void check_finite(Real v, const ExprNode& n) {
  if (!std::isfinite(v)) domain_error("non-finite result", n);
}

Jet2 eval_node(const ExprNode& n, const std::vector<Real>& point,
               const std::vector<Real>& params) {
  const int dim = (int)point.size();
  switch (n.kind) {
    case ExprNode::Kind::Number:
      return Jet2::constant(dim, n.number);
    case ExprNode::Kind::Coord:
      return Jet2::variable(dim, n.slot, point[n.slot]);
    case ExprNode::Kind::Param:
      return Jet2::constant(dim, params[n.slot]);
    case ExprNode::Kind::Neg:
      return -eval_node(*n.lhs, point, params);
    case ExprNode::Kind::Call: {
      Jet2 u = eval_node(*n.lhs, point, params);
      Real v = u.value();
      switch (n.func) {
        case Func::Sqrt:
          if (v < 0) domain_error("sqrt of negative value", n);
          if (v == 0 && !u.is_constant()) domain_error("sqrt not differentiable at 0", n);
          if (v == 0) return Jet2::constant(dim, 0);
          return jet_sqrt(u);
        case Func::Exp: {
          Jet2 r = jet_exp(u);
          check_finite(r.value(), n);
          return r;
        }
        case Func::Log:
          if (v <= 0) domain_error("log of non-positive value", n);
          return jet_log(u);
        case Func::Sin: return jet_sin(u);
        case Func::Cos: return jet_cos(u);
        case Func::Tan: {
          Jet2 r = jet_tan(u);
          check_finite(r.value(), n);
          return r;
        }
        case Func::Sinh: {
          Jet2 r = jet_sinh(u);
          check_finite(r.value(), n);
          return r;
        }
        case Func::Cosh: {
          Jet2 r = jet_cosh(u);
          check_finite(r.value(), n);
          return r;
        }
        case Func::Tanh: return jet_tanh(u);
        case Func::Abs: return jet_abs(u);
      }
      break;
    }
    case ExprNode::Kind::Binary: {
      Jet2 a = eval_node(*n.lhs, point, params);
      switch (n.bin) {
        case BinOp::Add: return a + eval_node(*n.rhs, point, params);
        case BinOp::Sub: return a - eval_node(*n.rhs, point, params);
        case BinOp::Mul: return a * eval_node(*n.rhs, point, params);
        case BinOp::Div: {
          Jet2 b = eval_node(*n.rhs, point, params);
          if (b.value() == 0) domain_error("division by zero", n);
          Jet2 r = a / b;
          check_finite(r.value(), n);
          return r;
        }
        case BinOp::Pow: {
          Jet2 b = eval_node(*n.rhs, point, params);
          if (b.is_constant()) {
            Real e = b.value();
            if (e == std::floor(e) && std::fabs(e) < 1e9L) {
              long long k = (long long)e;
              if (a.value() == 0 && k < 0) domain_error("zero base with negative exponent", n);
              Jet2 r = jet_pow_int(a, k);
              check_finite(r.value(), n);
              return r;
            }
          }
          if (a.value() <= 0)
            domain_error("power with non-positive base and non-integer exponent", n);
          Jet2 r = jet_pow(a, b);
          check_finite(r.value(), n);
          return r;
        }
      }
      break;
    }
  }
  throw std::logic_error("unreachable expression node");
}

Real eval_node_value(const ExprNode& n, const std::vector<Real>& point,
                     const std::vector<Real>& params) {
  switch (n.kind) {
    case ExprNode::Kind::Number: return n.number;
    case ExprNode::Kind::Coord: return point[n.slot];
    case ExprNode::Kind::Param: return params[n.slot];
    case ExprNode::Kind::Neg: return -eval_node_value(*n.lhs, point, params);
    case ExprNode::Kind::Call: {
      Real v = eval_node_value(*n.lhs, point, params);
      Real r = 0;
      switch (n.func) {
        case Func::Sqrt:
          if (v < 0) domain_error("sqrt of negative value", n);
          r = std::sqrt(v);
          break;
        case Func::Exp: r = std::exp(v); break;
        case Func::Log:
          if (v <= 0) domain_error("log of non-positive value", n);
          r = std::log(v);
          break;
        case Func::Sin: r = std::sin(v); break;
        case Func::Cos: r = std::cos(v); break;
        case Func::Tan: r = std::tan(v); break;
        case Func::Sinh: r = std::sinh(v); break;
        case Func::Cosh: r = std::cosh(v); break;
        case Func::Tanh: r = std::tanh(v); break;
        case Func::Abs: r = std::fabs(v); break;
      }
      check_finite(r, n);
      return r;
    }
    case ExprNode::Kind::Binary: {
      Real a = eval_node_value(*n.lhs, point, params);
      Real b = eval_node_value(*n.rhs, point, params);
      switch (n.bin) {
        case BinOp::Add: return a + b;
        case BinOp::Sub: return a - b;
        case BinOp::Mul: return a * b;
        case BinOp::Div: {
          if (b == 0) domain_error("division by zero", n);
          Real r = a / b;
          check_finite(r, n);
          return r;
        }
        case BinOp::Pow: {
          if (a < 0 && b != std::floor(b))
            domain_error("power with negative base and non-integer exponent", n);
          if (a == 0 && b < 0) domain_error("zero base with negative exponent", n);
          Real r = std::pow(a, b);
          check_finite(r, n);
          return r;
        }
      }
      break;
    }
  }
  throw std::logic_error("unreachable expression node");
}

}  // namespace

std::string to_string(const ExprNode& node) {
  std::string out;
  print_node(node, 0, &out);
  return out;
}

Expression::Expression(ExprPtr root, std::vector<std::string> coords,
                       std::vector<std::string> params)
    : root_(std::move(root)), coords_(std::move(coords)), params_(std::move(params)) {}

Jet2 Expression::eval_jet2(const std::vector<Real>& point,
                           const std::vector<Real>& param_values) const {
  if (point.size() != coords_.size())
    throw std::invalid_argument("point dimension does not match declared coordinates");
  if (param_values.size() != params_.size())
    throw std::invalid_argument("parameter values do not match declared parameters");
  return eval_node(*root_, point, param_values);
}

Real Expression::eval(const std::vector<Real>& point,
                      const std::vector<Real>& param_values) const {
  if (point.size() != coords_.size())
    throw std::invalid_argument("point dimension does not match declared coordinates");
  if (param_values.size() != params_.size())
    throw std::invalid_argument("parameter values do not match declared parameters");
  return eval_node_value(*root_, point, param_values);
}

Jet2 Expression::eval_jet2(const std::vector<Real>& point,
                           const std::map<std::string, Real>& params_by_name) const {
  return eval_jet2(point, resolve(params_by_name));
}

std::vector<Real> Expression::resolve(const std::map<std::string, Real>& by_name) const {
  std::vector<Real> vals(params_.size());
  for (std::size_t i = 0; i < params_.size(); ++i) {
    auto it = by_name.find(params_[i]);
    if (it == by_name.end())
      throw std::invalid_argument("unbound parameter '" + params_[i] + "'");
    vals[i] = it->second;
  }
  return vals;
}

std::string Expression::str() const { return to_string(*root_); }

Expression Expression::scaled(Real factor) const {
  auto num = std::make_shared<ExprNode>();
  num->kind = ExprNode::Kind::Number;
  num->number = factor;
  auto mul = std::make_shared<ExprNode>();
  mul->kind = ExprNode::Kind::Binary;
  mul->bin = BinOp::Mul;
  mul->lhs = num;
  mul->rhs = root_;
  return Expression(mul, coords_, params_);
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.coords_ != b.coords_ || a.params_ != b.params_) return false;
  if (!a.root_ || !b.root_) return a.root_ == b.root_;
  return node_equal(*a.root_, *b.root_);
}

Expression parse_expression(std::string_view src, std::vector<std::string> coords,
                            std::vector<std::string> params) {
  if (src.empty()) throw ParseError("empty expression", 0);
  for (const auto& c : coords) {
    Func f;
    if (lookup_func(c, &f))
      throw ParseError("coordinate '" + c + "' shadows a function name", 0);
    if (find_name(params, c) >= 0)
      throw ParseError("'" + c + "' declared both coordinate and parameter", 0);
  }
  for (const auto& p : params) {
    Func f;
    if (lookup_func(p, &f))
      throw ParseError("parameter '" + p + "' shadows a function name", 0);
  }
  Parser parser(src, coords, params);
  ExprPtr root = parser.run();
  return Expression(root, std::move(coords), std::move(params));
}

}  // namespace alh
