#ifndef ALH_JET_HPP_
#define ALH_JET_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

namespace alh {

// Scalar type used throughout. 80-bit extended precision: the mass flux
// subtracts near-equal curvature terms at large radius, and the extra
// mantissa bits keep that cancellation floor several orders below the
// tolerances the integrals have to meet.
using Real = long double;

constexpr Real kPi = 3.141592653589793238462643383279502884L;

// Value, gradient and Hessian of a scalar at a point of an n-dimensional
// chart. The Hessian is stored as the packed upper triangle, so symmetry
// holds by construction rather than by tolerance.
class Jet2 {
 public:
  Jet2() : dim_(0), value_(0) {}
  explicit Jet2(int dim, Real value = 0)
      : dim_(dim), value_(value), grad_(dim, 0), hess_(dim * (dim + 1) / 2, 0) {}

  static Jet2 constant(int dim, Real v) { return Jet2(dim, v); }
  static Jet2 variable(int dim, int i, Real v) {
    Jet2 j(dim, v);
    j.grad_[i] = 1;
    return j;
  }

  int dim() const { return dim_; }
  Real value() const { return value_; }
  Real& value() { return value_; }
  Real grad(int i) const { return grad_[i]; }
  Real& grad(int i) { return grad_[i]; }
  Real hess(int i, int j) const { return hess_[pack(i, j)]; }
  Real& hess(int i, int j) { return hess_[pack(i, j)]; }

  bool is_constant(Real tol = 0) const {
    for (Real g : grad_)
      if (std::fabs(g) > tol) return false;
    for (Real h : hess_)
      if (std::fabs(h) > tol) return false;
    return true;
  }

  Jet2& operator+=(const Jet2& o) {
    value_ += o.value_;
    for (int i = 0; i < dim_; ++i) grad_[i] += o.grad_[i];
    for (std::size_t i = 0; i < hess_.size(); ++i) hess_[i] += o.hess_[i];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    value_ -= o.value_;
    for (int i = 0; i < dim_; ++i) grad_[i] -= o.grad_[i];
    for (std::size_t i = 0; i < hess_.size(); ++i) hess_[i] -= o.hess_[i];
    return *this;
  }
  Jet2& operator*=(Real c) {
    value_ *= c;
    for (Real& g : grad_) g *= c;
    for (Real& h : hess_) h *= c;
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, Real c) { return a *= c; }
  friend Jet2 operator*(Real c, Jet2 a) { return a *= c; }
  friend Jet2 operator-(Jet2 a) { return a *= Real(-1); }
  friend Jet2 operator+(Jet2 a, Real c) {
    a.value_ += c;
    return a;
  }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(a.dim_, a.value_ * b.value_);
    for (int i = 0; i < a.dim_; ++i)
      r.grad_[i] = a.grad_[i] * b.value_ + a.value_ * b.grad_[i];
    int idx = 0;
    for (int i = 0; i < a.dim_; ++i)
      for (int j = i; j < a.dim_; ++j, ++idx)
        r.hess_[idx] = a.hess_[idx] * b.value_ + a.grad_[i] * b.grad_[j] +
                       a.grad_[j] * b.grad_[i] + a.value_ * b.hess_[idx];
    return r;
  }

  // Composition with a scalar function: f(value), f'(value), f''(value).
  Jet2 compose(Real f, Real fp, Real fpp) const {
    Jet2 r(dim_, f);
    for (int i = 0; i < dim_; ++i) r.grad_[i] = fp * grad_[i];
    int idx = 0;
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j, ++idx)
        r.hess_[idx] = fp * hess_[idx] + fpp * grad_[i] * grad_[j];
    return r;
  }

 private:
  int pack(int i, int j) const {
    if (i > j) std::swap(i, j);
    return i * dim_ - i * (i + 1) / 2 + j;
  }

  int dim_;
  Real value_;
  std::vector<Real> grad_;
  std::vector<Real> hess_;  // packed upper triangle
};

// Elementary functions on jets. Domain checking is the caller's job (the
// expression evaluator reports the offending subexpression); these assume
// the value is inside the function's domain.

inline Jet2 jet_reciprocal(const Jet2& u) {
  Real v = u.value();
  return u.compose(1 / v, -1 / (v * v), 2 / (v * v * v));
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * jet_reciprocal(b); }

inline Jet2 jet_sqrt(const Jet2& u) {
  Real s = std::sqrt(u.value());
  return u.compose(s, 0.5L / s, -0.25L / (s * u.value()));
}

inline Jet2 jet_exp(const Jet2& u) {
  Real e = std::exp(u.value());
  return u.compose(e, e, e);
}

inline Jet2 jet_log(const Jet2& u) {
  Real v = u.value();
  return u.compose(std::log(v), 1 / v, -1 / (v * v));
}

inline Jet2 jet_sin(const Jet2& u) {
  Real s = std::sin(u.value()), c = std::cos(u.value());
  return u.compose(s, c, -s);
}

inline Jet2 jet_cos(const Jet2& u) {
  Real s = std::sin(u.value()), c = std::cos(u.value());
  return u.compose(c, -s, -c);
}

inline Jet2 jet_tan(const Jet2& u) {
  Real t = std::tan(u.value());
  Real d = 1 + t * t;
  return u.compose(t, d, 2 * t * d);
}

inline Jet2 jet_sinh(const Jet2& u) {
  Real s = std::sinh(u.value()), c = std::cosh(u.value());
  return u.compose(s, c, s);
}

inline Jet2 jet_cosh(const Jet2& u) {
  Real s = std::sinh(u.value()), c = std::cosh(u.value());
  return u.compose(c, s, c);
}

inline Jet2 jet_tanh(const Jet2& u) {
  Real t = std::tanh(u.value());
  Real d = 1 - t * t;
  return u.compose(t, d, -2 * t * d);
}

// |u|; the derivative at u = 0 is taken to be 0.
inline Jet2 jet_abs(const Jet2& u) {
  Real s = u.value() > 0 ? 1 : (u.value() < 0 ? Real(-1) : 0);
  return u.compose(std::fabs(u.value()), s, 0);
}

// u^k for integer k; valid for any sign of u (except u = 0 with k < 0).
inline Jet2 jet_pow_int(const Jet2& u, long long k) {
  if (k == 0) return Jet2::constant(u.dim(), 1);
  Real v = u.value();
  Real f = std::pow(v, (Real)k);
  Real fp = k * std::pow(v, (Real)(k - 1));
  Real fpp = (k == 1) ? 0 : (Real)k * (k - 1) * std::pow(v, (Real)(k - 2));
  return u.compose(f, fp, fpp);
}

// u^v for jets u > 0 and arbitrary v, via exp(v log u).
inline Jet2 jet_pow(const Jet2& u, const Jet2& v) {
  return jet_exp(v * jet_log(u));
}

// acos(u), |u| < 1. Used by the isometry maps, not exposed in the grammar.
inline Jet2 jet_acos(const Jet2& u) {
  Real v = u.value();
  Real d = 1 - v * v;
  Real s = std::sqrt(d);
  return u.compose(std::acos(v), -1 / s, -v / (d * s));
}

// atan2(y, x) with full second-order chain rule.
inline Jet2 jet_atan2(const Jet2& y, const Jet2& x) {
  int n = y.dim();
  Real xv = x.value(), yv = y.value();
  Real d = xv * xv + yv * yv;
  Jet2 r(n, std::atan2(yv, xv));
  std::vector<Real> num(n);  // N_i = x y_i - y x_i
  for (int i = 0; i < n; ++i) {
    num[i] = xv * y.grad(i) - yv * x.grad(i);
    r.grad(i) = num[i] / d;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Real dnum = x.grad(j) * y.grad(i) + xv * y.hess(i, j) -
                  y.grad(j) * x.grad(i) - yv * x.hess(i, j);
      Real dd = 2 * (xv * x.grad(j) + yv * y.grad(j));
      r.hess(i, j) = dnum / d - num[i] * dd / (d * d);
    }
  return r;
}

}  // namespace alh

#endif  // ALH_JET_HPP_
