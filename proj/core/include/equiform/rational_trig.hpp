#pragma once

#include <stdexcept>
#include <utility>

#include "equiform/trig_poly.hpp"

namespace equiform {

/// Quotient num/den of trigonometric polynomials. No cancellation is ever
/// attempted; identities are tested by cross-multiplication.
template <class S>
class RationalTrig {
 public:
  RationalTrig(TrigPoly<S> num, TrigPoly<S> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalTrig: zero denominator");
  }
  explicit RationalTrig(TrigPoly<S> p) : RationalTrig(std::move(p), TrigPoly<S>::constant(S(1))) {}

  const TrigPoly<S>& num() const { return num_; }
  const TrigPoly<S>& den() const { return den_; }

  friend RationalTrig operator+(const RationalTrig& a, const RationalTrig& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalTrig operator-(const RationalTrig& a, const RationalTrig& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalTrig operator*(const RationalTrig& a, const RationalTrig& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }

  /// Quotient rule: (n/d)' = (n' d - n d') / d^2.
  RationalTrig differentiate(Var v) const {
    return {num_.differentiate(v) * den_ - num_ * den_.differentiate(v), den_ * den_};
  }

  RationalTrig substitute_t(const S& t0) const {
    return {num_.substitute_t(t0), den_.substitute_t(t0)};
  }

  double evaluate(const S& t, double theta, double phi) const {
    return num_.evaluate(t, theta, phi) / den_.evaluate(t, theta, phi);
  }

  /// a/b == c/d as functions, tested as a*d - c*b == 0.
  bool equivalent(const RationalTrig& o, double scale = 1.0, Tolerance tol = {}) const {
    return is_zero(num_ * o.den_ - o.num_ * den_, scale, tol);
  }

 private:
  TrigPoly<S> num_;
  TrigPoly<S> den_;
};

}  // namespace equiform
