#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "equiform/scalar.hpp"

namespace equiform {

/// Unbounded t-degree marker for truncating products.
inline constexpr int kAnyDegree = std::numeric_limits<int>::max();

/// Dense polynomial c0 + c1 t + ... + cd t^d. Trailing zeros are stripped,
/// so the zero polynomial has no coefficients and degree -1.
template <class S>
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(S constant) {
    coeffs_.push_back(std::move(constant));
    strip();
  }
  explicit TPoly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

  static TPoly monomial(S c, int degree) {
    std::vector<S> v(static_cast<std::size_t>(degree) + 1, S(0));
    v.back() = std::move(c);
    return TPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const S> coeffs() const { return coeffs_; }

  /// Coefficient of t^k (zero beyond the degree).
  S operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : S(0); }

  /// Value at t.
  S operator()(const S& t) const {
    S acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= t;
      acc += *it;
    }
    return acc;
  }

  TPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<S> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * S(static_cast<long>(k));
    return TPoly(std::move(d));
  }

  TPoly truncated(int max_degree) const {
    if (max_degree < 0) return {};
    if (degree() <= max_degree) return *this;
    return TPoly(std::vector<S>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(to_double(c)));
    return m;
  }

  TPoly& operator+=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    strip();
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    strip();
    return *this;
  }
  TPoly& operator*=(const S& s) {
    if (is_zero_scalar(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    strip();
    return *this;
  }

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const S& s) { return a *= s; }
  friend TPoly operator*(const S& s, TPoly a) { return a *= s; }
  friend TPoly operator-(TPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend TPoly operator*(const TPoly& a, const TPoly& b) { return multiply(a, b); }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Product with terms above max_degree dropped.
  static TPoly multiply(const TPoly& a, const TPoly& b, int max_degree = kAnyDegree) {
    TPoly out;
    accumulate_product(out.coeffs_, a, b, max_degree);
    out.strip();
    return out;
  }

  /// acc += a*b (coefficient vector, not stripped). Used by the trig product
  /// kernels to avoid temporaries.
  static void accumulate_product(std::vector<S>& acc, const TPoly& a, const TPoly& b,
                                 int max_degree, bool negate = false) {
    if (a.is_zero() || b.is_zero()) return;
    const int top = std::min(a.degree() + b.degree(), max_degree);
    if (top < 0) return;
    if (static_cast<int>(acc.size()) < top + 1) acc.resize(static_cast<std::size_t>(top) + 1, S(0));
    S tmp;
    for (int i = 0; i <= a.degree() && i <= top; ++i) {
      for (int j = 0; j <= b.degree() && i + j <= top; ++j) {
        tmp = a.coeffs_[i] * b.coeffs_[j];
        if (negate)
          acc[i + j] -= tmp;
        else
          acc[i + j] += tmp;
      }
    }
  }

  /// Takes ownership of a raw coefficient vector produced by accumulate_product.
  static TPoly adopt(std::vector<S>&& raw) { return TPoly(std::move(raw)); }

 private:
  void strip() {
    while (!coeffs_.empty() && is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

}  // namespace equiform
