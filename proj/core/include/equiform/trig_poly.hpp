#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equiform/scalar.hpp"
#include "equiform/tpoly.hpp"

namespace equiform {

/// Harmonic (i, j) of cos/sin(i*theta + j*phi).
///
/// Canonical keys have i > 0, or i == 0 and j >= 0. Every other key is the
/// negation of a canonical one; cos is even and sin is odd under negation.
struct FreqKey {
  int i = 0;
  int j = 0;

  bool is_canonical() const { return i > 0 || (i == 0 && j >= 0); }
  FreqKey negated() const { return {-i, -j}; }
  bool is_origin() const { return i == 0 && j == 0; }

  friend auto operator<=>(const FreqKey&, const FreqKey&) = default;
};

enum class Basis { cos, sin };

/// Differentiation variables, in metric index order x1 = t, x2 = theta, x3 = phi.
enum class Var { t = 0, theta = 1, phi = 2 };

inline constexpr Var kCoordinates[3] = {Var::t, Var::theta, Var::phi};

template <class S>
struct TrigTerm {
  FreqKey key;
  TPoly<S> cos;
  TPoly<S> sin;

  friend bool operator==(const TrigTerm&, const TrigTerm&) = default;
};

/// Finite Fourier series in (theta, phi) with polynomial-in-t coefficients:
///
///   sum_{(i,j)} A_ij(t) cos(i theta + j phi) + B_ij(t) sin(i theta + j phi).
///
/// Terms are kept sorted by canonical key; a key is present only if one of
/// its coefficients is nonzero, and the (0,0) sine coefficient is always zero.
/// Values are immutable once built; all operations return new series.
template <class S>
class TrigPoly {
 public:
  using Term = TrigTerm<S>;

  TrigPoly() = default;

  /// Single term; non-canonical keys are folded with the parity rules.
  static TrigPoly make_term(FreqKey key, Basis kind, TPoly<S> coeff);
  static TrigPoly constant(S c) { return make_term({0, 0}, Basis::cos, TPoly<S>(std::move(c))); }
  /// Builds a series from arbitrary (possibly repeated, non-canonical) terms.
  static TrigPoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// (cos, sin) coefficients of harmonic (i, j) as written, i.e. the sine
  /// coefficient flips sign when (i, j) is not canonical.
  std::pair<TPoly<S>, TPoly<S>> coefficient(int i, int j) const;

  int max_i() const;
  int max_abs_j() const;
  int t_degree() const;
  double max_abs_coefficient() const;

  TrigPoly differentiate(Var v) const;
  TrigPoly substitute_t(const S& t0) const;
  TrigPoly truncate_t(int max_degree) const;
  TrigPoly scaled(const S& s) const;

  /// Numeric value; t is substituted exactly, the angles in double precision.
  double evaluate(const S& t, double theta, double phi) const;

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);

  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator-(const TrigPoly& a) { return a.scaled(S(-1)); }
  friend TrigPoly operator*(const TrigPoly& a, const S& s) { return a.scaled(s); }
  friend TrigPoly operator*(const S& s, const TrigPoly& a) { return a.scaled(s); }
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  template <class T>
  friend TrigPoly<T> mul(const TrigPoly<T>& p, const TrigPoly<T>& q, int max_t_degree);

  TrigPoly merged(const TrigPoly& o, bool subtract) const;

  std::vector<Term> terms_;
};

/// Exact product via the product-to-sum identities; t-coefficients above
/// max_t_degree are dropped.
template <class S>
TrigPoly<S> mul(const TrigPoly<S>& p, const TrigPoly<S>& q, int max_t_degree);

template <class S>
TrigPoly<S> operator*(const TrigPoly<S>& p, const TrigPoly<S>& q) {
  return mul(p, q, kAnyDegree);
}

/// Float-aware zero test. Exact mode: structurally empty. Float mode: every
/// coefficient magnitude is at most tol.eps * scale.
template <class S>
bool is_zero(const TrigPoly<S>& p, double scale, Tolerance tol = {});

/// Human-readable listing, one harmonic per line.
template <class S>
std::string format_trig(const TrigPoly<S>& p);

template <class S>
std::string format_tpoly(const TPoly<S>& p);

extern template class TrigPoly<Rational>;
extern template class TrigPoly<double>;
extern template TrigPoly<Rational> mul(const TrigPoly<Rational>&, const TrigPoly<Rational>&, int);
extern template TrigPoly<double> mul(const TrigPoly<double>&, const TrigPoly<double>&, int);

}  // namespace equiform
