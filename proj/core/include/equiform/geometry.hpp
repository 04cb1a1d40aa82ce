#pragma once

#include <array>

#include "equiform/errors.hpp"
#include "equiform/motion.hpp"
#include "equiform/rational_trig.hpp"
#include "equiform/trig_poly.hpp"

namespace equiform {

template <class S>
using Vec7 = std::array<TrigPoly<S>, 7>;

/// Unit sphere x(theta, phi) = (cos th cos ph, sin th cos ph, sin ph, 0, 0, 0, 0).
/// phi is a latitude; the chart is regular for |phi| < pi/2.
template <class S>
Vec7<S> sphere_chart();

/// X(t, theta, phi) = t b' + cos th cos ph a0 + sin th cos ph a1 + sin ph a2,
/// where a0, a1, a2 are the first three columns of (1 + s' t) I + t Omega.
template <class S>
struct SurfaceMap {
  Vec7<S> components;
};

template <class S>
struct Tangents {
  Vec7<S> dt;
  Vec7<S> dtheta;
  Vec7<S> dphi;

  /// Tangent along coordinate k (0 = t, 1 = theta, 2 = phi).
  const Vec7<S>& along(int k) const { return k == 0 ? dt : (k == 1 ? dtheta : dphi); }
};

/// Induced metric in coordinates (t, theta, phi); symmetric storage.
template <class S>
class MetricTensor {
 public:
  MetricTensor() = default;
  explicit MetricTensor(std::array<TrigPoly<S>, 6> upper) : entries_(std::move(upper)) {}

  const TrigPoly<S>& operator()(int i, int j) const { return entries_[index(i, j)]; }
  TrigPoly<S>& at(int i, int j) { return entries_[index(i, j)]; }
  const std::array<TrigPoly<S>, 6>& entries() const { return entries_; }

  /// Entry order: g11, g12, g13, g22, g23, g33.
  static constexpr int index(int i, int j) {
    if (i > j) return index(j, i);
    return 3 * i - i * (i - 1) / 2 + (j - i);
  }

  friend bool operator==(const MetricTensor&, const MetricTensor&) = default;

 private:
  std::array<TrigPoly<S>, 6> entries_;
};

/// Christoffel symbols of the second kind over the shared denominator det(g):
/// Gamma^l_ij = numerator(l, i, j) / denominator.
template <class S>
struct ChristoffelSet {
  std::array<TrigPoly<S>, 18> numerators;
  TrigPoly<S> denominator;

  const TrigPoly<S>& numerator(int l, int i, int j) const {
    return numerators[static_cast<std::size_t>(6 * l + MetricTensor<S>::index(i, j))];
  }
  RationalTrig<S> symbol(int l, int i, int j) const { return {numerator(l, i, j), denominator}; }
};

/// Sign convention of the reported scalar curvature.
///
/// `kinematic` is -g^{ij} R_ij with R_ij = d_l G^l_ij - d_j G^l_il + G^l_ij G^m_lm - G^m_il G^l_jm.
/// It is the convention in which K = 2(2 delta - beta - s'^2)/(beta + 2 delta)
/// on the General34 family and the pure rotation scores +2. `riemannian` is
/// +g^{ij} R_ij (a unit round 3-sphere scores +6).
enum class CurvatureSign { kinematic, riemannian };

/// K(0, theta, phi) = P / Q with t eliminated and denominators cleared.
template <class S>
struct CurvatureQuotient {
  TrigPoly<S> P;
  TrigPoly<S> Q;
};

template <class S>
SurfaceMap<S> surface(const MotionParams<S>& p);

template <class S>
Tangents<S> tangents(const MotionParams<S>& p);

/// First fundamental quantities g_ij = <X_i, X_j>.
template <class S>
MetricTensor<S> metric(const MotionParams<S>& p);

/// The same metric assembled from alpha_1..alpha_8, beta, gamma, delta.
/// Only valid on the sphere-condition variety; throws PreconditionError otherwise.
template <class S>
MetricTensor<S> metric_closed_form(const MotionParams<S>& p, Tolerance tol = {});

/// Throws DegenerateMetricError when det(g) vanishes identically.
template <class S>
ChristoffelSet<S> christoffel(const MotionParams<S>& p);

/// Scalar curvature at the zero position t = 0.
///
/// All t-dependence is exact up to the first order needed by the t=0 value;
/// products above that order are dropped, which does not change P or Q.
/// Throws DegenerateMetricError when det(g) vanishes identically at t = 0.
template <class S>
CurvatureQuotient<S> scalar_curvature(const MotionParams<S>& p,
                                      CurvatureSign sign = CurvatureSign::kinematic);

/// P(theta, phi) / Q(theta, phi). Throws PoleOfChartError where |Q| is below
/// tol.eps times its largest coefficient.
template <class S>
double curvature_at(const CurvatureQuotient<S>& cq, double theta, double phi, Tolerance tol = {});

/// Convenience: scalar_curvature followed by curvature_at.
template <class S>
double curvature_at(const MotionParams<S>& p, double theta, double phi, Tolerance tol = {});

}  // namespace equiform
