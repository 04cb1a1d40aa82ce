#include "equiform/geometry.hpp"

#include <cmath>
#include <sstream>

namespace equiform {

namespace {

template <class S>
TrigPoly<S> constant_poly(const TPoly<S>& c) {
  return TrigPoly<S>::make_term({0, 0}, Basis::cos, c);
}

template <class S>
TrigPoly<S> constant(const S& c) {
  return TrigPoly<S>::constant(c);
}

template <class S>
TrigPoly<S> harmonic(int i, int j, Basis kind, const S& c = S(1)) {
  return TrigPoly<S>::make_term({i, j}, kind, TPoly<S>(c));
}

template <class S>
TrigPoly<S> dot(const Vec7<S>& a, const Vec7<S>& b, int max_t_degree = kAnyDegree) {
  TrigPoly<S> acc;
  for (std::size_t r = 0; r < 7; ++r) acc += mul(a[r], b[r], max_t_degree);
  return acc;
}

template <class S>
Vec7<S> differentiate(const Vec7<S>& v, Var var) {
  Vec7<S> out;
  for (std::size_t r = 0; r < 7; ++r) out[r] = v[r].differentiate(var);
  return out;
}

// Inverse metric numerators: adj(g) = det(g) g^{-1}, symmetric storage.
template <class S>
std::array<TrigPoly<S>, 6> adjugate(const MetricTensor<S>& g, int order) {
  auto m = [&](const TrigPoly<S>& a, const TrigPoly<S>& b) { return mul(a, b, order); };
  std::array<TrigPoly<S>, 6> adj;
  adj[MetricTensor<S>::index(0, 0)] = m(g(1, 1), g(2, 2)) - m(g(1, 2), g(1, 2));
  adj[MetricTensor<S>::index(0, 1)] = m(g(0, 2), g(1, 2)) - m(g(0, 1), g(2, 2));
  adj[MetricTensor<S>::index(0, 2)] = m(g(0, 1), g(1, 2)) - m(g(0, 2), g(1, 1));
  adj[MetricTensor<S>::index(1, 1)] = m(g(0, 0), g(2, 2)) - m(g(0, 2), g(0, 2));
  adj[MetricTensor<S>::index(1, 2)] = m(g(0, 1), g(0, 2)) - m(g(0, 0), g(1, 2));
  adj[MetricTensor<S>::index(2, 2)] = m(g(0, 0), g(1, 1)) - m(g(0, 1), g(0, 1));
  return adj;
}

template <class S>
TrigPoly<S> determinant(const MetricTensor<S>& g, const std::array<TrigPoly<S>, 6>& adj, int order) {
  // Cofactor expansion along the first row.
  return mul(g(0, 0), adj[MetricTensor<S>::index(0, 0)], order) +
         mul(g(0, 1), adj[MetricTensor<S>::index(0, 1)], order) +
         mul(g(0, 2), adj[MetricTensor<S>::index(0, 2)], order);
}

// Christoffel numerators N^l_ij = sum_m adj_lm [ij, m] with first-kind
// symbols [ij, m] = (d_j g_im + d_i g_jm - d_m g_ij) / 2.
template <class S>
ChristoffelSet<S> connection(const MetricTensor<S>& g, int order) {
  std::array<MetricTensor<S>, 3> dg;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) dg[k].at(i, j) = g(i, j).differentiate(kCoordinates[k]);

  const auto adj = adjugate(g, order);
  ChristoffelSet<S> out;
  out.denominator = determinant(g, adj, order);
  if (out.denominator.is_zero()) throw DegenerateMetricError("metric determinant vanishes identically");

  const S half = S(1) / S(2);
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      std::array<TrigPoly<S>, 3> first_kind;
      for (int m = 0; m < 3; ++m)
        first_kind[m] = (dg[j](i, m) + dg[i](j, m) - dg[m](i, j)).scaled(half);
      for (int l = 0; l < 3; ++l) {
        TrigPoly<S> acc;
        for (int m = 0; m < 3; ++m) acc += mul(adj[MetricTensor<S>::index(l, m)], first_kind[m], order);
        out.numerators[static_cast<std::size_t>(6 * l + MetricTensor<S>::index(i, j))] = std::move(acc);
      }
    }
  }
  return out;
}

}  // namespace

template <class S>
Vec7<S> sphere_chart() {
  const S h = S(1) / S(2);
  Vec7<S> x;
  x[0] = harmonic<S>(1, -1, Basis::cos, h) + harmonic<S>(1, 1, Basis::cos, h);
  x[1] = harmonic<S>(1, -1, Basis::sin, h) + harmonic<S>(1, 1, Basis::sin, h);
  x[2] = harmonic<S>(0, 1, Basis::sin);
  return x;
}

template <class S>
SurfaceMap<S> surface(const MotionParams<S>& p) {
  const auto omega = p.rotation_rate_matrix();
  const Vec7<S> x = sphere_chart<S>();
  SurfaceMap<S> out;
  for (int r = 0; r < 7; ++r) {
    TrigPoly<S> comp = constant_poly(TPoly<S>(std::vector<S>{S(0), p.d_prime[r]}));
    for (int k = 0; k < 3; ++k) {
      // Entry (r, k) of (1 + s' t) I + t Omega.
      TPoly<S> entry = r == k ? TPoly<S>(std::vector<S>{S(1), S(p.s_prime + omega[r][k])})
                              : TPoly<S>(std::vector<S>{S(0), omega[r][k]});
      comp += mul(constant_poly(entry), x[k], kAnyDegree);
    }
    out.components[r] = std::move(comp);
  }
  return out;
}

template <class S>
Tangents<S> tangents(const MotionParams<S>& p) {
  const auto X = surface(p).components;
  return {differentiate(X, Var::t), differentiate(X, Var::theta), differentiate(X, Var::phi)};
}

template <class S>
MetricTensor<S> metric(const MotionParams<S>& p) {
  const auto tan = tangents(p);
  MetricTensor<S> g;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) g.at(i, j) = dot(tan.along(i), tan.along(j));
  return g;
}

template <class S>
MetricTensor<S> metric_closed_form(const MotionParams<S>& p, Tolerance tol) {
  if (!satisfies_sphere_conditions(p, tol))
    throw PreconditionError("closed-form metric requires the sphere conditions");

  const auto q = derived_quantities(p);
  using T = TrigPoly<S>;
  const T one = constant(S(1));
  const T t = constant_poly(TPoly<S>::monomial(S(1), 1));
  const T t2 = constant_poly(TPoly<S>::monomial(S(1), 2));
  const T cth = harmonic<S>(1, 0, Basis::cos), sth = harmonic<S>(1, 0, Basis::sin);
  const T cph = harmonic<S>(0, 1, Basis::cos), sph = harmonic<S>(0, 1, Basis::sin);
  const T c2th = harmonic<S>(2, 0, Basis::cos), s2th = harmonic<S>(2, 0, Basis::sin);
  const T c2ph = harmonic<S>(0, 2, Basis::cos), s2ph = harmonic<S>(0, 2, Basis::sin);
  auto k = [](const S& c) { return constant(c); };
  const S& sp = p.s_prime;
  const S a1 = q.a(1), a2 = q.a(2), a3 = q.a(3), a4 = q.a(4), a5 = q.a(5), a6 = q.a(6), a7 = q.a(7),
          a8 = q.a(8);

  MetricTensor<S> g;
  g.at(0, 0) = k(q.gamma) + a5 * c2ph + a8 * sph +
               S(2) * cph *
                   (cph * (a4 * c2th + a1 * s2th) + sth * (k(a7) + a2 * sph) +
                    cth * (k(a6) - S(2) * a3 * sph));

  g.at(0, 1) = cph * (S(2) * t * cph * (a1 * c2th - a4 * s2th) - p.w(1) * cph -
                      sth * (t * (k(a6) - S(2) * a3 * sph) + k(p.b(1)) + p.w(2) * sph) +
                      cth * (t * (k(a7) + S(2) * a2 * sph) + k(p.b(2)) + p.w(7) * sph));

  // The last line carries the tangential rotation rates w2, w7 and the
  // out-of-plane translation b'_3 / alpha_8, which also reach X_phi . X_t.
  g.at(0, 2) = S(2) * t * c2ph * (a2 * sth - a3 * cth) -
               t * s2ph * (k(a5) + a4 * c2th + a1 * s2th) -
               sph * ((k(p.b(1)) + a6 * t) * cth + (k(p.b(2)) + a7 * t) * sth) -
               p.w(2) * cth - p.w(7) * sth + (k(p.b(3)) + (a8 / S(2)) * t) * cph;

  // Cross Gram term of the rotated tangent is alpha_1 (sin 2theta).
  g.at(1, 1) = cph * cph * (one + S(2) * sp * t + S(2) * t2 * (k(q.delta) - a4 * c2th - a1 * s2th));

  g.at(1, 2) = t2 * (S(2) * cph * cph * (a2 * cth + a3 * sth) + s2ph * (a4 * s2th - a1 * c2th));

  g.at(2, 2) = one + S(2) * sp * t +
               t2 * (k(q.gamma - q.beta) - a5 * c2ph + S(2) * sph * sph * (a4 * c2th + a1 * s2th) +
                     S(2) * s2ph * (a3 * cth - a2 * sth));
  return g;
}

template <class S>
ChristoffelSet<S> christoffel(const MotionParams<S>& p) {
  return connection(metric(p), kAnyDegree);
}

template <class S>
CurvatureQuotient<S> scalar_curvature(const MotionParams<S>& p, CurvatureSign sign) {
  // Only t^0 and t^1 coefficients of adj(g), det(g) and the Christoffel
  // numerators reach K(0, theta, phi); g itself is kept exact so that d_t g
  // is exact.
  const MetricTensor<S> g = metric(p);
  const ChristoffelSet<S> gamma = connection(g, 1);
  const auto adj = adjugate(g, 0);
  const S zero(0);

  const TrigPoly<S> D = gamma.denominator.substitute_t(zero);
  if (D.is_zero()) throw DegenerateMetricError("metric determinant vanishes identically at t = 0");

  std::array<TrigPoly<S>, 3> dD;
  for (int k = 0; k < 3; ++k) dD[k] = gamma.denominator.differentiate(kCoordinates[k]).substitute_t(zero);

  // N[l][ij] and dN[k][l][ij] at t = 0.
  std::array<std::array<TrigPoly<S>, 6>, 3> N;
  std::array<std::array<std::array<TrigPoly<S>, 6>, 3>, 3> dN;
  for (int l = 0; l < 3; ++l) {
    for (int e = 0; e < 6; ++e) {
      const TrigPoly<S>& n = gamma.numerators[static_cast<std::size_t>(6 * l + e)];
      N[l][e] = n.substitute_t(zero);
      for (int k = 0; k < 3; ++k) dN[k][l][e] = n.differentiate(kCoordinates[k]).substitute_t(zero);
    }
  }
  auto Nat = [&](int l, int i, int j) -> const TrigPoly<S>& { return N[l][MetricTensor<S>::index(i, j)]; };
  auto dNat = [&](int k, int l, int i, int j) -> const TrigPoly<S>& {
    return dN[k][l][MetricTensor<S>::index(i, j)];
  };

  // Contracted numerators T_i = sum_l N^l_il and their derivatives.
  std::array<TrigPoly<S>, 3> T;
  std::array<std::array<TrigPoly<S>, 3>, 3> dT;  // dT[j][i] = d_j T_i
  for (int i = 0; i < 3; ++i) {
    for (int l = 0; l < 3; ++l) T[i] += Nat(l, i, l);
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) dT[j][i] += dNat(j, l, i, l);
  }

  // R_ij D^2 = (sum_l d_l N^l_ij - d_j T_i) D + sum_l N^l_ij (T_l - d_l D)
  //            + T_i d_j D - sum_{l,m} N^m_il N^l_jm
  TrigPoly<S> numerator;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      TrigPoly<S> divergence;
      for (int l = 0; l < 3; ++l) divergence += dNat(l, l, i, j);
      divergence -= dT[j][i];
      TrigPoly<S> ricci = divergence * D;
      for (int l = 0; l < 3; ++l) ricci += Nat(l, i, j) * (T[l] - dD[l]);
      ricci += T[i] * dD[j];
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) ricci -= Nat(m, i, l) * Nat(l, j, m);
      numerator += adj[MetricTensor<S>::index(i, j)].substitute_t(zero) * ricci;
    }
  }

  CurvatureQuotient<S> out;
  out.P = sign == CurvatureSign::kinematic ? -numerator : numerator;
  out.Q = D * D * D;
  return out;
}

template <class S>
double curvature_at(const CurvatureQuotient<S>& cq, double theta, double phi, Tolerance tol) {
  const S zero(0);
  const double q = cq.Q.evaluate(zero, theta, phi);
  if (!(std::abs(q) > tol.eps * cq.Q.max_abs_coefficient())) {
    std::ostringstream os;
    os << "curvature denominator vanishes at (theta, phi) = (" << theta << ", " << phi
       << "); choose a point with cos(phi) != 0";
    throw PoleOfChartError(os.str());
  }
  return cq.P.evaluate(zero, theta, phi) / q;
}

template <class S>
double curvature_at(const MotionParams<S>& p, double theta, double phi, Tolerance tol) {
  return curvature_at(scalar_curvature(p), theta, phi, tol);
}

#define EQUIFORM_INSTANTIATE_GEOMETRY(S)                                                       \
  template Vec7<S> sphere_chart<S>();                                                          \
  template SurfaceMap<S> surface(const MotionParams<S>&);                                      \
  template Tangents<S> tangents(const MotionParams<S>&);                                       \
  template MetricTensor<S> metric(const MotionParams<S>&);                                     \
  template MetricTensor<S> metric_closed_form(const MotionParams<S>&, Tolerance);              \
  template ChristoffelSet<S> christoffel(const MotionParams<S>&);                              \
  template CurvatureQuotient<S> scalar_curvature(const MotionParams<S>&, CurvatureSign);       \
  template double curvature_at(const CurvatureQuotient<S>&, double, double, Tolerance);        \
  template double curvature_at(const MotionParams<S>&, double, double, Tolerance);

EQUIFORM_INSTANTIATE_GEOMETRY(Rational)
EQUIFORM_INSTANTIATE_GEOMETRY(double)

}  // namespace equiform
