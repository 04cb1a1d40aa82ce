#include "equiform/motion.hpp"

#include <algorithm>
#include <cmath>

namespace equiform {

namespace {

template <class S>
S sum_sq(const MotionParams<S>& p, int lo, int hi) {
  S acc(0);
  for (int i = lo; i <= hi; ++i) acc += p.w(i) * p.w(i);
  return acc;
}

// sum_{i=lo}^{hi} w_i w_{i+shift}
template <class S>
S sum_shifted(const MotionParams<S>& p, int lo, int hi, int shift) {
  S acc(0);
  for (int i = lo; i <= hi; ++i) acc += p.w(i) * p.w(i + shift);
  return acc;
}

// sum_{i=lo}^{hi} b'_i w_{i+shift}
template <class S>
S sum_bw(const MotionParams<S>& p, int lo, int hi, int shift) {
  S acc(0);
  for (int i = lo; i <= hi; ++i) acc += p.b(i) * p.w(i + shift);
  return acc;
}

}  // namespace

MotionParams<double> to_float(const MotionParams<Rational>& p) {
  MotionParams<double> out;
  out.s_prime = p.s_prime.get_d();
  for (std::size_t k = 0; k < 21; ++k) out.omega[k] = p.omega[k].get_d();
  for (std::size_t k = 0; k < 7; ++k) out.d_prime[k] = p.d_prime[k].get_d();
  return out;
}

std::string_view family_name(FamilyKind f) {
  switch (f) {
    case FamilyKind::ZeroK: return "ZeroK";
    case FamilyKind::KNeg32A: return "KNeg32A";
    case FamilyKind::KNeg32B: return "KNeg32B";
    case FamilyKind::General34: return "General34";
    case FamilyKind::Unconstrained: return "Unconstrained";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (auto f : {FamilyKind::ZeroK, FamilyKind::KNeg32A, FamilyKind::KNeg32B, FamilyKind::General34,
                 FamilyKind::Unconstrained}) {
    if (name == family_name(f)) return f;
  }
  if (name == "3.1") return FamilyKind::ZeroK;
  if (name == "3.3a") return FamilyKind::KNeg32A;
  if (name == "3.3b") return FamilyKind::KNeg32B;
  if (name == "3.4") return FamilyKind::General34;
  return std::nullopt;
}

template <class S>
std::array<S, 5> sphere_condition_residuals(const MotionParams<S>& p) {
  return {
      sum_shifted(p, 2, 6, 5),
      p.w(1) * p.w(7) - sum_shifted(p, 3, 6, 9),
      p.w(1) * p.w(2) + sum_shifted(p, 8, 11, 4),
      sum_sq(p, 2, 6) - sum_sq(p, 7, 11),
      p.w(1) * p.w(1) + sum_sq(p, 3, 6) - p.w(7) * p.w(7) - sum_sq(p, 12, 15),
  };
}

template <class S>
double params_scale(const MotionParams<S>& p) {
  double m = std::abs(to_double(p.s_prime));
  for (const auto& x : p.omega) m = std::max(m, std::abs(to_double(x)));
  for (const auto& x : p.d_prime) m = std::max(m, std::abs(to_double(x)));
  return m;
}

template <class S>
bool satisfies_sphere_conditions(const MotionParams<S>& p, Tolerance tol) {
  const double scale = std::max(1.0, params_scale(p) * params_scale(p));
  for (const auto& r : sphere_condition_residuals(p))
    if (!is_negligible(r, scale, tol)) return false;
  return true;
}

template <class S>
DerivedQuantities<S> derived_quantities(const MotionParams<S>& p) {
  DerivedQuantities<S> q;
  const S half = S(1) / S(2);
  const S quarter = S(1) / S(4);
  const S& sp = p.s_prime;

  q.alpha[0] = half * sum_shifted(p, 2, 6, 5);
  q.alpha[1] = half * (p.w(1) * p.w(2) + sum_shifted(p, 8, 11, 4));
  q.alpha[2] = half * (p.w(1) * p.w(7) - sum_shifted(p, 3, 6, 9));
  q.alpha[3] = quarter * (sum_sq(p, 2, 6) - sum_sq(p, 7, 11));
  q.alpha[4] = quarter * (p.w(1) * p.w(1) - S(2) * p.w(2) * p.w(2) - S(2) * p.w(7) * p.w(7) +
                          sum_sq(p, 1, 11) - S(2) * sum_sq(p, 12, 15));
  // alpha6..8 are the first three components of s' b' - Omega b'.
  {
    S a6 = p.b(1) * sp;
    for (int i = 2; i <= 7; ++i) a6 -= p.b(i) * p.w(i - 1);
    q.alpha[5] = a6;
  }
  {
    S a7 = p.b(1) * p.w(1) + p.b(2) * sp;
    for (int i = 3; i <= 7; ++i) a7 -= p.b(i) * p.w(i + 4);
    q.alpha[6] = a7;
  }
  {
    S a8 = p.b(1) * p.w(2) + p.b(2) * p.w(7) + p.b(3) * sp;
    for (int i = 4; i <= 7; ++i) a8 -= p.b(i) * p.w(i + 8);
    q.alpha[7] = S(2) * a8;
  }

  S beta(0);
  for (int i = 1; i <= 7; ++i) beta += p.b(i) * p.b(i);
  q.beta = beta;
  q.gamma = beta + sp * sp +
            quarter * (S(2) * (p.w(1) * p.w(1) + p.w(2) * p.w(2) + p.w(7) * p.w(7)) +
                       sum_sq(p, 2, 15) + sum_sq(p, 12, 15));
  q.delta = quarter * (S(2) * (sp * sp + p.w(1) * p.w(1)) + sum_sq(p, 2, 11));
  return q;
}

template <class S>
bool check_assumption(const MotionParams<S>& p, Tolerance tol) {
  const double scale = std::max(1.0, params_scale(p));
  return is_negligible(p.b(1), scale, tol) && is_negligible(p.b(2), scale, tol) &&
         is_negligible(p.b(3), scale, tol);
}

template <class S>
MotionParams<S> block_rotation_instance(const S& a, const S& c, const S& s_prime) {
  MotionParams<S> p;
  p.s_prime = s_prime;
  p.w(3) = a;
  p.w(9) = a;
  p.w(15) = a;
  p.b(6) = c;
  return p;
}

template <class S>
std::array<S, 3> cross_sums(const MotionParams<S>& p) {
  return {sum_bw(p, 4, 7, -1), sum_bw(p, 4, 7, 4), sum_bw(p, 4, 7, 8)};
}

template <class S>
S rotation_norm_sq(const MotionParams<S>& p) {
  return sum_sq(p, 3, 6);
}

template <class S>
S normal_translation_sq(const MotionParams<S>& p) {
  S acc(0);
  for (int i = 4; i <= 7; ++i) acc += p.b(i) * p.b(i);
  return acc;
}

template <class S>
double ConstraintResiduals<S>::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(to_double(v)));
  return m;
}

template <class S>
bool ConstraintResiduals<S>::satisfied(double scale, Tolerance tol) const {
  if (!violations.empty()) return false;
  for (const auto& v : values)
    if (!is_negligible(v, scale, tol)) return false;
  return true;
}

template <class S>
ConstraintResiduals<S> theorem_constraint_residuals(const MotionParams<S>& p, FamilyKind f,
                                                    Tolerance tol) {
  ConstraintResiduals<S> out;
  if (!satisfies_sphere_conditions(p, tol)) out.violations.push_back("sphere conditions violated");
  if (!check_assumption(p, tol)) out.violations.push_back("b'_1 = b'_2 = b'_3 = 0 violated");
  if (f == FamilyKind::Unconstrained) return out;

  auto add = [&](std::string label, S value) {
    out.labels.push_back(std::move(label));
    out.values.push_back(std::move(value));
  };
  add("w1", p.w(1));
  add("w2", p.w(2));
  add("w7", p.w(7));

  const auto sums = cross_sums(p);
  const S rot = rotation_norm_sq(p);
  const S trans = normal_translation_sq(p);
  const S sp2 = p.s_prime * p.s_prime;
  auto add_cross_sums = [&] {
    add("sum b'_i w_{i-1}", sums[0]);
    add("sum b'_i w_{i+4}", sums[1]);
    add("sum b'_i w_{i+8}", sums[2]);
  };

  switch (f) {
    case FamilyKind::ZeroK:
      add_cross_sums();
      add("sum w_i^2 - sum b'_i^2", rot - trans);
      break;
    case FamilyKind::KNeg32A: {
      add("s'^2 + 3 sum w_i^2 - sum b'_i^2", sp2 + S(3) * rot - trans);
      const S lhs_base = sp2 + S(2) * trans;
      add("4[s'^2 + 2 sum b'_i^2]^2 - 9[...]",
          S(4) * lhs_base * lhs_base -
              S(9) * (sums[2] * sums[2] + S(4) * sums[0] * sums[0] + S(4) * sums[1] * sums[1]));
      break;
    }
    case FamilyKind::KNeg32B:
      add_cross_sums();
      add("3 s'^2 + 7 sum w_i^2 - sum b'_i^2", S(3) * sp2 + S(7) * rot - trans);
      break;
    case FamilyKind::General34:
      add_cross_sums();
      break;
    case FamilyKind::Unconstrained:
      break;
  }
  return out;
}

template <class S>
std::pair<S, S> positivity_identity_sides(const MotionParams<S>& p) {
  const auto q = derived_quantities(p);
  const S sp2 = p.s_prime * p.s_prime;
  S lhs = q.beta + sp2 + S(6) * q.delta - p.w(1) * p.w(1) - p.w(2) * p.w(2) - p.w(7) * p.w(7);
  S rhs = normal_translation_sq(p) + p.w(2) * p.w(2) + sum_sq(p, 8, 11) +
          S(2) * (S(2) * sp2 + p.w(1) * p.w(1) + sum_sq(p, 3, 6));
  return {lhs, rhs};
}

#define EQUIFORM_INSTANTIATE_MOTION(S)                                                          \
  template std::array<S, 5> sphere_condition_residuals(const MotionParams<S>&);                 \
  template bool satisfies_sphere_conditions(const MotionParams<S>&, Tolerance);                 \
  template DerivedQuantities<S> derived_quantities(const MotionParams<S>&);                     \
  template bool check_assumption(const MotionParams<S>&, Tolerance);                            \
  template MotionParams<S> block_rotation_instance(const S&, const S&, const S&);               \
  template std::array<S, 3> cross_sums(const MotionParams<S>&);                                 \
  template S rotation_norm_sq(const MotionParams<S>&);                                          \
  template S normal_translation_sq(const MotionParams<S>&);                                     \
  template struct ConstraintResiduals<S>;                                                       \
  template ConstraintResiduals<S> theorem_constraint_residuals(const MotionParams<S>&, FamilyKind, \
                                                               Tolerance);                      \
  template std::pair<S, S> positivity_identity_sides(const MotionParams<S>&);

EQUIFORM_INSTANTIATE_MOTION(Rational)
EQUIFORM_INSTANTIATE_MOTION(double)

}  // namespace equiform
