#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equiform/scalar.hpp"

namespace equiform {

/// First-order equiform motion at the zero position: scaling rate s',
/// rotation rates omega_1..omega_21 (upper triangle of the skew 7x7 matrix,
/// row by row) and translation rates b'_1..b'_7.
///
/// omega_16..omega_21 act only on coordinates 4..7, where the unit sphere has
/// no extent, so they never reach the metric. They are kept for completeness
/// and reported when nonzero.
template <class S>
struct MotionParams {
  S s_prime{0};
  std::array<S, 21> omega{};
  std::array<S, 7> d_prime{};

  /// omega_i, 1-based as in the motion matrix.
  const S& w(int i) const { return omega[static_cast<std::size_t>(i - 1)]; }
  S& w(int i) { return omega[static_cast<std::size_t>(i - 1)]; }
  /// b'_i, 1-based.
  const S& b(int i) const { return d_prime[static_cast<std::size_t>(i - 1)]; }
  S& b(int i) { return d_prime[static_cast<std::size_t>(i - 1)]; }

  /// The skew-symmetric matrix Omega (0-based rows/columns).
  std::array<std::array<S, 7>, 7> rotation_rate_matrix() const {
    std::array<std::array<S, 7>, 7> m{};
    int k = 0;
    for (int r = 0; r < 7; ++r) {
      m[r][r] = S(0);
      for (int c = r + 1; c < 7; ++c) {
        m[r][c] = omega[static_cast<std::size_t>(k)];
        m[c][r] = -omega[static_cast<std::size_t>(k)];
        ++k;
      }
    }
    return m;
  }

  bool has_inert_entries() const {
    for (int i = 16; i <= 21; ++i)
      if (!is_zero_scalar(w(i))) return true;
    return false;
  }

  bool is_trivial() const {
    if (!is_zero_scalar(s_prime)) return false;
    for (const auto& x : omega)
      if (!is_zero_scalar(x)) return false;
    for (const auto& x : d_prime)
      if (!is_zero_scalar(x)) return false;
    return true;
  }

  friend bool operator==(const MotionParams&, const MotionParams&) = default;
};

MotionParams<double> to_float(const MotionParams<Rational>& p);

/// The scalars alpha_1..alpha_8, beta, gamma, delta entering the metric.
template <class S>
struct DerivedQuantities {
  std::array<S, 8> alpha{};
  S beta{0};
  S gamma{0};
  S delta{0};

  const S& a(int k) const { return alpha[static_cast<std::size_t>(k - 1)]; }
};

/// Parameter families singled out by the constant-curvature classification.
enum class FamilyKind {
  ZeroK,          // K = 0
  KNeg32A,        // K = -3/2, first pair of equations
  KNeg32B,        // K = -3/2, second pair of equations
  General34,      // K = 2(2 delta - beta - s'^2)/(beta + 2 delta)
  Unconstrained,  // sphere conditions and the no-planar-translation assumption only
};

std::string_view family_name(FamilyKind f);
std::optional<FamilyKind> parse_family(std::string_view name);

/// Residuals of the sphere conditions, in order
///   r1 = sum_{i=2}^{6} w_i w_{i+5}
///   r2 = w1 w7 - sum_{i=3}^{6} w_i w_{i+9}
///   r3 = w1 w2 + sum_{i=8}^{11} w_i w_{i+4}
///   r4 = sum_{i=2}^{6} w_i^2 - sum_{i=7}^{11} w_i^2
///   r5 = w1^2 + sum_{i=3}^{6} w_i^2 - w7^2 - sum_{i=12}^{15} w_i^2.
/// All vanish iff the first-order image of the sphere is again a sphere.
template <class S>
std::array<S, 5> sphere_condition_residuals(const MotionParams<S>& p);

template <class S>
bool satisfies_sphere_conditions(const MotionParams<S>& p, Tolerance tol = {});

template <class S>
DerivedQuantities<S> derived_quantities(const MotionParams<S>& p);

/// No translation inside the 3-space of the starting sphere: b'_1 = b'_2 = b'_3 = 0.
template <class S>
bool check_assumption(const MotionParams<S>& p, Tolerance tol = {});

/// w3 = w9 = w15 = a, b'_6 = c, scaling rate s'; everything else zero.
template <class S>
MotionParams<S> block_rotation_instance(const S& a, const S& c, const S& s_prime);

/// Sums over the translation components that no theorem family may excite:
///   {sum_{i=4}^{7} b'_i w_{i-1}, sum b'_i w_{i+4}, sum b'_i w_{i+8}}.
template <class S>
std::array<S, 3> cross_sums(const MotionParams<S>& p);

/// sum_{i=3}^{6} w_i^2 and sum_{i=4}^{7} b'_i^2.
template <class S>
S rotation_norm_sq(const MotionParams<S>& p);
template <class S>
S normal_translation_sq(const MotionParams<S>& p);

template <class S>
struct ConstraintResiduals {
  std::vector<std::string> labels;
  std::vector<S> values;
  /// Violated preconditions (sphere conditions, assumption); reported, not thrown.
  std::vector<std::string> violations;

  /// Largest |value| over the residuals.
  double max_abs() const;
  bool satisfied(double scale = 1.0, Tolerance tol = {}) const;
};

/// Residual vector whose simultaneous vanishing is the hypothesis set of the
/// family's classification result.
template <class S>
ConstraintResiduals<S> theorem_constraint_residuals(const MotionParams<S>& p, FamilyKind f,
                                                    Tolerance tol = {});

/// Both sides of
///   beta + s'^2 + 6 delta - w1^2 - w2^2 - w7^2
///     = sum_{i=4}^{7} b'_i^2 + w2^2 + sum_{i=8}^{11} w_i^2 + 2[2 s'^2 + w1^2 + sum_{i=3}^{6} w_i^2],
/// which holds on the sphere-condition variety under the assumption.
template <class S>
std::pair<S, S> positivity_identity_sides(const MotionParams<S>& p);

}  // namespace equiform
