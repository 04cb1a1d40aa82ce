#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equiform/geometry.hpp"
#include "equiform/motion.hpp"

namespace equiform {

/// K0 extracts from P; general extracts from P - K Q.
enum class CrosscheckMode { K0, general };

struct CoefficientCheck {
  std::string name;  // e.g. "A_0,12"
  FreqKey key;
  Basis basis = Basis::cos;
  /// Hypotheses under which the closed form is stated (w1 = w2 = w7 = 0, ...).
  bool applicable = false;
  std::string hypothesis;
  Rational extracted;
  /// Closed form evaluated at the instance (with the adopted typo readings).
  Rational reference;
  /// Fixed ratio extracted / reference from the differing denominator clearing.
  Rational normalization;
  bool classification_match = false;
  bool value_match = false;
};

struct TypoAdjudication {
  std::string coefficient;
  std::string printed;
  std::string adopted;
  /// Whether each reading reproduces the extracted value at this instance
  /// (nullopt-like "n/a" when the coefficient vanishes for both readings).
  std::string evidence;
};

struct CrosscheckReport {
  CrosscheckMode mode = CrosscheckMode::K0;
  Rational K;
  std::vector<CoefficientCheck> rows;
  std::vector<TypoAdjudication> adjudications;

  /// Vanishing classification agrees on every applicable row.
  bool classification_ok() const;
  /// Values agree up to the fixed normalization on every applicable row.
  bool values_ok() const;
};

/// Extracts A_0,12, A_6,12, B_6,12, B_0,9, A_3,9, B_3,9 and A_0,6 from the
/// curvature quotient and compares them with their closed forms in
/// w1, w2, w7, alpha_6..alpha_8, beta, delta, s'. Exact mode only, by type.
/// Throws PreconditionError when the sphere conditions fail.
CrosscheckReport coefficient_crosscheck(const MotionParams<Rational>& p, CrosscheckMode mode,
                                        const Rational& K = Rational(0));

/// Instances exercising every row: index % 3 == 0 gives generic w1, w2, w7;
/// 1 gives w1 = w2 = w7 = 0 with a generic translation (alpha_6..8 != 0);
/// 2 gives a General34 instance.
MotionParams<Rational> crosscheck_instance(std::uint64_t seed, std::uint64_t index);

}  // namespace equiform
