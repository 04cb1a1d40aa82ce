#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "equiform/motion.hpp"

namespace equiform {

/// Deterministic per-(seed, index) random source.
///
/// Exact draws are p/q with p uniform in [-9, 9] and q uniform in [1, 9];
/// float draws are uniform in [-3, 3].
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index);

  Rational rational(bool nonzero = false);
  double real(bool nonzero = false);
  int integer(int lo, int hi);
  bool coin() { return integer(0, 1) == 1; }

  template <class S>
  S scalar(bool nonzero = false) {
    if constexpr (is_exact_v<S>)
      return rational(nonzero);
    else
      return real(nonzero);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

template <class S>
struct SampleOutcome {
  FamilyKind family = FamilyKind::Unconstrained;
  std::vector<MotionParams<S>> instances;
  /// No admissible instance was found within the search budget.
  bool exhausted = false;
  std::string note;
};

/// One instance of a family, drawn from SampleRng(seed, index).
///
/// ZeroK, General34 and KNeg32B are built from a quaternion frame: with
/// L(q) the left-multiplication matrix of q, (w3..w6), (w8..w11), (w12..w15)
/// are a0 times its first three columns and (b'4..b'7) is c times the last.
/// ZeroK takes c = +-a0. KNeg32B uses |q|^2 = 3 m^2 so that
/// 3 s'^2 + 7 a0^2 |q|^2 = c^2 |q|^2 has rational solutions (exact mode) or
/// c from a square root (float mode). Unconstrained instances carry nonzero
/// w1, w2, w7 and a generic translation. KNeg32A has no closed family and
/// throws PreconditionError here; use sample_family.
template <class S>
MotionParams<S> sample_instance(FamilyKind f, std::uint64_t seed, std::uint64_t index);

/// `count` instances, index 0..count-1. KNeg32A goes through penalty_search_kneg32a.
template <class S>
SampleOutcome<S> sample_family(FamilyKind f, std::uint64_t seed, int count);

struct PenaltySearchResult {
  bool found = false;
  MotionParams<double> best;
  double best_penalty = 0.0;
  int restarts = 0;
  int iterations = 0;
};

/// Minimizes the sum of squared KNeg32A residuals (sphere conditions
/// included, b'1..b'3 fixed to zero) on the unit sphere of parameter space,
/// by gradient descent from random restarts. `found` iff the penalty drops
/// to `threshold`.
PenaltySearchResult penalty_search_kneg32a(std::uint64_t seed, int restarts = 24,
                                           int iterations = 400, double threshold = 1e-20);

/// w1 <- value with the frame re-projected onto the sphere-condition variety.
///
/// The lower 4x3 block of the rotation rates is replaced by
/// M [mu I; (0, 0, -value)], where M = L(u)^2 / |u|^2 is a rational rotation
/// built from u = (w3..w6) and mu approximates |u| (to 1/64 in exact mode).
/// s' and b' are kept.
template <class S>
MotionParams<S> perturb_w1(const MotionParams<S>& p, const S& value, std::uint64_t seed,
                           std::uint64_t index);

}  // namespace equiform
