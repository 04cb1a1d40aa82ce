#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "equiform/geometry.hpp"
#include "equiform/motion.hpp"

namespace equiform {

struct ProbePoint {
  double theta = 0.7;
  double phi = 0.3;
};

struct HarmonicResidual {
  FreqKey key;
  double cos_mag = 0.0;
  double sin_mag = 0.0;
};

template <class S>
struct ConstancyVerdict {
  bool constant = false;
  /// Certified value when constant; otherwise the rejected candidate.
  S K{0};
  /// Harmonics of P - K Q that failed to vanish, largest first.
  std::vector<HarmonicResidual> residual_spectrum;

  double k_value() const { return to_double(K); }
};

/// Constant(K) iff every harmonic of P - K Q vanishes.
///
/// The candidate is P/Q at the probe. In exact mode it is replaced by the
/// ratio of the first harmonic where Q is nonzero, and that rational is what
/// gets certified. Float mode compares against
/// max(|P|, |Q|, |K| |Q|) * tol.eps. Throws PoleOfChartError at a zero of Q.
template <class S>
ConstancyVerdict<S> constancy(const CurvatureQuotient<S>& cq, ProbePoint probe = {},
                              Tolerance tol = {});

/// 2 (2 delta - beta - s'^2) / (beta + 2 delta). Throws PreconditionError when
/// beta + 2 delta = 0.
template <class S>
S k_formula(const MotionParams<S>& p);

/// The quotient 2 [sum w_i^2 - sum b'_i^2] / [s'^2 + sum w_i^2 + sum b'_i^2]
/// (w over 3..6, b' over 4..7) stated for the General34 family.
template <class S>
S k_formula_frame(const MotionParams<S>& p);

/// K predicted for the family, or nullopt for Unconstrained.
template <class S>
std::optional<S> predicted_k(const MotionParams<S>& p, FamilyKind f);

template <class S>
struct TheoremReport {
  FamilyKind family = FamilyKind::Unconstrained;
  MotionParams<S> instance;
  ConstraintResiduals<S> constraints;
  bool constraints_hold = false;
  std::optional<ConstancyVerdict<S>> verdict;
  std::optional<S> predicted;
  bool pass = false;
  std::vector<std::string> diagnostics;
};

/// Never throws on bad instances: failures land in diagnostics.
template <class S>
TheoremReport<S> verify_theorem(const MotionParams<S>& p, FamilyKind f, Tolerance tol = {});

struct ScanStats {
  std::size_t requested = 0;
  std::size_t count = 0;
  std::size_t rejected = 0;
  std::size_t failures = 0;
  double min_k = 0.0;
  double max_k = 0.0;
  std::size_t argmin = 0;
  std::size_t argmax = 0;
  std::string argmin_params;
  std::string argmax_params;
  /// Histogram over [-2, 2] in eight bins plus under/overflow at the ends.
  std::vector<double> bin_edges;
  std::vector<std::size_t> bin_counts;
  /// Exact identity checks performed (cor-k6 only).
  std::size_t identity_checks = 0;
  /// Boundary observations that are reported but not asserted.
  std::vector<std::pair<std::string, double>> boundary;
  std::vector<std::string> notes;

  bool pass() const { return failures == 0 && count > 0; }
};

/// Draws constancy-passing instances from ZeroK, KNeg32B, General34 and
/// Unconstrained in rotation until `n` constant verdicts are collected,
/// asserting none is within 1e-9 of -6 and checking the positivity identity
/// exactly on every draw.
ScanStats verify_k6_infeasibility(std::uint64_t seed, std::size_t n);

/// `n` exact General34 instances with beta > 0 (draws with beta = 0 are
/// rejected and counted). Fails on any K outside (-2, 2) or any disagreement
/// with k_formula. Pure rotations are evaluated as boundary observations.
ScanStats bound_scan(std::uint64_t seed, std::size_t n);

struct NecessityStats {
  std::size_t trials = 0;
  std::size_t detected = 0;
  std::size_t base_failures = 0;
  std::vector<std::string> undetected;
};

/// Sets w1 <- 1 on `n` General34 instances (re-projected onto the sphere
/// conditions) and counts perturbations that no longer pass as General34.
NecessityStats necessity_probe(std::uint64_t seed, std::size_t n);

/// Hardware concurrency, capped by the EQUIFORM_THREADS environment variable.
unsigned worker_count();

/// Calls fn(i) for every i in [0, n) on worker_count() threads. Callers write
/// into per-index slots, so results come out in index order. The first
/// exception thrown by fn is rethrown after all workers finish.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Compact one-line rendering of the nonzero parameters.
template <class S>
std::string describe(const MotionParams<S>& p);

}  // namespace equiform
