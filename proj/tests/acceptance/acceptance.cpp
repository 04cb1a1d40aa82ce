// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "equiform/analysis.hpp"
#include "equiform/crosscheck.hpp"
#include "equiform/fd_oracle.hpp"
#include "equiform/sampling.hpp"
#include "support.hpp"

namespace {

using namespace equiform;
using R = Rational;

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = false;
  std::string detail;
};

MotionParams<R> block(long a, long c, long s) { return block_rotation_instance<R>(R(a), R(c), R(s)); }

Outcome metric_oracle() {
  std::size_t mismatches = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto p = sample_instance<R>(FamilyKind::Unconstrained, kSeed, i);
    if (!(metric(p) == metric_closed_form(p))) ++mismatches;
  }
  return {mismatches == 0, std::to_string(100 - mismatches) + "/100 instances equal entry by entry"};
}

Outcome derived_relations() {
  std::size_t bad = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto q = derived_quantities(sample_instance<R>(FamilyKind::Unconstrained, kSeed, i));
    bool ok = q.gamma == q.beta + 2 * q.delta;
    for (int k = 1; k <= 5; ++k) ok = ok && q.a(k) == 0;
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(100 - bad) + "/100 with alpha_1..5 = 0 and gamma = beta + 2 delta"};
}

const std::pair<double, double> kFdPoints[] = {{0.7, 0.3}, {1.0, 0.2}, {0.3, -0.4}, {-2.0, 0.9}, {2.5, -1.1}};

Outcome calibration(const MotionParams<R>& p, long k, bool relative) {
  const auto v = constancy(scalar_curvature(p));
  const bool exact = v.constant && v.K == k;
  double worst = 0.0;
  for (const auto& [th, ph] : kFdPoints) {
    const double err = std::abs(fd_curvature(to_float(p), th, ph) - static_cast<double>(k));
    worst = std::max(worst, relative ? err / std::abs(static_cast<double>(k)) : err);
  }
  std::ostringstream os;
  os << "verdict " << (v.constant ? "Constant(" + v.K.get_str() + ")" : std::string("NonConstant"))
     << ", worst FD " << (relative ? "relative" : "absolute") << " error " << worst;
  return {exact && worst <= 1e-6, os.str()};
}

Outcome zero_k() {
  bool ok = verify_theorem(block(1, 1, 1), FamilyKind::ZeroK).pass;
  std::size_t good = 0;
  for (std::uint64_t i = 0; i < 25; ++i) {
    const auto v = constancy(scalar_curvature(sample_instance<R>(FamilyKind::ZeroK, kSeed, i)));
    if (v.constant && v.K == 0) ++good;
  }
  return {ok && good == 25, std::string("block(1,1,1) ") + (ok ? "Constant(0)" : "failed") + ", " +
                                std::to_string(good) + "/25 ZeroK samples Constant(0)"};
}

Outcome general34() {
  const auto v = constancy(scalar_curvature(block(2, 1, 1)));
  const bool ok = v.constant && v.K == 1;
  std::size_t good = 0;
  for (std::uint64_t i = 0; i < 25; ++i) {
    const auto p = sample_instance<R>(FamilyKind::General34, kSeed, i);
    const auto w = constancy(scalar_curvature(p));
    if (w.constant && w.K == k_formula(p)) ++good;
  }
  return {ok && good == 25, std::string("block(2,1,1) ") + (ok ? "Constant(1)" : "failed") + ", " +
                                std::to_string(good) + "/25 General34 samples equal k_formula"};
}

Outcome kneg32b() {
  const auto p = block_rotation_instance<double>(1.0, std::sqrt(10.0), 1.0);
  const auto r = verify_theorem(p, FamilyKind::KNeg32B);
  const double k = r.verdict ? r.verdict->K : std::nan("");
  std::ostringstream os;
  os.precision(17);
  os << "K = " << k;
  return {r.pass && std::abs(k + 1.5) <= 1e-9, os.str()};
}

Outcome no_k6() {
  const auto s = verify_k6_infeasibility(kSeed, 1000);
  std::ostringstream os;
  os << s.count << " constant samples, " << s.failures << " failures, " << s.identity_checks
     << " exact identity checks, K in [" << s.min_k << ", " << s.max_k << "]";
  return {s.pass() && s.count == 1000, os.str()};
}

Outcome bound() {
  const auto s = bound_scan(kSeed, 10000);
  std::ostringstream os;
  os << s.count << " samples (" << s.rejected << " rejected for beta = 0), " << s.failures
     << " failures, min K " << s.min_k << ", max K " << s.max_k;
  for (const auto& [label, k] : s.boundary) os << "; boundary " << label;
  return {s.pass(), os.str()};
}

Outcome crosscheck() {
  std::size_t good = 0, adjudications = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto r = coefficient_crosscheck(crosscheck_instance(kSeed, i), CrosscheckMode::K0);
    if (r.classification_ok()) ++good;
    adjudications += r.adjudications.size();
  }
  const auto sample = coefficient_crosscheck(crosscheck_instance(kSeed, 0), CrosscheckMode::K0);
  std::ostringstream os;
  os << good << "/50 classifications agree; adjudications:";
  for (const auto& a : sample.adjudications) os << " [" << a.coefficient << ": " << a.printed << " -> " << a.adopted << "]";
  return {good == 50 && adjudications > 0, os.str()};
}

Outcome necessity() {
  const auto s = necessity_probe(kSeed, 100);
  std::ostringstream os;
  os << s.detected << "/" << s.trials << " perturbations detected";
  return {s.trials == 100 && s.detected >= 95, os.str()};
}

Outcome algebra_suite() {
  using T = TrigPoly<R>;
  constexpr int kCases = 1000;
  std::mt19937_64 rng(kSeed);
  int ring = 0, deriv = 0, hom = 0, roundtrip = 0;
  std::uniform_real_distribution<double> angle(-3.2, 3.2);
  for (int n = 0; n < kCases; ++n) {
    const T p = testing::random_trig(rng), q = testing::random_trig(rng), r = testing::random_trig(rng);
    if (((p + q) + r - (p + (q + r))).is_zero() && (p * (q + r) - (p * q + p * r)).is_zero() &&
        (p * q - q * p).is_zero())
      ++ring;

    bool d = true;
    for (Var v : kCoordinates)
      d = d && ((p * q).differentiate(v) - (p.differentiate(v) * q + p * q.differentiate(v))).is_zero();
    if (d) ++deriv;

    const double th = angle(rng), ph = angle(rng);
    const R t(static_cast<long>(rng() % 9) - 4, 3);
    const double lhs = (p * q).evaluate(t, th, ph), rhs = p.evaluate(t, th, ph) * q.evaluate(t, th, ph);
    if (std::abs(lhs - rhs) <= 1e-12 * std::max({1.0, std::abs(lhs), (p * q).max_abs_coefficient() * 64}))
      ++hom;

    bool rt = true;
    for (const auto& term : p.terms()) {
      const auto [c, s] = p.coefficient(term.key.i, term.key.j);
      rt = rt && c == term.cos && s == term.sin;
      const T rebuilt = T::make_term(term.key, Basis::cos, term.cos) + T::make_term(term.key, Basis::sin, term.sin);
      rt = rt && rebuilt.coefficient(term.key.i, term.key.j) == std::make_pair(term.cos, term.sin);
    }
    std::vector<TrigTerm<R>> copy(p.terms().begin(), p.terms().end());
    rt = rt && T::from_terms(copy) == p;
    if (rt) ++roundtrip;
  }
  std::ostringstream os;
  os << "ring " << ring << ", derivation " << deriv << ", homomorphism " << hom << ", roundtrip " << roundtrip
     << " of " << kCases;
  return {ring == kCases && deriv == kCases && hom == kCases && roundtrip == kCases, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"metric oracle equivalence", metric_oracle},
      {"derived-relation identity", derived_relations},
      {"flat calibration", [] { return calibration(block(0, 0, 1), 0, false); }},
      {"product calibration", [] { return calibration(block(1, 0, 0), 2, true); }},
      {"zero curvature family", zero_k},
      {"general family and k_formula", general34},
      {"K = -3/2 second pair", kneg32b},
      {"no K = -6", no_k6},
      {"bound |K| < 2", bound},
      {"coefficient crosscheck", crosscheck},
      {"necessity probe", necessity},
      {"algebra property suite", algebra_suite},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
    ++index;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
