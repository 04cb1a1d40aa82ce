#include "equiform/analysis.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "equiform/errors.hpp"
#include "equiform/sampling.hpp"

namespace equiform {

namespace {

template <class S>
double magnitude_scale(const MotionParams<S>& p) {
  double m = std::abs(to_double(p.s_prime));
  for (const auto& x : p.omega) m = std::max(m, std::abs(to_double(x)));
  for (const auto& x : p.d_prime) m = std::max(m, std::abs(to_double(x)));
  return std::max(1.0, m);
}

template <class S>
std::vector<HarmonicResidual> spectrum_of(const TrigPoly<S>& r, double scale, Tolerance tol) {
  std::vector<HarmonicResidual> out;
  for (const auto& term : r.terms()) {
    HarmonicResidual h{term.key, std::abs(to_double(term.cos[0])), std::abs(to_double(term.sin[0]))};
    if constexpr (!is_exact_v<S>) {
      if (std::max(h.cos_mag, h.sin_mag) <= tol.eps * scale) continue;
    }
    out.push_back(h);
  }
  std::sort(out.begin(), out.end(), [](const HarmonicResidual& a, const HarmonicResidual& b) {
    return std::max(a.cos_mag, a.sin_mag) > std::max(b.cos_mag, b.sin_mag);
  });
  return out;
}

std::vector<double> default_edges() {
  std::vector<double> e;
  for (int k = -4; k <= 4; ++k) e.push_back(0.5 * k);
  return e;
}

// Bin 0 is (-inf, -2), the last bin [2, inf).
void add_to_histogram(ScanStats& s, double k) {
  if (s.bin_edges.empty()) {
    s.bin_edges = default_edges();
    s.bin_counts.assign(s.bin_edges.size() + 1, 0);
  }
  const auto it = std::upper_bound(s.bin_edges.begin(), s.bin_edges.end(), k);
  ++s.bin_counts[static_cast<std::size_t>(it - s.bin_edges.begin())];
}

template <class S>
void record_k(ScanStats& s, double k, std::size_t index, const MotionParams<S>& p) {
  if (s.count == 0 || k < s.min_k) {
    s.min_k = k;
    s.argmin = index;
    s.argmin_params = describe(p);
  }
  if (s.count == 0 || k > s.max_k) {
    s.max_k = k;
    s.argmax = index;
    s.argmax_params = describe(p);
  }
  ++s.count;
  add_to_histogram(s, k);
}

}  // namespace

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EQUIFORM_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

template <class S>
std::string describe(const MotionParams<S>& p) {
  std::ostringstream os;
  os << "s'=" << to_string(p.s_prime);
  for (int i = 1; i <= 21; ++i)
    if (!is_zero_scalar(p.w(i))) os << " w" << i << "=" << to_string(p.w(i));
  for (int i = 1; i <= 7; ++i)
    if (!is_zero_scalar(p.b(i))) os << " b'" << i << "=" << to_string(p.b(i));
  return os.str();
}

template <class S>
ConstancyVerdict<S> constancy(const CurvatureQuotient<S>& cq, ProbePoint probe, Tolerance tol) {
  const double q0 = cq.Q.evaluate(S(0), probe.theta, probe.phi);
  if (cq.Q.is_zero() || std::abs(q0) <= tol.eps * cq.Q.max_abs_coefficient())
    throw PoleOfChartError("Q vanishes at the probe point; choose a different probe");
  const double k_probe = cq.P.evaluate(S(0), probe.theta, probe.phi) / q0;

  ConstancyVerdict<S> v;
  if constexpr (is_exact_v<S>) {
    // The first harmonic carrying Q fixes the only possible rational K.
    const auto& lead = cq.Q.terms().front();
    const bool use_cos = !lead.cos.is_zero();
    const S q_lead = use_cos ? lead.cos[0] : lead.sin[0];
    const auto [pc, ps] = cq.P.coefficient(lead.key.i, lead.key.j);
    v.K = (use_cos ? pc[0] : ps[0]) / q_lead;
    const TrigPoly<S> residual = cq.P - cq.Q.scaled(v.K);
    v.constant = residual.is_zero();
    if (!v.constant) v.residual_spectrum = spectrum_of(residual, 1.0, tol);
    (void)k_probe;
  } else {
    v.K = k_probe;
    const TrigPoly<S> residual = cq.P - cq.Q.scaled(v.K);
    const double qmax = cq.Q.max_abs_coefficient();
    const double scale = std::max({cq.P.max_abs_coefficient(), qmax, std::abs(v.K) * qmax});
    v.constant = is_zero(residual, scale, tol);
    if (!v.constant) v.residual_spectrum = spectrum_of(residual, scale, tol);
  }
  return v;
}

template <class S>
S k_formula(const MotionParams<S>& p) {
  const auto q = derived_quantities(p);
  const S den = q.beta + S(2) * q.delta;
  if (is_zero_scalar(den)) throw PreconditionError("beta + 2 delta = 0: trivial motion");
  return S(2) * (S(2) * q.delta - q.beta - p.s_prime * p.s_prime) / den;
}

template <class S>
S k_formula_frame(const MotionParams<S>& p) {
  const S rot = rotation_norm_sq(p);
  const S trans = normal_translation_sq(p);
  const S den = p.s_prime * p.s_prime + rot + trans;
  if (is_zero_scalar(den)) throw PreconditionError("zero denominator: trivial motion");
  return S(2) * (rot - trans) / den;
}

template <class S>
std::optional<S> predicted_k(const MotionParams<S>& p, FamilyKind f) {
  switch (f) {
    case FamilyKind::ZeroK: return S(0);
    case FamilyKind::KNeg32A:
    case FamilyKind::KNeg32B: return S(-3) / S(2);
    case FamilyKind::General34: return k_formula(p);
    case FamilyKind::Unconstrained: return std::nullopt;
  }
  return std::nullopt;
}

template <class S>
TheoremReport<S> verify_theorem(const MotionParams<S>& p, FamilyKind f, Tolerance tol) {
  TheoremReport<S> r;
  r.family = f;
  r.instance = p;
  r.constraints = theorem_constraint_residuals(p, f, tol);
  const double scale = std::pow(magnitude_scale(p), 4);
  r.constraints_hold = r.constraints.satisfied(scale, tol);
  for (const auto& v : r.constraints.violations) r.diagnostics.push_back(v);
  for (std::size_t k = 0; k < r.constraints.values.size(); ++k)
    if (!is_negligible(r.constraints.values[k], scale, tol))
      r.diagnostics.push_back("constraint " + r.constraints.labels[k] + " = " +
                              to_string(r.constraints.values[k]));
  if (p.has_inert_entries()) r.diagnostics.push_back("note: w16..w21 nonzero (inert)");

  try {
    r.predicted = predicted_k(p, f);
  } catch (const std::exception& e) {
    r.diagnostics.push_back(e.what());
  }
  try {
    r.verdict = constancy(scalar_curvature(p), ProbePoint{}, tol);
  } catch (const std::exception& e) {
    r.diagnostics.push_back(std::string("pipeline: ") + e.what());
  }

  bool agree = false;
  if (r.verdict && !r.verdict->constant) {
    r.diagnostics.push_back("curvature is not constant");
  } else if (r.verdict && r.predicted) {
    if constexpr (is_exact_v<S>) {
      agree = r.verdict->K == *r.predicted;
    } else {
      agree = std::abs(r.verdict->K - *r.predicted) <= tol.eps * std::max(1.0, std::abs(*r.predicted));
    }
    if (!agree)
      r.diagnostics.push_back("pipeline K " + to_string(r.verdict->K) + " != predicted " +
                              to_string(*r.predicted));
  } else if (r.verdict && f == FamilyKind::Unconstrained) {
    agree = true;
  }
  r.pass = r.constraints_hold && agree;
  return r;
}

ScanStats verify_k6_infeasibility(std::uint64_t seed, std::size_t n) {
  constexpr FamilyKind kRotation[] = {FamilyKind::ZeroK, FamilyKind::KNeg32B,
                                      FamilyKind::General34, FamilyKind::Unconstrained};
  struct Draw {
    bool degenerate = false;
    bool identity_ok = false;
    bool constant = false;
    double k = 0.0;
    std::string params;
  };

  ScanStats s;
  s.requested = n;
  const std::size_t max_draws = 20 * n + 100;
  const std::size_t batch = 64;
  std::size_t drawn = 0;
  while (s.count < n && drawn < max_draws) {
    std::vector<Draw> draws(batch);
    parallel_for(batch, [&](std::size_t k) {
      const std::size_t index = drawn + k;
      const auto p = sample_instance<Rational>(kRotation[index % 4], seed, index);
      Draw& d = draws[k];
      const auto [lhs, rhs] = positivity_identity_sides(p);
      d.identity_ok = lhs == rhs;
      try {
        const auto v = constancy(scalar_curvature(p));
        d.constant = v.constant;
        d.k = v.k_value();
      } catch (const DegenerateMetricError&) {
        d.degenerate = true;
      } catch (const PoleOfChartError&) {
        d.degenerate = true;
      }
      if (!d.identity_ok || (d.constant && std::abs(d.k + 6.0) <= 1e-9)) d.params = describe(p);
    });
    for (std::size_t k = 0; k < batch && s.count < n; ++k) {
      const Draw& d = draws[k];
      const std::size_t index = drawn + k;
      ++s.identity_checks;
      if (!d.identity_ok) {
        ++s.failures;
        s.notes.push_back("positivity identity fails at draw " + std::to_string(index) + ": " + d.params);
      }
      if (d.degenerate) {
        ++s.rejected;
        continue;
      }
      if (!d.constant) continue;
      if (std::abs(d.k + 6.0) <= 1e-9) {
        ++s.failures;
        s.notes.push_back("K = -6 at draw " + std::to_string(index) + ": " + d.params);
      }
      if (s.count == 0 || d.k < s.min_k) s.argmin = index;
      if (s.count == 0 || d.k > s.max_k) s.argmax = index;
      s.min_k = s.count == 0 ? d.k : std::min(s.min_k, d.k);
      s.max_k = s.count == 0 ? d.k : std::max(s.max_k, d.k);
      ++s.count;
      add_to_histogram(s, d.k);
    }
    drawn += batch;
  }
  if (s.count < n) {
    ++s.failures;
    s.notes.push_back("only " + std::to_string(s.count) + " constant instances in " +
                      std::to_string(drawn) + " draws");
  }
  s.notes.push_back(std::to_string(drawn) + " draws, " + std::to_string(s.count) + " constant");
  return s;
}

ScanStats bound_scan(std::uint64_t seed, std::size_t n) {
  struct Draw {
    bool rejected = false;
    bool ok = false;
    double k = 0.0;
    std::string note;
  };
  ScanStats s;
  s.requested = n;
  const std::size_t batch = 256;
  std::size_t drawn = 0;
  const std::size_t max_draws = 4 * n + 100;
  while (s.count < n && drawn < max_draws) {
    std::vector<Draw> draws(batch);
    std::vector<MotionParams<Rational>> params(batch);
    parallel_for(batch, [&](std::size_t k) {
      const std::size_t index = drawn + k;
      auto& p = params[k];
      p = sample_instance<Rational>(FamilyKind::General34, seed, index);
      Draw& d = draws[k];
      if (sgn(derived_quantities(p).beta) <= 0) {
        d.rejected = true;
        return;
      }
      try {
        const auto v = constancy(scalar_curvature(p));
        d.k = v.k_value();
        const Rational expected = k_formula(p);
        if (!v.constant) {
          d.note = "not constant";
        } else if (v.K != expected) {
          d.note = "K " + v.K.get_str() + " != k_formula " + expected.get_str();
        } else if (!(v.K > -2 && v.K < 2)) {
          d.note = "K = " + v.K.get_str() + " outside (-2, 2)";
        } else {
          d.ok = true;
        }
      } catch (const std::exception& e) {
        d.note = e.what();
      }
    });
    for (std::size_t k = 0; k < batch && s.count < n; ++k) {
      const Draw& d = draws[k];
      const std::size_t index = drawn + k;
      if (d.rejected) {
        ++s.rejected;
        continue;
      }
      if (!d.ok) {
        ++s.failures;
        s.notes.push_back("draw " + std::to_string(index) + ": " + d.note + " at " + describe(params[k]));
      }
      record_k(s, d.k, index, params[k]);
    }
    drawn += batch;
  }
  if (s.count < n) {
    ++s.failures;
    s.notes.push_back("only " + std::to_string(s.count) + " instances with beta > 0");
  }

  // beta = s' = 0: pure rotations, reported without asserting strictness.
  for (const Rational& a : {Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
    const auto p = block_rotation_instance<Rational>(a, Rational(0), Rational(0));
    const auto v = constancy(scalar_curvature(p));
    s.boundary.emplace_back("pure rotation a=" + a.get_str() +
                                (v.constant ? " constant K=" + v.K.get_str() : " non-constant"),
                            v.k_value());
  }
  return s;
}

NecessityStats necessity_probe(std::uint64_t seed, std::size_t n) {
  struct Trial {
    bool base_ok = false;
    bool detected = false;
    std::string note;
  };
  std::vector<Trial> trials(n);
  parallel_for(n, [&](std::size_t k) {
    const auto base = sample_instance<Rational>(FamilyKind::General34, seed, k);
    Trial& t = trials[k];
    t.base_ok = verify_theorem(base, FamilyKind::General34).pass;
    const auto perturbed = perturb_w1(base, Rational(1), seed, k);
    // Detection is decided by the curvature pipeline alone, not by the w1 residual.
    try {
      const auto v = constancy(scalar_curvature(perturbed));
      t.detected = !v.constant || v.K != k_formula(perturbed);
    } catch (const std::exception& e) {
      t.detected = true;
      t.note = e.what();
    }
    if (!t.detected) t.note = describe(perturbed);
  });
  NecessityStats s;
  s.trials = n;
  for (const auto& t : trials) {
    if (!t.base_ok) ++s.base_failures;
    if (t.detected)
      ++s.detected;
    else
      s.undetected.push_back(t.note);
  }
  return s;
}

#define EQUIFORM_INSTANTIATE_ANALYSIS(S)                                                       \
  template std::string describe(const MotionParams<S>&);                                       \
  template ConstancyVerdict<S> constancy(const CurvatureQuotient<S>&, ProbePoint, Tolerance);  \
  template S k_formula(const MotionParams<S>&);                                                \
  template S k_formula_frame(const MotionParams<S>&);                                          \
  template std::optional<S> predicted_k(const MotionParams<S>&, FamilyKind);                   \
  template TheoremReport<S> verify_theorem(const MotionParams<S>&, FamilyKind, Tolerance);

EQUIFORM_INSTANTIATE_ANALYSIS(Rational)
EQUIFORM_INSTANTIATE_ANALYSIS(double)

}  // namespace equiform
