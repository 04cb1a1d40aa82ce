#include "equiform/crosscheck.hpp"

#include "equiform/errors.hpp"
#include "equiform/sampling.hpp"

namespace equiform {

namespace {

using R = Rational;

R pow_int(const R& x, int n) {
  R out(1);
  for (int k = 0; k < n; ++k) out *= x;
  return out;
}

// 16 w1^6 - 120 w1^4 s + c w1^2 s^2 - 5 s^3 with s = w2^2 + w7^2.
R bracket_012(const R& w1, const R& w2, const R& w7, int c) {
  const R s = w2 * w2 + w7 * w7;
  return R(16) * pow_int(w1, 6) - R(120) * pow_int(w1, 4) * s + R(c) * w1 * w1 * s * s -
         R(5) * s * s * s;
}

R bracket_612(const R& w2, const R& w7) {
  return pow_int(w2, 6) - R(15) * pow_int(w2, 4) * w7 * w7 + R(15) * w2 * w2 * pow_int(w7, 4) -
         pow_int(w7, 6);
}

std::string reading(const R& extracted, const R& normalization, const R& value) {
  return extracted == normalization * value ? "matches" : "differs";
}

}  // namespace

bool CrosscheckReport::classification_ok() const {
  for (const auto& r : rows)
    if (r.applicable && !r.classification_match) return false;
  return true;
}

bool CrosscheckReport::values_ok() const {
  for (const auto& r : rows)
    if (r.applicable && !r.value_match) return false;
  return true;
}

CrosscheckReport coefficient_crosscheck(const MotionParams<R>& p, CrosscheckMode mode, const R& K) {
  if (!satisfies_sphere_conditions(p)) throw PreconditionError("sphere conditions violated");
  const auto cq = scalar_curvature(p);
  const TrigPoly<R> residual = mode == CrosscheckMode::K0 ? cq.P : cq.P - cq.Q.scaled(K);

  CrosscheckReport rep;
  rep.mode = mode;
  rep.K = mode == CrosscheckMode::K0 ? R(0) : K;
  const R k = rep.K;

  const auto q = derived_quantities(p);
  const R &w1 = p.w(1), &w2 = p.w(2), &w7 = p.w(7);
  const R &a6 = q.a(6), &a7 = q.a(7), &a8 = q.a(8);
  const R bd = q.beta + R(2) * q.delta;
  const bool rot_free = sgn(w1) == 0 && sgn(w2) == 0 && sgn(w7) == 0;
  const bool alpha_free = sgn(a6) == 0 && sgn(a7) == 0 && sgn(a8) == 0;

  // Top harmonics carry (K + 6), the 9-harmonics (2K + 3); both reduce to the
  // K = 0 displays (3/8192, 3/32768, 3/16384, 3/256) at K = 0.
  const R top = k + R(6);
  const R nine = R(2) * k + R(3);
  const R b612_adopted = w2 * w7 * (R(3) * w2 * w2 - w7 * w7) * (w2 * w2 - R(3) * w7 * w7);

  struct Row {
    const char* name;
    FreqKey key;
    Basis basis;
    bool applicable;
    const char* hypothesis;
    R reference;
    R normalization;
  };
  const R half(1, 2);
  std::vector<Row> table = {
      {"A_0,12", {0, 12}, Basis::cos, true, "none", top / R(16384) * bracket_012(w1, w2, w7, 90), half},
      {"A_6,12", {6, 12}, Basis::cos, true, "none", top / R(65536) * bracket_612(w2, w7), half},
      {"B_6,12", {6, 12}, Basis::sin, true, "none", top / R(32768) * b612_adopted, half},
      {"B_0,9", {0, 9}, Basis::sin, rot_free, "w1 = w2 = w7 = 0",
       nine / R(256) * a8 * (a8 * a8 - R(6) * (a6 * a6 + a7 * a7)), half},
      {"A_3,9", {3, 9}, Basis::cos, rot_free, "w1 = w2 = w7 = 0",
       nine / R(256) * a6 * (R(3) * a7 * a7 - a6 * a6), half},
      {"B_3,9", {3, 9}, Basis::sin, rot_free, "w1 = w2 = w7 = 0",
       nine / R(256) * a7 * (a7 * a7 - R(3) * a6 * a6), half},
      {"A_0,6", {0, 6}, Basis::cos, rot_free && alpha_free, "w1 = w2 = w7 = 0, alpha_6..8 = 0",
       bd * bd / R(16) * (k * bd - R(2) * (R(2) * q.delta - q.beta - p.s_prime * p.s_prime)),
       R(-1, 2)},
  };

  for (const auto& row : table) {
    CoefficientCheck c;
    c.name = row.name;
    c.key = row.key;
    c.basis = row.basis;
    c.applicable = row.applicable;
    c.hypothesis = row.hypothesis;
    const auto [cc, ss] = residual.coefficient(row.key.i, row.key.j);
    c.extracted = row.basis == Basis::cos ? cc[0] : ss[0];
    c.normalization = row.normalization;
    if (row.applicable) {
      c.reference = row.reference;
      c.classification_match = (sgn(c.extracted) == 0) == (sgn(c.reference) == 0);
      c.value_match = c.extracted == c.normalization * c.reference;
    }
    rep.rows.push_back(std::move(c));
  }

  // Each reading is tested against the extracted value under the same normalization.
  const bool discriminating = !rot_free && sgn(top) != 0;
  const std::string idle = "not discriminating here (all readings vanish)";
  const R& ext_a012 = rep.rows[0].extracted;
  rep.adjudications.push_back(
      {"A_0,12", "coefficient 9 of w1^2 (w2^2 + w7^2)^2 in the K = 0 display, 90 in the K != 0 display",
       "90",
       !discriminating ? idle : "90: " + reading(ext_a012, half, top / R(16384) * bracket_012(w1, w2, w7, 90)) +
           ", 9: " + reading(ext_a012, half, top / R(16384) * bracket_012(w1, w2, w7, 9))});
  const R& ext_b612 = rep.rows[2].extracted;
  const R b612_k0 = w2 * w7 * (R(3) * w2 - w7 * w7) * (w2 * w2 - R(3) * w7 * w7);
  const R b612_gen = w2 * w7 * (R(3) * w2 - w2 * w2) * (w2 * w2 - R(3) * w7 * w7);
  rep.adjudications.push_back(
      {"B_6,12", "(3 w2 - w7^2) in the K = 0 display, (3 w2 - w2^2) in the K != 0 display",
       "(3 w2^2 - w7^2)",
       !discriminating || sgn(w2 * w7) == 0 ? idle : "(3 w2^2 - w7^2): " + reading(ext_b612, half, top / R(32768) * b612_adopted) +
           ", (3 w2 - w7^2): " + reading(ext_b612, half, top / R(32768) * b612_k0) +
           ", (3 w2 - w2^2): " + reading(ext_b612, half, top / R(32768) * b612_gen)});
  rep.adjudications.push_back(
      {"A_6,12, B_6,12", "harmonic labelled cos(12 theta + 6 phi) in the K != 0 text",
       "(i, j) = (6, 12)",
       "P - K Q has no (12, 6) harmonic: " +
           std::string(residual.coefficient(12, 6).first.is_zero() &&
                               residual.coefficient(12, 6).second.is_zero()
                           ? "confirmed"
                           : "contradicted")});
  rep.adjudications.push_back(
      {"A_0,6", "(beta + 2 delta)(beta + s'^2 - 2 delta) in the K = 0 case",
       "(1/16)(beta + 2 delta)^2 [K (beta + 2 delta) - 2 (2 delta - beta - s'^2)] with ratio -1/2",
       "the K = 0 form lacks one factor (beta + 2 delta) > 0, so the vanishing locus is unchanged"});
  return rep;
}

MotionParams<R> crosscheck_instance(std::uint64_t seed, std::uint64_t index) {
  switch (index % 3) {
    case 0: return sample_instance<R>(FamilyKind::Unconstrained, seed, index);
    case 1: {
      auto p = sample_instance<R>(FamilyKind::General34, seed, index);
      SampleRng rng(seed ^ 0x9e3779b97f4a7c15ULL, index);
      for (int i = 4; i <= 7; ++i) p.b(i) = rng.rational(true);
      return p;
    }
    default: return sample_instance<R>(FamilyKind::General34, seed, index);
  }
}

}  // namespace equiform
