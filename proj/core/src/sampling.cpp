#include "equiform/sampling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "equiform/errors.hpp"

namespace equiform {

namespace {

template <class S>
using Quat = std::array<S, 4>;

template <class S>
using Mat4 = std::array<std::array<S, 4>, 4>;

template <class S>
using Mat3 = std::array<std::array<S, 3>, 3>;

template <class S>
S norm_sq(const Quat<S>& q) {
  return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
}

// Matrix of x -> q x (quaternion product); columns are orthogonal with norm |q|.
template <class S>
Mat4<S> left_mult(const Quat<S>& q) {
  return {{{q[0], -q[1], -q[2], -q[3]},
           {q[1], q[0], -q[3], q[2]},
           {q[2], q[3], q[0], -q[1]},
           {q[3], -q[2], q[1], q[0]}}};
}

template <class S>
Quat<S> qmul(const Quat<S>& a, const Quat<S>& b) {
  const auto m = left_mult(a);
  Quat<S> out{};
  for (int r = 0; r < 4; ++r) {
    S acc(0);
    for (int c = 0; c < 4; ++c) acc += m[r][c] * b[c];
    out[r] = acc;
  }
  return out;
}

// Rotation of R^3 induced by q, divided by |q|^2 so it stays rational.
template <class S>
Mat3<S> rotation3(const Quat<S>& q) {
  const S& a = q[0];
  const S& b = q[1];
  const S& c = q[2];
  const S& d = q[3];
  const S n = norm_sq(q);
  Mat3<S> r = {{{a * a + b * b - c * c - d * d, S(2) * (b * c - a * d), S(2) * (b * d + a * c)},
                {S(2) * (b * c + a * d), a * a - b * b + c * c - d * d, S(2) * (c * d - a * b)},
                {S(2) * (b * d - a * c), S(2) * (c * d + a * b), a * a - b * b - c * c + d * d}}};
  for (auto& row : r)
    for (auto& x : row) x /= n;
  return r;
}

// Rotation of R^4: L(q)^2 / |q|^2 = L(q^2) / |q^2|.
template <class S>
Mat4<S> rotation4(const Quat<S>& q) {
  auto m = left_mult(qmul(q, q));
  const S n = norm_sq(q);
  for (auto& row : m)
    for (auto& x : row) x /= n;
  return m;
}

template <class S>
Quat<S> random_quat(SampleRng& rng) {
  Quat<S> q;
  do {
    for (auto& x : q) x = rng.scalar<S>();
  } while (is_zero_scalar(norm_sq(q)));
  return q;
}

// Writes the lower 4x3 block: (w3..w6), (w8..w11), (w12..w15) are columns 0..2 of -lower.
template <class S>
void set_lower_block(MotionParams<S>& p, const std::array<std::array<S, 3>, 4>& lower) {
  for (int r = 0; r < 4; ++r) {
    p.w(3 + r) = -lower[r][0];
    p.w(8 + r) = -lower[r][1];
    p.w(12 + r) = -lower[r][2];
  }
}

// The quaternion frame shared by ZeroK, General34 and KNeg32B.
template <class S>
MotionParams<S> frame_instance(const Quat<S>& q, const S& a0, const S& c, const S& s_prime) {
  const auto m = left_mult(q);
  MotionParams<S> p;
  p.s_prime = s_prime;
  for (int r = 0; r < 4; ++r) {
    p.w(3 + r) = a0 * m[r][0];
    p.w(8 + r) = a0 * m[r][1];
    p.w(12 + r) = a0 * m[r][2];
    p.b(4 + r) = c * m[r][3];
  }
  return p;
}

// Integer quaternions with |q|^2 = 3 m^2.
struct ThreeSquareQuat {
  std::array<int, 4> q;
  int m;
};
constexpr std::array<ThreeSquareQuat, 5> kThreeSquare = {{
    {{1, 1, 1, 0}, 1},
    {{3, 1, 1, 1}, 2},
    {{5, 1, 1, 0}, 3},
    {{4, 3, 1, 1}, 3},
    {{3, 3, 3, 0}, 3},
}};

template <class S>
MotionParams<S> sample_kneg32b(SampleRng& rng) {
  if constexpr (is_exact_v<S>) {
    const auto& base = kThreeSquare[static_cast<std::size_t>(rng.integer(0, static_cast<int>(kThreeSquare.size()) - 1))];
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    Quat<S> q;
    for (int k = 0; k < 4; ++k) q[k] = S(rng.coin() ? base.q[perm[k]] : -base.q[perm[k]]);
    const S a0 = rng.rational(true);
    const S d = rng.rational(true);
    // c^2 - sigma^2 = 7 a0^2 with c - sigma = d.
    const S seven_a2 = S(7) * a0 * a0;
    const S c = (d + seven_a2 / d) / S(2);
    const S sigma = (seven_a2 / d - d) / S(2);
    return frame_instance(q, a0, c, S(sigma * S(base.m)));
  } else {
    const auto q = random_quat<S>(rng);
    const S a0 = rng.real(true);
    const S s_prime = rng.real();
    const S n = norm_sq(q);
    const S c = std::sqrt((S(3) * s_prime * s_prime + S(7) * a0 * a0 * n) / n);
    return frame_instance(q, a0, rng.coin() ? c : -c, s_prime);
  }
}

template <class S>
MotionParams<S> sample_unconstrained(SampleRng& rng) {
  MotionParams<S> p;
  p.s_prime = rng.scalar<S>();
  p.w(1) = rng.scalar<S>(true);
  p.w(2) = rng.scalar<S>();
  p.w(7) = rng.scalar<S>();
  const S mu = rng.scalar<S>(true);
  const auto r3 = rotation3(random_quat<S>(rng));
  const auto m4 = rotation4(random_quat<S>(rng));
  const std::array<S, 3> wt = {-p.w(7), p.w(2), -p.w(1)};
  std::array<std::array<S, 3>, 4> base{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) base[r][c] = mu * r3[r][c];
  base[3] = wt;
  std::array<std::array<S, 3>, 4> lower{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 3; ++c) {
      S acc(0);
      for (int k = 0; k < 4; ++k) acc += m4[r][k] * base[k][c];
      lower[r][c] = acc;
    }
  set_lower_block(p, lower);
  for (int i = 4; i <= 7; ++i) p.b(i) = rng.scalar<S>();
  return p;
}

// Unit-sphere parameter vector: s', w1..w15, b'4..b'7.
constexpr int kSearchDim = 20;
using SearchVec = std::array<double, kSearchDim>;

MotionParams<double> from_search(const SearchVec& x) {
  MotionParams<double> p;
  p.s_prime = x[0];
  for (int i = 1; i <= 15; ++i) p.w(i) = x[static_cast<std::size_t>(i)];
  for (int i = 4; i <= 7; ++i) p.b(i) = x[static_cast<std::size_t>(12 + i)];
  return p;
}

double kneg32a_penalty(const SearchVec& x) {
  const auto p = from_search(x);
  double acc = 0.0;
  for (double r : sphere_condition_residuals(p)) acc += r * r;
  const auto res = theorem_constraint_residuals(p, FamilyKind::KNeg32A);
  for (double r : res.values) acc += r * r;
  return acc;
}

void normalize(SearchVec& x) {
  const double n = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
  for (auto& v : x) v /= n;
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

int SampleRng::integer(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Rational SampleRng::rational(bool nonzero) {
  int num = 0;
  do {
    num = integer(-9, 9);
  } while (nonzero && num == 0);
  Rational r(num, integer(1, 9));
  r.canonicalize();
  return r;
}

double SampleRng::real(bool nonzero) {
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  double x = 0.0;
  do {
    x = dist(engine_);
  } while (nonzero && std::fabs(x) < 1e-3);
  return x;
}

template <class S>
MotionParams<S> sample_instance(FamilyKind f, std::uint64_t seed, std::uint64_t index) {
  SampleRng rng(seed, index);
  switch (f) {
    case FamilyKind::ZeroK: {
      const auto q = random_quat<S>(rng);
      const S a0 = rng.scalar<S>(true);
      const S s_prime = rng.scalar<S>();
      return frame_instance(q, a0, rng.coin() ? a0 : S(-a0), s_prime);
    }
    case FamilyKind::General34: {
      const auto q = random_quat<S>(rng);
      const S a0 = rng.scalar<S>(true);
      const S c = rng.scalar<S>();
      return frame_instance(q, a0, c, rng.scalar<S>());
    }
    case FamilyKind::KNeg32B:
      return sample_kneg32b<S>(rng);
    case FamilyKind::Unconstrained:
      return sample_unconstrained<S>(rng);
    case FamilyKind::KNeg32A:
      break;
  }
  throw PreconditionError("KNeg32A has no closed-form sampler; use sample_family");
}

PenaltySearchResult penalty_search_kneg32a(std::uint64_t seed, int restarts, int iterations,
                                           double threshold) {
  PenaltySearchResult out;
  out.best_penalty = std::numeric_limits<double>::infinity();
  constexpr double h = 1e-7;
  for (int r = 0; r < restarts; ++r) {
    SampleRng rng(seed, static_cast<std::uint64_t>(r));
    SearchVec x;
    for (auto& v : x) v = rng.real();
    x[1] = x[2] = x[7] = 0.0;
    normalize(x);
    double fx = kneg32a_penalty(x);
    double step = 0.1;
    for (int it = 0; it < iterations && fx > threshold; ++it) {
      ++out.iterations;
      SearchVec grad;
      for (int k = 0; k < kSearchDim; ++k) {
        SearchVec xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        grad[k] = (kneg32a_penalty(xp) - kneg32a_penalty(xm)) / (2 * h);
      }
      bool improved = false;
      while (step > 1e-14) {
        SearchVec y;
        for (int k = 0; k < kSearchDim; ++k) y[k] = x[k] - step * grad[k];
        normalize(y);
        const double fy = kneg32a_penalty(y);
        if (fy < fx) {
          x = y;
          fx = fy;
          step *= 2.0;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) break;
    }
    ++out.restarts;
    if (fx < out.best_penalty) {
      out.best_penalty = fx;
      out.best = from_search(x);
    }
    if (fx <= threshold) {
      out.found = true;
      break;
    }
  }
  return out;
}

template <class S>
SampleOutcome<S> sample_family(FamilyKind f, std::uint64_t seed, int count) {
  if (count < 1) throw PreconditionError("count must be at least 1");
  SampleOutcome<S> out;
  out.family = f;
  if (f == FamilyKind::KNeg32A) {
    const auto search = penalty_search_kneg32a(seed);
    if (!search.found) {
      out.exhausted = true;
      out.note = "search exhausted: no instance with residual <= 1e-10 after " +
                 std::to_string(search.restarts) + " restarts (best penalty " +
                 format_double(search.best_penalty) + ")";
      return out;
    }
    if constexpr (is_exact_v<S>) {
      out.exhausted = true;
      out.note = "penalty search found a float instance; no exact representative";
    } else {
      out.instances.push_back(search.best);
      out.note = "penalty search";
    }
    return out;
  }
  out.instances.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    out.instances.push_back(sample_instance<S>(f, seed, static_cast<std::uint64_t>(k)));
  return out;
}

template <class S>
MotionParams<S> perturb_w1(const MotionParams<S>& p, const S& value, std::uint64_t seed,
                           std::uint64_t index) {
  SampleRng rng(seed, index);
  Quat<S> u = {p.w(3), p.w(4), p.w(5), p.w(6)};
  if (is_zero_scalar(norm_sq(u))) u = random_quat<S>(rng);
  const double len = std::sqrt(to_double(norm_sq(u)));
  S mu;
  if constexpr (is_exact_v<S>) {
    // Nearest multiple of 1/64, kept away from zero.
    long k = std::lround(len * 64.0);
    mu = Rational(std::max(k, 1L), 64);
    mu.canonicalize();
  } else {
    mu = len;
  }
  MotionParams<S> out = p;
  out.w(1) = value;
  out.w(2) = S(0);
  out.w(7) = S(0);
  const auto m4 = rotation4(u);
  std::array<std::array<S, 3>, 4> base{};
  for (int r = 0; r < 3; ++r) base[r][r] = mu;
  base[3] = {S(0), S(0), S(-value)};
  std::array<std::array<S, 3>, 4> lower{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 3; ++c) {
      S acc(0);
      for (int k = 0; k < 4; ++k) acc += m4[r][k] * base[k][c];
      lower[r][c] = acc;
    }
  set_lower_block(out, lower);
  return out;
}

#define EQUIFORM_INSTANTIATE_SAMPLING(S)                                                      \
  template MotionParams<S> sample_instance<S>(FamilyKind, std::uint64_t, std::uint64_t);      \
  template SampleOutcome<S> sample_family<S>(FamilyKind, std::uint64_t, int);                 \
  template MotionParams<S> perturb_w1(const MotionParams<S>&, const S&, std::uint64_t,        \
                                      std::uint64_t);

EQUIFORM_INSTANTIATE_SAMPLING(Rational)
EQUIFORM_INSTANTIATE_SAMPLING(double)

}  // namespace equiform
