#include "equiform/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace equiform {

namespace {

template <class S>
void fold_into_canonical(TrigTerm<S>& term) {
  if (term.key.is_canonical()) return;
  term.key = term.key.negated();
  term.sin = -term.sin;
}

template <class S>
S half() {
  return S(1) / S(2);
}

}  // namespace

template <class S>
TrigPoly<S> TrigPoly<S>::make_term(FreqKey key, Basis kind, TPoly<S> coeff) {
  Term term{key, {}, {}};
  if (kind == Basis::cos)
    term.cos = std::move(coeff);
  else
    term.sin = std::move(coeff);
  fold_into_canonical(term);
  if (term.key.is_origin()) term.sin = {};
  TrigPoly out;
  if (!term.cos.is_zero() || !term.sin.is_zero()) out.terms_.push_back(std::move(term));
  return out;
}

template <class S>
TrigPoly<S> TrigPoly<S>::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) {
    fold_into_canonical(t);
    if (t.key.is_origin()) t.sin = {};
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.key < b.key; });
  TrigPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().key == t.key) {
      out.terms_.back().cos += t.cos;
      out.terms_.back().sin += t.sin;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.cos.is_zero() && t.sin.is_zero(); });
  return out;
}

template <class S>
std::pair<TPoly<S>, TPoly<S>> TrigPoly<S>::coefficient(int i, int j) const {
  FreqKey key{i, j};
  const bool flip = !key.is_canonical();
  if (flip) key = key.negated();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const FreqKey& k) { return t.key < k; });
  if (it == terms_.end() || it->key != key) return {};
  return {it->cos, flip ? -it->sin : it->sin};
}

template <class S>
int TrigPoly<S>::max_i() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.key.i);
  return m;
}

template <class S>
int TrigPoly<S>::max_abs_j() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.key.j));
  return m;
}

template <class S>
int TrigPoly<S>::t_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max({d, t.cos.degree(), t.sin.degree()});
  return d;
}

template <class S>
double TrigPoly<S>::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max({m, t.cos.max_abs(), t.sin.max_abs()});
  return m;
}

template <class S>
TrigPoly<S> TrigPoly<S>::differentiate(Var v) const {
  TrigPoly out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term d{t.key, {}, {}};
    if (v == Var::t) {
      d.cos = t.cos.derivative();
      d.sin = t.sin.derivative();
    } else {
      // d/dx [A cos(u) + B sin(u)] = k B cos(u) - k A sin(u), k = du/dx.
      const long k = v == Var::theta ? t.key.i : t.key.j;
      if (k == 0) continue;
      d.cos = t.sin * S(k);
      d.sin = t.cos * S(-k);
    }
    if (!d.cos.is_zero() || !d.sin.is_zero()) out.terms_.push_back(std::move(d));
  }
  return out;
}

template <class S>
TrigPoly<S> TrigPoly<S>::substitute_t(const S& t0) const {
  TrigPoly out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term d{t.key, TPoly<S>(t.cos(t0)), TPoly<S>(t.sin(t0))};
    if (!d.cos.is_zero() || !d.sin.is_zero()) out.terms_.push_back(std::move(d));
  }
  return out;
}

template <class S>
TrigPoly<S> TrigPoly<S>::truncate_t(int max_degree) const {
  TrigPoly out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term d{t.key, t.cos.truncated(max_degree), t.sin.truncated(max_degree)};
    if (!d.cos.is_zero() || !d.sin.is_zero()) out.terms_.push_back(std::move(d));
  }
  return out;
}

template <class S>
TrigPoly<S> TrigPoly<S>::scaled(const S& s) const {
  if (is_zero_scalar(s)) return {};
  TrigPoly out = *this;
  for (auto& t : out.terms_) {
    t.cos *= s;
    t.sin *= s;
  }
  return out;
}

template <class S>
double TrigPoly<S>::evaluate(const S& t, double theta, double phi) const {
  double acc = 0.0;
  for (const auto& term : terms_) {
    const double arg = term.key.i * theta + term.key.j * phi;
    const double c = to_double(term.cos(t));
    const double s = to_double(term.sin(t));
    if (c != 0.0) acc += c * std::cos(arg);
    if (s != 0.0) acc += s * std::sin(arg);
  }
  return acc;
}

template <class S>
TrigPoly<S> TrigPoly<S>::merged(const TrigPoly& o, bool subtract) const {
  TrigPoly out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  auto push_b = [&](const Term& t) {
    out.terms_.push_back(subtract ? Term{t.key, -t.cos, -t.sin} : t);
  };
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->key < b->key)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->key < a->key) {
      push_b(*b++);
    } else {
      Term t = *a;
      if (subtract) {
        t.cos -= b->cos;
        t.sin -= b->sin;
      } else {
        t.cos += b->cos;
        t.sin += b->sin;
      }
      if (!t.cos.is_zero() || !t.sin.is_zero()) out.terms_.push_back(std::move(t));
      ++a;
      ++b;
    }
  }
  return out;
}

template <class S>
TrigPoly<S>& TrigPoly<S>::operator+=(const TrigPoly& o) {
  *this = merged(o, false);
  return *this;
}

template <class S>
TrigPoly<S>& TrigPoly<S>::operator-=(const TrigPoly& o) {
  *this = merged(o, true);
  return *this;
}

template <class S>
TrigPoly<S> mul(const TrigPoly<S>& p, const TrigPoly<S>& q, int max_t_degree) {
  using Term = TrigTerm<S>;
  if (p.is_zero() || q.is_zero()) return {};

  // Dense accumulation grid over i in [0, I], j in [-J, J]; twice the true
  // coefficients are accumulated and halved once at the end.
  const int I = p.max_i() + q.max_i();
  const int J = p.max_abs_j() + q.max_abs_j();
  const int width = 2 * J + 1;
  struct Cell {
    std::vector<S> c;
    std::vector<S> s;
    bool touched = false;
  };
  std::vector<Cell> grid(static_cast<std::size_t>(I + 1) * width);
  auto cell_at = [&](FreqKey k) -> Cell& {
    return grid[static_cast<std::size_t>(k.i) * width + (k.j + J)];
  };

  using P = TPoly<S>;
  for (const Term& a : p.terms()) {
    for (const Term& b : q.terms()) {
      // (Ac cos u + As sin u)(Bc cos v + Bs sin v):
      //   u+v: cos (AcBc - AsBs), sin (AcBs + AsBc)
      //   u-v: cos (AcBc + AsBs), sin (AsBc - AcBs)
      const FreqKey sum{a.key.i + b.key.i, a.key.j + b.key.j};
      Cell& cs = cell_at(sum);
      cs.touched = true;
      P::accumulate_product(cs.c, a.cos, b.cos, max_t_degree);
      P::accumulate_product(cs.c, a.sin, b.sin, max_t_degree, true);
      if (!sum.is_origin()) {
        P::accumulate_product(cs.s, a.cos, b.sin, max_t_degree);
        P::accumulate_product(cs.s, a.sin, b.cos, max_t_degree);
      }

      FreqKey diff{a.key.i - b.key.i, a.key.j - b.key.j};
      const bool flip = !diff.is_canonical();
      if (flip) diff = diff.negated();
      Cell& cd = cell_at(diff);
      cd.touched = true;
      P::accumulate_product(cd.c, a.cos, b.cos, max_t_degree);
      P::accumulate_product(cd.c, a.sin, b.sin, max_t_degree);
      if (!diff.is_origin()) {
        P::accumulate_product(cd.s, a.sin, b.cos, max_t_degree, flip);
        P::accumulate_product(cd.s, a.cos, b.sin, max_t_degree, !flip);
      }
    }
  }

  const S h = half<S>();
  TrigPoly<S> out;
  for (int i = 0; i <= I; ++i) {
    for (int j = (i == 0 ? 0 : -J); j <= J; ++j) {
      Cell& cell = grid[static_cast<std::size_t>(i) * width + (j + J)];
      if (!cell.touched) continue;
      Term t{{i, j}, P::adopt(std::move(cell.c)), P::adopt(std::move(cell.s))};
      if (t.cos.is_zero() && t.sin.is_zero()) continue;
      t.cos *= h;
      t.sin *= h;
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

template <class S>
bool is_zero(const TrigPoly<S>& p, double scale, Tolerance tol) {
  if constexpr (is_exact_v<S>) {
    (void)scale;
    (void)tol;
    return p.is_zero();
  } else {
    return p.max_abs_coefficient() <= tol.eps * scale;
  }
}

template <class S>
std::string format_tpoly(const TPoly<S>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const S& c = p.coeffs()[k];
    if (is_zero_scalar(c)) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (k == 1) os << "*t";
    if (k > 1) os << "*t^" << k;
  }
  return os.str();
}

namespace {

std::string harmonic_name(const FreqKey& k) {
  std::ostringstream os;
  auto part = [&](int n, const char* var) {
    if (n == 0) return;
    if (n == 1)
      os << var;
    else if (n == -1)
      os << "-" << var;
    else
      os << n << var;
  };
  if (k.is_origin()) return "1";
  part(k.i, "θ");
  if (k.j != 0 && k.i != 0) os << (k.j > 0 ? "+" : "");
  part(k.j, "φ");
  return os.str();
}

}  // namespace

template <class S>
std::string format_trig(const TrigPoly<S>& p) {
  if (p.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& t : p.terms()) {
    if (t.key.is_origin()) {
      os << "  const        : " << format_tpoly(t.cos) << "\n";
      continue;
    }
    const std::string h = harmonic_name(t.key);
    if (!t.cos.is_zero()) os << "  cos(" << h << ") : " << format_tpoly(t.cos) << "\n";
    if (!t.sin.is_zero()) os << "  sin(" << h << ") : " << format_tpoly(t.sin) << "\n";
  }
  return os.str();
}

template class TrigPoly<Rational>;
template class TrigPoly<double>;
template TrigPoly<Rational> mul(const TrigPoly<Rational>&, const TrigPoly<Rational>&, int);
template TrigPoly<double> mul(const TrigPoly<double>&, const TrigPoly<double>&, int);
template bool is_zero(const TrigPoly<Rational>&, double, Tolerance);
template bool is_zero(const TrigPoly<double>&, double, Tolerance);
template std::string format_trig(const TrigPoly<Rational>&);
template std::string format_trig(const TrigPoly<double>&);
template std::string format_tpoly(const TPoly<Rational>&);
template std::string format_tpoly(const TPoly<double>&);

}  // namespace equiform
