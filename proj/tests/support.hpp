#pragma once

#include <random>

#include "equiform/trig_poly.hpp"

namespace equiform::testing {

/// Random exact series: up to `terms` harmonics with |i|, |j| <= 3 and t-degree <= 2.
inline TrigPoly<Rational> random_trig(std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<int> freq(-3, 3), num(-9, 9), den(1, 9), deg(0, 2), basis(0, 1);
  std::vector<TrigTerm<Rational>> out;
  for (int k = 0; k < terms; ++k) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    TrigTerm<Rational> term{{freq(rng), freq(rng)}, {}, {}};
    (basis(rng) ? term.sin : term.cos) = TPoly<Rational>(std::move(c));
    out.push_back(std::move(term));
  }
  return TrigPoly<Rational>::from_terms(std::move(out));
}

inline TrigPoly<Rational> rat_term(int i, int j, Basis b, Rational c) {
  return TrigPoly<Rational>::make_term({i, j}, b, TPoly<Rational>(std::move(c)));
}

}  // namespace equiform::testing
