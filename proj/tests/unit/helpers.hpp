#pragma once

#include <vector>

#include "radonlike/exponents.hpp"
#include "radonlike/polynomial.hpp"
#include "radonlike/random.hpp"

namespace testing {

using namespace radonlike;

inline VariableLayout layout11() { return {1, 1, false}; }

inline Polynomial term(const VariableLayout& l, std::vector<int> e, Rational c = 1) {
  return Polynomial::monomial(l, Exponents(e.begin(), e.end()), c);
}

/// n' = n'' = 1, all weights one.
inline OperatorSpec spec11(std::vector<Polynomial> s, long beta_dprime = 2, double radius = 0.5) {
  return OperatorSpec{Weights::isotropic(1, 1), MultiIndex{beta_dprime}, std::move(s), radius};
}

inline Rational random_rational(CounterRng& rng, long bound = 9, long den = 7) {
  Rational q(rng.uniform_int(-bound, bound), rng.uniform_int(1, den));
  q.canonicalize();
  return q;
}

/// Random polynomial with up to `terms` monomials of total degree <= `degree`.
inline Polynomial random_polynomial(CounterRng& rng, const VariableLayout& l, int terms, int degree) {
  Polynomial p(l);
  for (int t = 0; t < terms; ++t) {
    Exponents e(l.size(), 0);
    int budget = static_cast<int>(rng.uniform_int(0, degree));
    while (budget-- > 0) ++e[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(l.size()) - 1))];
    p += Polynomial::monomial(l, e, random_rational(rng));
  }
  return p;
}

}  // namespace testing
