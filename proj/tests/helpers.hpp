#pragma once

#include <random>

#include "modinv/mpoly.hpp"

namespace testing {

using modinv::BigRat;
using modinv::Exp;
using modinv::MPoly;
using modinv::Vars;

inline MPoly t(std::uint32_t k = 1, const BigRat& c = 1) { return MPoly::monomial(Vars::t, {k, 0}, c); }
inline MPoly u(std::uint32_t k = 1) { return MPoly::monomial(Vars::uv, {k, 0}); }
inline MPoly v(std::uint32_t k = 1) { return MPoly::monomial(Vars::uv, {0, k}); }
inline MPoly k(Vars vars, const BigRat& c) { return MPoly::constant(vars, c); }

/// Random polynomial with small rational coefficients. Fixed seeds keep
/// failures reproducible.
inline MPoly random_poly(std::mt19937_64& rng, Vars vars, int max_terms, int max_deg) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<MPoly::Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    const auto a = static_cast<std::uint32_t>(deg(rng));
    const auto b = vars == Vars::uv ? static_cast<std::uint32_t>(deg(rng)) : 0U;
    BigRat c(num(rng), den(rng));
    c.canonicalize();
    terms.emplace_back(Exp{a, b}, c);
  }
  return MPoly::from_terms(vars, std::move(terms));
}

inline MPoly random_nonzero(std::mt19937_64& rng, Vars vars, int max_terms, int max_deg) {
  MPoly p(vars);
  while (p.is_zero()) p = random_poly(rng, vars, max_terms, max_deg);
  return p;
}

}  // namespace testing
