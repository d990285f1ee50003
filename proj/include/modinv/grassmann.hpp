#pragma once

#include "modinv/ratfun.hpp"

namespace modinv::grassmann {

/// Gr(k, n): k-planes in an n-dimensional space, 1 <= k <= n.
struct GrassmannSpec {
  int k;
  int n;
};

/// Prod_{i=1..k} (1 - t^{2(n-k+i)}) / (1 - t^{2i}), certified polynomial.
MPoly grassmann_poincare(GrassmannSpec spec);

/// The same Gaussian binomial in uv: Prod ((uv)^{n-k+i} - 1) / ((uv)^i - 1).
MPoly grassmann_e(GrassmannSpec spec);

/// E(P^n) = 1 + uv + ... + (uv)^n; zero for n < 0 (the empty space).
MPoly projective_e(int n);

/// Split of E(P^{g-2} x P^{g-2}) into the parts invariant and
/// anti-invariant under swapping the two factors.
struct PairSplit {
  RatFun plus;
  RatFun minus;
};

/// Requires g >= 3.
PairSplit pp_pair_e_split(int g);

}  // namespace modinv::grassmann
