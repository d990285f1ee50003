#include "modinv/grassmann.hpp"

#include <stdexcept>
#include <string>

#include "modinv/errors.hpp"

namespace modinv::grassmann {
namespace {

void validate(GrassmannSpec spec) {
  if (spec.k < 1 || spec.k > spec.n) {
    throw std::invalid_argument("Gr(" + std::to_string(spec.k) + "," + std::to_string(spec.n) +
                                ") needs 1 <= k <= n");
  }
}

// 1 - x^k where x is t^2 (vars t) or uv (vars uv).
MPoly one_minus(Vars vars, std::uint32_t k) {
  const std::uint32_t e = vars == Vars::t ? 2 * k : k;
  return MPoly::constant(vars, 1) - MPoly::power(vars, e);
}

MPoly gaussian_binomial(Vars vars, GrassmannSpec spec) {
  validate(spec);
  MPoly num = MPoly::constant(vars, 1);
  MPoly den = MPoly::constant(vars, 1);
  for (int i = 1; i <= spec.k; ++i) {
    num *= one_minus(vars, static_cast<std::uint32_t>(spec.n - spec.k + i));
    den *= one_minus(vars, static_cast<std::uint32_t>(i));
  }
  auto q = poly_exact_div(num, den);
  if (!q) {
    throw CertificationError(CertificationError::Kind::FormulaNotPolynomial,
                             "Gaussian binomial for Gr(" + std::to_string(spec.k) + "," +
                                 std::to_string(spec.n) + ") is not a polynomial");
  }
  return *q;
}

MPoly qpoly(int k) { return MPoly::power(Vars::uv, static_cast<std::uint32_t>(k)); }

}  // namespace

MPoly grassmann_poincare(GrassmannSpec spec) { return gaussian_binomial(Vars::t, spec); }

MPoly grassmann_e(GrassmannSpec spec) { return gaussian_binomial(Vars::uv, spec); }

MPoly projective_e(int n) { return geometric_sum(Vars::uv, 0, n, 1); }

PairSplit pp_pair_e_split(int g) {
  if (g < 3) throw std::invalid_argument("pp_pair_e_split needs g >= 3");
  const MPoly one = MPoly::constant(Vars::uv, 1);
  const MPoly den = (qpoly(1) - one) * (qpoly(2) - one);
  MPoly plus_num = (qpoly(g) - one) * (qpoly(g - 1) - one);
  MPoly minus_num = qpoly(1) * (qpoly(g - 1) - one) * (qpoly(g - 2) - one);
  return {RatFun(std::move(plus_num), den), RatFun(std::move(minus_num), den)};
}

}  // namespace modinv::grassmann
