#pragma once

#include <optional>

#include "modinv/mpoly.hpp"

namespace modinv {

/// Unreduced fraction num/den. Equality is cross-multiplication; nothing
/// here ever computes a multivariate GCD.
class RatFun {
 public:
  explicit RatFun(MPoly num);
  /// Throws std::domain_error if den is zero, std::invalid_argument on
  /// mismatched variable sets.
  RatFun(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  Vars vars() const { return num_.vars(); }

  RatFun operator-() const { return RatFun(-num_, den_); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  /// Throws std::domain_error if b is zero.
  friend RatFun operator/(const RatFun& a, const RatFun& b);

  /// The polynomial num/den when den divides num exactly.
  std::optional<MPoly> as_polynomial() const;

  /// Throws std::domain_error if the denominator vanishes at the point.
  BigRat evaluate(const BigRat& x, const BigRat& y = 0) const;

  RatFun swap_uv() const { return RatFun(num_.swap_uv(), den_.swap_uv()); }

 private:
  MPoly num_;
  MPoly den_;
};

RatFun ratfun_add(const RatFun& a, const RatFun& b);
bool ratfun_eq(const RatFun& a, const RatFun& b);

/// Every u and v replaced by t.
RatFun substitute_diagonal(const RatFun& f);

/// Value at t = 1 after cancelling the univariate GCD of num and den.
/// Throws PoleAtOne if the reduced denominator still vanishes at 1.
BigRat limit_at_one(const RatFun& f);

}  // namespace modinv
