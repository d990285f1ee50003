#pragma once

#include <span>
#include <vector>

#include "modinv/ratfun.hpp"

namespace modinv {

/// Univariate power series modulo x^(order+1).
class TruncSeries {
 public:
  TruncSeries(Vars var, std::size_t order);
  /// Truncates or zero-pads `coeffs` to length order+1.
  TruncSeries(Vars var, std::size_t order, std::vector<BigRat> coeffs);
  /// Truncation of a univariate polynomial.
  static TruncSeries from_poly(const MPoly& p, std::size_t order);

  Vars var() const { return var_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const BigRat> coeffs() const { return coeffs_; }
  /// Zero beyond the order is not claimed: throws std::out_of_range.
  const BigRat& operator[](std::size_t k) const { return coeffs_.at(k); }

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const BigRat& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

  /// Multiplicative inverse; throws NotExpandable if the constant term is 0.
  TruncSeries inverse() const;

  bool operator==(const TruncSeries& rhs) const = default;

 private:
  void require_compatible(const TruncSeries& rhs) const;

  Vars var_;
  std::vector<BigRat> coeffs_;
};

/// Power series of a univariate rational function through degree `order`.
/// A common factor t^k of num and den is shifted out first; if den still
/// vanishes at 0 the function has a pole there and NotExpandable is thrown.
TruncSeries series_expand(const RatFun& f, std::size_t order);

}  // namespace modinv
