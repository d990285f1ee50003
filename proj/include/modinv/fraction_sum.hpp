#pragma once

#include <vector>

#include "modinv/ratfun.hpp"

namespace modinv {

// Sum of fractions whose denominators are given as products of factors.
//
// Factors are normalized to be monic (graded-lex leading coefficient 1) and
// identical factors are merged, so the common denominator is the LCM of the
// factor multisets. No polynomial GCD is involved: (1-uv) and (uv-1) are
// recognized as the same factor, (uv)^2-1 and uv-1 are not.
class FractionSum {
 public:
  explicit FractionSum(Vars vars) : vars_(vars) {}

  void add(const MPoly& num, const std::vector<MPoly>& den_factors = {});
  void add(const RatFun& f) { add(f.num(), {f.den()}); }

  /// Current common denominator, expanded.
  MPoly denominator() const;
  RatFun collect() const;

  std::size_t num_factors() const { return factors_.size(); }

 private:
  struct Entry {
    MPoly num;
    std::vector<int> mult;  // per factor in factors_
  };

  Vars vars_;
  std::vector<MPoly> factors_;
  std::vector<int> max_mult_;
  std::vector<Entry> entries_;
};

}  // namespace modinv
