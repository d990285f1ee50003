#include "modinv/fraction_sum.hpp"

#include <stdexcept>

namespace modinv {

void FractionSum::add(const MPoly& num, const std::vector<MPoly>& den_factors) {
  if (num.vars() != vars_) throw std::invalid_argument("FractionSum: variable mismatch");
  MPoly scaled = num;
  std::vector<int> mult(factors_.size(), 0);
  for (const auto& factor : den_factors) {
    if (factor.vars() != vars_) throw std::invalid_argument("FractionSum: variable mismatch");
    if (factor.is_zero()) throw std::domain_error("FractionSum: zero denominator factor");
    const BigRat lc = factor.leading_term().second;
    MPoly monic = factor * (BigRat(1) / lc);
    scaled *= BigRat(1) / lc;
    if (monic.degree() == 0) continue;

    std::size_t idx = 0;
    while (idx < factors_.size() && !(factors_[idx] == monic)) ++idx;
    if (idx == factors_.size()) {
      factors_.push_back(std::move(monic));
      max_mult_.push_back(0);
      mult.push_back(0);
      for (auto& e : entries_) e.mult.push_back(0);
    }
    ++mult[idx];
    max_mult_[idx] = std::max(max_mult_[idx], mult[idx]);
  }
  entries_.push_back({std::move(scaled), std::move(mult)});
}

MPoly FractionSum::denominator() const {
  MPoly den = MPoly::constant(vars_, 1);
  for (std::size_t k = 0; k < factors_.size(); ++k) den *= factors_[k].pow(max_mult_[k]);
  return den;
}

RatFun FractionSum::collect() const {
  MPoly num(vars_);
  for (const auto& e : entries_) {
    MPoly term = e.num;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      const int missing = max_mult_[k] - (k < e.mult.size() ? e.mult[k] : 0);
      if (missing > 0) term *= factors_[k].pow(missing);
    }
    num += term;
  }
  return RatFun(std::move(num), denominator());
}

}  // namespace modinv
