#include "modinv/series.hpp"

#include <stdexcept>

#include "modinv/errors.hpp"

namespace modinv {

TruncSeries::TruncSeries(Vars var, std::size_t order) : var_(var), coeffs_(order + 1) {
  if (arity(var) != 1) throw std::invalid_argument("TruncSeries is univariate");
}

TruncSeries::TruncSeries(Vars var, std::size_t order, std::vector<BigRat> coeffs)
    : var_(var), coeffs_(std::move(coeffs)) {
  if (arity(var) != 1) throw std::invalid_argument("TruncSeries is univariate");
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::from_poly(const MPoly& p, std::size_t order) {
  TruncSeries s(p.vars(), order);
  for (const auto& [e, c] : p.terms()) {
    if (e.i <= order) s.coeffs_[e.i] = c;
  }
  return s;
}

void TruncSeries::require_compatible(const TruncSeries& rhs) const {
  if (var_ != rhs.var_ || coeffs_.size() != rhs.coeffs_.size()) {
    throw std::invalid_argument("TruncSeries: variable or order mismatch");
  }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  require_compatible(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  require_compatible(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const BigRat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.require_compatible(b);
  TruncSeries r(a.var_, a.order());
  const std::size_t n = a.coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t k = 0; i + k < n; ++k) r.coeffs_[i + k] += a.coeffs_[i] * b.coeffs_[k];
  }
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (coeffs_[0] == 0) throw NotExpandable("constant term is zero");
  TruncSeries r(var_, order());
  const BigRat inv0 = BigRat(1) / coeffs_[0];
  r.coeffs_[0] = inv0;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    BigRat acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (coeffs_[k] != 0) acc += coeffs_[k] * r.coeffs_[n - k];
    }
    r.coeffs_[n] = -acc * inv0;
  }
  return r;
}

namespace {

std::uint32_t valuation(const MPoly& p) {
  return p.is_zero() ? 0 : p.terms().front().first.i;  // grlex == degree order here
}

MPoly shift_down(const MPoly& p, std::uint32_t k) {
  std::vector<MPoly::Term> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(Exp{e.i - k, 0}, c);
  return MPoly::from_terms(p.vars(), std::move(terms));
}

}  // namespace

TruncSeries series_expand(const RatFun& f, std::size_t order) {
  if (arity(f.vars()) != 1) throw std::invalid_argument("series_expand expects a univariate function");
  MPoly num = f.num();
  MPoly den = f.den();
  const std::uint32_t vd = valuation(den);
  if (vd > 0) {
    if (!num.is_zero() && valuation(num) < vd) {
      throw NotExpandable("denominator vanishes at 0 to higher order than the numerator");
    }
    num = shift_down(num, vd);
    den = shift_down(den, vd);
  }
  return TruncSeries::from_poly(num, order) * TruncSeries::from_poly(den, order).inverse();
}

}  // namespace modinv
