#include "modinv/ratfun.hpp"

#include <stdexcept>

#include "modinv/errors.hpp"

namespace modinv {

RatFun::RatFun(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.vars(), 1)) {}

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_vars(num_, den_);
  if (den_.is_zero()) throw std::domain_error("zero denominator");
}

RatFun operator+(const RatFun& a, const RatFun& b) { return ratfun_add(a, b); }

RatFun operator-(const RatFun& a, const RatFun& b) { return ratfun_add(a, -b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<MPoly> RatFun::as_polynomial() const { return poly_exact_div(num_, den_); }

BigRat RatFun::evaluate(const BigRat& x, const BigRat& y) const {
  const BigRat d = den_.evaluate(x, y);
  if (d == 0) throw std::domain_error("denominator vanishes at the evaluation point");
  return num_.evaluate(x, y) / d;
}

RatFun ratfun_add(const RatFun& a, const RatFun& b) {
  return RatFun(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

bool ratfun_eq(const RatFun& a, const RatFun& b) {
  if (a.vars() != b.vars()) return false;
  return a.num() * b.den() == b.num() * a.den();
}

RatFun substitute_diagonal(const RatFun& f) {
  return RatFun(substitute_diagonal(f.num()), substitute_diagonal(f.den()));
}

BigRat limit_at_one(const RatFun& f) {
  if (arity(f.vars()) != 1) throw std::invalid_argument("limit_at_one expects a univariate function");
  if (f.num().is_zero()) return 0;
  const MPoly g = poly_gcd(f.num(), f.den());
  const auto num = poly_exact_div(f.num(), g);
  const auto den = poly_exact_div(f.den(), g);
  if (!num || !den) throw std::logic_error("gcd does not divide its arguments");
  const BigRat d = den->evaluate(1);
  if (d == 0) throw PoleAtOne("denominator vanishes at 1 after cancellation");
  return num->evaluate(1) / d;
}

}  // namespace modinv
