#include "modinv/mpoly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace modinv {

const char* to_string(Vars vars) {
  switch (vars) {
    case Vars::t: return "t";
    case Vars::q: return "q";
    case Vars::uv: return "u,v";
  }
  return "?";
}

Exp add_exp(const Exp& a, const Exp& b) {
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  if (a.i > kMax - b.i || a.j > kMax - b.j) {
    throw std::overflow_error("exponent overflow");
  }
  return {a.i + b.i, a.j + b.j};
}

void require_same_vars(const MPoly& a, const MPoly& b) {
  if (a.vars() != b.vars()) {
    throw std::invalid_argument(std::string("variable mismatch: ") + to_string(a.vars()) +
                                " vs " + to_string(b.vars()));
  }
}

MPoly MPoly::from_terms(Vars vars, std::vector<Term> terms) {
  MPoly p(vars);
  if (arity(vars) == 1) {
    for (const auto& [e, c] : terms) {
      if (e.j != 0) throw std::invalid_argument("second exponent set on a univariate polynomial");
    }
  }
  GrlexLess less;
  if (!std::is_sorted(terms.begin(), terms.end(),
                      [&](const Term& a, const Term& b) { return less(a.first, b.first); })) {
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const Term& a, const Term& b) { return less(a.first, b.first); });
  }
  p.terms_.reserve(terms.size());
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == term.first) {
      p.terms_.back().second += term.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (term.second != 0) {
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

MPoly MPoly::constant(Vars vars, const BigRat& c) { return monomial(vars, {}, c); }

MPoly MPoly::monomial(Vars vars, Exp e, const BigRat& c) {
  if (arity(vars) == 1 && e.j != 0) {
    throw std::invalid_argument("second exponent set on a univariate polynomial");
  }
  MPoly p(vars);
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

MPoly MPoly::power(Vars vars, std::uint32_t k, const BigRat& c) {
  return monomial(vars, vars == Vars::uv ? Exp{k, k} : Exp{k, 0}, c);
}

long MPoly::degree() const {
  return is_zero() ? -1 : static_cast<long>(terms_.back().first.total());
}

long MPoly::degree_in(int var) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, var == 0 ? e.i : e.j);
  return d;
}

BigRat MPoly::coeff(Exp e) const {
  GrlexLess less;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [&](const Term& t, const Exp& x) { return less(t.first, x); });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {

template <typename Op>
std::vector<MPoly::Term> merge_terms(std::span<const MPoly::Term> a, std::span<const MPoly::Term> b, Op op) {
  GrlexLess less;
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, k = 0;
  while (i < a.size() || k < b.size()) {
    if (k == b.size() || (i < a.size() && less(a[i].first, b[k].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || less(b[k].first, a[i].first)) {
      out.emplace_back(b[k].first, op(BigRat(0), b[k].second));
      ++k;
    } else {
      BigRat c = op(a[i].second, b[k].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++k;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& rhs) {
  require_same_vars(*this, rhs);
  terms_ = merge_terms(terms_, rhs.terms_, [](const BigRat& x, const BigRat& y) { return BigRat(x + y); });
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  require_same_vars(*this, rhs);
  terms_ = merge_terms(terms_, rhs.terms_, [](const BigRat& x, const BigRat& y) { return BigRat(x - y); });
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = poly_mul(*this, rhs); }

MPoly& MPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, x] : terms_) x *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) { return poly_mul(a, b); }

bool MPoly::operator==(const MPoly& rhs) const {
  if (vars_ != rhs.vars_ || terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].first == rhs.terms_[i].first) || terms_[i].second != rhs.terms_[i].second) return false;
  }
  return true;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result = constant(vars_, 1);
  MPoly base = *this;
  while (n != 0) {
    if (n & 1U) result = poly_mul(result, base);
    n >>= 1U;
    if (n != 0) base = poly_mul(base, base);
  }
  return result;
}

BigRat MPoly::evaluate(const BigRat& x, const BigRat& y) const {
  BigRat sum = 0;
  for (const auto& [e, c] : terms_) {
    BigRat term = c;
    for (std::uint32_t k = 0; k < e.i; ++k) term *= x;
    for (std::uint32_t k = 0; k < e.j; ++k) term *= y;
    sum += term;
  }
  return sum;
}

MPoly MPoly::swap_uv() const {
  if (vars_ != Vars::uv) return *this;
  std::vector<Term> swapped;
  swapped.reserve(terms_.size());
  for (const auto& [e, c] : terms_) swapped.emplace_back(Exp{e.j, e.i}, c);
  return from_terms(vars_, std::move(swapped));
}

MPoly poly_mul(const MPoly& a, const MPoly& b) { return kernels::mul_parallel(a, b); }

std::optional<MPoly> poly_exact_div(const MPoly& a, const MPoly& b) {
  require_same_vars(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Vars vars = a.vars();
  if (a.is_zero()) return MPoly(vars);

  // If b | a then LT(remainder) = LT(quotient part) * LT(b) at every step,
  // so a leading term not divisible by LT(b) settles the question.
  std::map<Exp, BigRat, GrlexLess> rem;
  for (const auto& [e, c] : a.terms()) rem.emplace(e, c);
  const auto& [lead_exp, lead_coeff] = b.leading_term();
  std::vector<MPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Exp e = top->first;
    if (e.i < lead_exp.i || e.j < lead_exp.j) return std::nullopt;
    const Exp shift{e.i - lead_exp.i, e.j - lead_exp.j};
    const BigRat factor = top->second / lead_coeff;
    for (const auto& [be, bc] : b.terms()) {
      const Exp target = add_exp(be, shift);
      auto [it, inserted] = rem.try_emplace(target, 0);
      it->second -= factor * bc;
      if (it->second == 0) rem.erase(it);
    }
    quotient.emplace_back(shift, factor);
  }
  return MPoly::from_terms(vars, std::move(quotient));
}

MPoly geometric_sum(Vars vars, long lo, long hi, long step) {
  if (lo < 0 || step <= 0) throw std::invalid_argument("geometric_sum needs lo >= 0 and step > 0");
  MPoly p(vars);
  std::vector<MPoly::Term> terms;
  for (long k = lo; k <= hi; k += step) {
    const auto e = static_cast<std::uint32_t>(k);
    terms.emplace_back(vars == Vars::uv ? Exp{e, e} : Exp{e, 0}, 1);
  }
  return MPoly::from_terms(vars, std::move(terms));
}

MPoly embed_q(const MPoly& p) {
  if (p.vars() != Vars::q) throw std::invalid_argument("embed_q expects a polynomial in q");
  std::vector<MPoly::Term> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(Exp{e.i, e.i}, c);
  return MPoly::from_terms(Vars::uv, std::move(terms));
}

MPoly substitute_diagonal(const MPoly& p) {
  if (p.vars() != Vars::uv) throw std::invalid_argument("substitute_diagonal expects a polynomial in u,v");
  std::vector<MPoly::Term> terms;
  for (const auto& [e, c] : p.terms()) {
    if (e.total() > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("exponent overflow");
    terms.emplace_back(Exp{static_cast<std::uint32_t>(e.total()), 0}, c);
  }
  return MPoly::from_terms(Vars::t, std::move(terms));
}

std::pair<MPoly, MPoly> poly_divmod(const MPoly& a, const MPoly& b) {
  require_same_vars(a, b);
  if (arity(a.vars()) != 1) throw std::invalid_argument("poly_divmod is univariate");
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Vars vars = a.vars();
  std::vector<BigRat> r(static_cast<std::size_t>(std::max<long>(a.degree(), 0) + 1));
  for (const auto& [e, c] : a.terms()) r[e.i] = c;
  const long db = b.degree();
  const BigRat lead = b.leading_term().second;
  std::vector<MPoly::Term> quot;
  for (long k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    const BigRat f = r[k] / lead;
    for (const auto& [e, c] : b.terms()) r[k - db + e.i] -= f * c;
    quot.emplace_back(Exp{static_cast<std::uint32_t>(k - db), 0}, f);
  }
  std::vector<MPoly::Term> rem;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] != 0) rem.emplace_back(Exp{static_cast<std::uint32_t>(k), 0}, r[k]);
  }
  return {MPoly::from_terms(vars, std::move(quot)), MPoly::from_terms(vars, std::move(rem))};
}

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  require_same_vars(a, b);
  MPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = poly_divmod(x, y).second;
    if (!r.is_zero()) r *= BigRat(1) / r.leading_term().second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero()) x *= BigRat(1) / x.leading_term().second;
  return x;
}

}  // namespace modinv
