#include "modinv/kirwan.hpp"

#include <array>
#include <stdexcept>

#include "modinv/errors.hpp"
#include "modinv/fraction_sum.hpp"
#include "modinv/grassmann.hpp"

namespace modinv::kirwan {
namespace {

constexpr std::array<std::pair<Space, std::string_view>, 6> kSpaceNames{{
    {Space::Rss, "Rss"},
    {Space::R1ss, "R1ss"},
    {Space::M2, "M2"},
    {Space::K, "K"},
    {Space::Ksigma, "Ksigma"},
    {Space::S, "S"},
}};

MPoly c(const BigRat& x) { return MPoly::constant(Vars::t, x); }
MPoly tp(long k) { return MPoly::power(Vars::t, static_cast<std::uint32_t>(k)); }
// t^lo + t^{lo+2} + ... + t^hi
MPoly even_sum(long lo, long hi) { return geometric_sum(Vars::t, lo, hi, 2); }
BigRat two_pow_2g(int g) { return BigRat(pow_int(2, 2UL * g)); }

MPoly one_minus_t(long k) { return c(1) - tp(k); }
MPoly one_plus_t(long k) { return c(1) + tp(k); }

// Numerator of P(Gr(k,g)) over prod_{i<=k} (1 - t^{2i}).
Summand grassmann_fraction(int k, int g) {
  Summand s{c(1), {}};
  for (int i = 1; i <= k; ++i) {
    s.num *= one_minus_t(2L * (g - k + i));
    s.den_factors.push_back(one_minus_t(2L * i));
  }
  return s;
}

Summand times(Summand s, const MPoly& p) {
  s.num *= p;
  return s;
}

PoincareTable make_table(int g, Space space, const MPoly& p) {
  const std::string label = std::string(to_string(space)) + " at g=" + std::to_string(g);
  const long expected_degree = 6L * g - 6;
  if (p.degree() != expected_degree) {
    throw CertificationError(CertificationError::Kind::FormulaNotPolynomial,
                             "P(" + label + ") has degree " + std::to_string(p.degree()) +
                                 ", expected " + std::to_string(expected_degree));
  }
  PoincareTable table{g, space, std::vector<BigInt>(static_cast<std::size_t>(expected_degree) + 1)};
  for (const auto& [e, x] : p.terms()) {
    if (!is_integer(x)) {
      throw CertificationError(CertificationError::Kind::NonIntegral,
                               "P(" + label + ") has coefficient " + x.get_str() + " at t^" + std::to_string(e.i));
    }
    if (x < 0) {
      throw CertificationError(CertificationError::Kind::NegativeBetti,
                               "P(" + label + ") has b_" + std::to_string(e.i) + " = " + x.get_str());
    }
    table.betti[e.i] = x.get_num();
  }
  if (table.betti[0] != 1) {
    throw CertificationError(CertificationError::Kind::FormulaNotPolynomial, "P(" + label + ") has b_0 != 1");
  }
  return table;
}

}  // namespace

std::string_view to_string(Space space) {
  for (const auto& [s, name] : kSpaceNames) {
    if (s == space) return name;
  }
  return "?";
}

std::optional<Space> parse_space(std::string_view name) {
  for (const auto& [s, n] : kSpaceNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

bool is_compact(Space space) { return space != Space::Rss && space != Space::R1ss; }

bool PoincareTable::palindromic() const {
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (betti[k] != betti[betti.size() - 1 - k]) return false;
  }
  return true;
}

RatFun Summand::as_ratfun() const {
  MPoly den = c(1);
  for (const auto& f : den_factors) den *= f;
  return RatFun(num, std::move(den));
}

void require_genus(int g) {
  if (g < 3) throw std::invalid_argument("genus must be >= 3, got " + std::to_string(g));
}

namespace {

Summand equivariant_summand(int g) {
  const auto g2 = static_cast<unsigned>(2 * g);
  return {one_plus_t(3).pow(g2) - tp(2L * g + 2) * one_plus_t(1).pow(g2), {one_minus_t(2), one_minus_t(4)}};
}

std::vector<Summand> first_blowup_summands(int g) {
  const BigRat w = two_pow_2g(g);
  return {
      {w * even_sum(2, 6L * g - 2), {one_minus_t(4)}},
      {BigRat(-w) * tp(4L * g - 2) * even_sum(0, 2L * g - 2), {one_minus_t(2)}},
  };
}

TruncSeries expand_all(const std::vector<Summand>& summands, std::size_t order) {
  TruncSeries sum(Vars::t, order);
  for (const auto& s : summands) sum += series_expand(s.as_ratfun(), order);
  return sum;
}

}  // namespace

TruncSeries equivariant_series(int g, std::size_t order) {
  require_genus(g);
  return series_expand(equivariant_summand(g).as_ratfun(), order);
}

TruncSeries first_blowup_series(int g, std::size_t order) {
  require_genus(g);
  return equivariant_series(g, order) + expand_all(first_blowup_summands(g), order);
}

std::vector<Summand> partial_desing_summands(int g) {
  require_genus(g);
  const auto g2 = static_cast<unsigned>(2 * g);
  const BigRat w = two_pow_2g(g);
  const BigRat half(1, 2);
  const MPoly mid = even_sum(2, 4L * g - 6);
  const MPoly low = tp(2L * g - 2) * even_sum(0, 2L * g - 4);

  std::vector<Summand> out{equivariant_summand(g)};
  for (auto& s : first_blowup_summands(g)) out.push_back(std::move(s));
  out.push_back({half * mid * one_plus_t(1).pow(g2), {one_minus_t(2)}});
  out.push_back({half * mid * one_minus_t(1).pow(g2), {one_plus_t(2)}});
  out.push_back({w * mid * even_sum(2, 2L * g - 2), {one_minus_t(4)}});
  out.push_back({-low * one_plus_t(1).pow(g2), {one_minus_t(2)}});
  out.push_back({BigRat(-w) * low * even_sum(2, 2L * g - 2), {one_minus_t(2)}});
  return out;
}

MPoly certify_sum(const std::vector<Summand>& summands, const std::string& label) {
  FractionSum sum(Vars::t);
  for (const auto& s : summands) sum.add(s.num, s.den_factors);
  auto p = sum.collect().as_polynomial();
  if (!p) {
    throw CertificationError(CertificationError::Kind::FormulaNotPolynomial, label + " is not a polynomial");
  }
  return *p;
}

MPoly full_desing_correction(int g) {
  require_genus(g);
  return two_pow_2g(g) * even_sum(0, 4) * grassmann::grassmann_poincare({2, g}) * even_sum(2, 2L * g - 4);
}

MPoly sigma_contraction_correction(int g) {
  require_genus(g);
  return two_pow_2g(g) * even_sum(0, 2L * g - 4) * grassmann::grassmann_poincare({2, g}) * even_sum(2, 4);
}

MPoly epsilon_contraction_correction(int g) {
  require_genus(g);
  return two_pow_2g(g) * grassmann::grassmann_poincare({3, g}) * even_sum(2, 10);
}

PoincareTable partial_desing_poincare(int g) {
  return make_table(g, Space::M2, certify_sum(partial_desing_summands(g), "P(M2) at g=" + std::to_string(g)));
}

PoincareTable full_desing_poincare(int g) {
  const MPoly m2 = certify_sum(partial_desing_summands(g), "P(M2) at g=" + std::to_string(g));
  return make_table(g, Space::K, m2 + full_desing_correction(g));
}

PoincareTable sigma_contraction_poincare(int g) {
  const MPoly k = to_poly(full_desing_poincare(g));
  return make_table(g, Space::Ksigma, k - sigma_contraction_correction(g));
}

PoincareTable seshadri_poincare(int g) {
  const MPoly ks = to_poly(sigma_contraction_poincare(g));
  PoincareTable table = make_table(g, Space::S, ks - epsilon_contraction_correction(g));
  const MPoly closed = certify_sum(seshadri_closed_summands(g), "closed P(S) at g=" + std::to_string(g));
  if (!(closed == to_poly(table))) {
    throw CertificationError(CertificationError::Kind::RouteMismatch,
                             "P(S) chain and closed formula disagree at g=" + std::to_string(g));
  }
  return table;
}

std::vector<Summand> full_desing_summands(int g) {
  auto out = partial_desing_summands(g);
  out.push_back(times(grassmann_fraction(2, g), two_pow_2g(g) * even_sum(0, 4) * even_sum(2, 2L * g - 4)));
  return out;
}

std::vector<Summand> sigma_contraction_closed_summands(int g) {
  // P(M2) + 2^{2g} P(Gr(2,g)) (t^6 - t^{2g-2}) / (1 - t^2)
  auto out = partial_desing_summands(g);
  Summand gr2 = times(grassmann_fraction(2, g), two_pow_2g(g) * (tp(6) - tp(2L * g - 2)));
  gr2.den_factors.push_back(one_minus_t(2));
  out.push_back(std::move(gr2));
  return out;
}

std::vector<Summand> seshadri_closed_summands(int g) {
  auto out = sigma_contraction_closed_summands(g);
  out.push_back(times(grassmann_fraction(3, g), BigRat(-two_pow_2g(g)) * even_sum(2, 10)));
  return out;
}

std::vector<Summand> summands_for(int g, Space space) {
  switch (space) {
    case Space::M2: return partial_desing_summands(g);
    case Space::K: return full_desing_summands(g);
    case Space::Ksigma: {
      auto out = full_desing_summands(g);
      out.push_back(times(grassmann_fraction(2, g), BigRat(-two_pow_2g(g)) * even_sum(0, 2L * g - 4) * even_sum(2, 4)));
      return out;
    }
    case Space::S: return seshadri_closed_summands(g);
    default: break;
  }
  throw std::invalid_argument("summands_for: not a compact space");
}

PoincareTable poincare_table(int g, Space space, std::optional<std::size_t> order) {
  require_genus(g);
  switch (space) {
    case Space::Rss:
    case Space::R1ss: {
      const std::size_t n = order.value_or(6UL * g - 6);
      const TruncSeries s = space == Space::Rss ? equivariant_series(g, n) : first_blowup_series(g, n);
      PoincareTable table{g, space, {}};
      for (const auto& x : s.coeffs()) {
        if (!is_integer(x) || x < 0) {
          throw CertificationError(CertificationError::Kind::NonIntegral,
                                   "equivariant series coefficient " + x.get_str() + " is not a Betti number");
        }
        table.betti.push_back(x.get_num());
      }
      return table;
    }
    case Space::M2: return partial_desing_poincare(g);
    case Space::K: return full_desing_poincare(g);
    case Space::Ksigma: return sigma_contraction_poincare(g);
    case Space::S: return seshadri_poincare(g);
  }
  throw std::invalid_argument("unknown space");
}

MPoly to_poly(const PoincareTable& table) {
  std::vector<MPoly::Term> terms;
  for (std::size_t k = 0; k < table.betti.size(); ++k) {
    terms.emplace_back(Exp{static_cast<std::uint32_t>(k), 0}, BigRat(table.betti[k]));
  }
  return MPoly::from_terms(Vars::t, std::move(terms));
}

}  // namespace modinv::kirwan
