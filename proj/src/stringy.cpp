#include "modinv/stringy.hpp"

#include <stdexcept>

#include "modinv/errors.hpp"
#include "modinv/fraction_sum.hpp"
#include "modinv/grassmann.hpp"

namespace modinv::stringy {
namespace {

constexpr Vars kUV = Vars::uv;

MPoly c(const BigRat& x) { return MPoly::constant(kUV, x); }
MPoly u() { return MPoly::monomial(kUV, {1, 0}); }
MPoly v() { return MPoly::monomial(kUV, {0, 1}); }
BigRat two_pow_2g(int g) { return BigRat(pow_int(2, 2UL * g)); }

// (uv)^k - 1
MPoly q_minus_one(int k) { return uv_power(k) - c(1); }

void require_genus(int g, int min) {
  if (g < min) {
    throw std::invalid_argument("genus must be >= " + std::to_string(min) + ", got " + std::to_string(g));
  }
}

struct Pieces {
  MPoly a;  // (1-u)^g (1-v)^g
  MPoly b;  // (1+u)^g (1+v)^g
  MPoly main_num;  // (1-u^2 v)^g (1-u v^2)^g - (uv)^{g+1} (1-u)^g (1-v)^g
};

Pieces pieces(int g) {
  const auto n = static_cast<unsigned>(g);
  MPoly a = (c(1) - u()).pow(n) * (c(1) - v()).pow(n);
  MPoly b = (c(1) + u()).pow(n) * (c(1) + v()).pow(n);
  const MPoly u2v = MPoly::monomial(kUV, {2, 1});
  const MPoly uv2 = MPoly::monomial(kUV, {1, 2});
  MPoly main = (c(1) - u2v).pow(n) * (c(1) - uv2).pow(n) - uv_power(g + 1) * a;
  return {std::move(a), std::move(b), std::move(main)};
}

// main_num / ((1-uv)(1-(uv)^2)) + a_coeff * a / (1-uv) + b_coeff * b / (1+uv)
RatFun assemble(const Pieces& p, const MPoly& a_coeff, const MPoly& b_coeff) {
  const MPoly one_minus_q = c(1) - uv_power(1);
  FractionSum sum(kUV);
  sum.add(p.main_num, {one_minus_q, c(1) - uv_power(2)});
  sum.add(a_coeff * p.a, {one_minus_q});
  sum.add(b_coeff * p.b, {c(1) + uv_power(1)});
  return sum.collect();
}

MPoly certify(const RatFun& f, const std::string& label) {
  auto p = f.as_polynomial();
  if (!p) throw CertificationError(CertificationError::Kind::FormulaNotPolynomial, label + " is not a polynomial");
  return *p;
}

// Weight as numerator and factored denominator.
std::pair<MPoly, std::vector<MPoly>> weight_factors(StratumId id, int g) {
  const auto d = discrepancy_coeffs(g);
  const std::array<int, 3> a{d.a1, d.a2, d.a3};
  MPoly num = c(1);
  std::vector<MPoly> den;
  for (int i = 1; i <= 3; ++i) {
    if (!id.contains(i)) continue;
    num *= q_minus_one(1);
    den.push_back(q_minus_one(a[i - 1] + 1));
  }
  return {std::move(num), std::move(den)};
}

}  // namespace

MPoly uv_power(int k) { return MPoly::power(kUV, static_cast<std::uint32_t>(k)); }

DiscrepancySpec discrepancy_coeffs(int g) {
  require_genus(g, 2);
  return {3 * g - 1, g - 2, 2 * g - 2};
}

StratumId::StratumId(std::initializer_list<int> members) {
  for (int i : members) {
    if (i < 1 || i > 3) throw std::invalid_argument("stratum index must be in {1,2,3}");
    bits_ |= static_cast<std::uint8_t>(1U << (i - 1));
  }
}

std::string StratumId::to_string() const {
  std::string s = "{";
  for (int i = 1; i <= 3; ++i) {
    if (!contains(i)) continue;
    if (s.size() > 1) s += ',';
    s += static_cast<char>('0' + i);
  }
  return s + "}";
}

std::vector<StratumId> all_strata() {
  return {StratumId{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
}

RatFun batyrev_weight(StratumId id, int g) {
  require_genus(g, 3);
  auto [num, den] = weight_factors(id, g);
  MPoly d = c(1);
  for (const auto& f : den) d *= f;
  return RatFun(std::move(num), std::move(d));
}

MPoly smooth_part_e(int g) {
  require_genus(g, 3);
  const BigRat half(1, 2);
  return certify(assemble(pieces(g), c(-half), c(-half)), "E(M0^s) at g=" + std::to_string(g));
}

RatFun stratum_e(StratumId id, int g) {
  require_genus(g, 3);
  if (id.empty()) throw std::invalid_argument("stratum_e: use smooth_part_e for the smooth part");
  const BigRat w = two_pow_2g(g);
  const auto gr2 = [&] { return grassmann::grassmann_e({2, g}); };
  const auto gr3 = [&] { return grassmann::grassmann_e({3, g}); };
  // ((uv)^{g-2} - 1) / (uv - 1), a P^{g-3} kept as the displayed fraction
  const auto p_g3 = [&](const MPoly& factor) { return RatFun(factor * q_minus_one(g - 2), q_minus_one(1)); };

  if (id == StratumId{1}) return RatFun(w * (uv_power(5) - uv_power(2)) * gr3());
  if (id == StratumId{2}) {
    const BigRat half(1, 2);
    const Pieces p = pieces(g);
    const auto split = grassmann::pp_pair_e_split(g);
    FractionSum sum(kUV);
    sum.add((half * p.a + half * p.b - c(w)) * split.plus.num(), {split.plus.den()});
    sum.add((half * p.a - half * p.b) * split.minus.num(), {split.minus.den()});
    return sum.collect();
  }
  if (id == StratumId{3}) return RatFun(w * uv_power(g) * gr2());
  if (id == StratumId{1, 2}) return RatFun(w * (uv_power(2) + uv_power(3) + uv_power(4)) * gr3());
  if (id == StratumId{1, 3}) return p_g3(w * uv_power(2) * gr2());
  if (id == StratumId{2, 3}) return RatFun(w * (c(1) + uv_power(1)) * uv_power(g - 2) * gr2());
  return p_g3(w * (c(1) + uv_power(1)) * gr2());  // {1,2,3}
}

RatFun stringy_e_sum(int g) {
  require_genus(g, 3);
  FractionSum sum(kUV);
  sum.add(smooth_part_e(g));
  for (const auto& id : all_strata()) {
    if (id.empty()) continue;
    const RatFun e = stratum_e(id, g);
    auto [wnum, wden] = weight_factors(id, g);
    wden.push_back(e.den());
    sum.add(e.num() * wnum, wden);
  }
  return sum.collect();
}

RatFun stringy_e_closed(int g) {
  require_genus(g, 2);
  const MPoly half_q = c(BigRat(1, 2)) * uv_power(g - 1);
  return assemble(pieces(g), -half_q, half_q);
}

MPoly intersection_e(int g) {
  require_genus(g, 3);
  const MPoly half_q = c(BigRat(1, 2)) * uv_power(g - 1);
  // -(uv)^{g-1}/2 * (-1)^{g-1} on the (1+u)^g(1+v)^g term
  const MPoly b_coeff = (g % 2 == 1) ? -half_q : half_q;
  return certify(assemble(pieces(g), -half_q, b_coeff), "IE(M0) at g=" + std::to_string(g));
}

EulerNumber stringy_euler(int g) {
  require_genus(g, 2);
  if (g == 2) return {BigRat(4), true};
  return {limit_at_one(substitute_diagonal(stringy_e_closed(g))), false};
}

VerificationReport euler_generating_check(int gmax) {
  require_genus(gmax, 2);
  const RatFun gen(MPoly::constant(Vars::q, BigRat(1, 4)),
                   MPoly::constant(Vars::q, 1) - MPoly::power(Vars::q, 1, 4));
  const TruncSeries s = series_expand(gen, static_cast<std::size_t>(gmax));
  VerificationReport report;
  for (int g = 2; g <= gmax; ++g) {
    const BigRat e = stringy_euler(g).value;
    const BigRat& coeff = s[static_cast<std::size_t>(g)];
    std::optional<std::string> witness;
    if (coeff != e) witness = "series " + coeff.get_str() + " vs e_g " + e.get_str();
    report.add("generating_function", g, coeff == e, witness);
  }
  return report;
}

long PairingTable::determinant() const {
  const auto& a = m;
  return static_cast<long>(a[0][0]) * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         static_cast<long>(a[0][1]) * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         static_cast<long>(a[0][2]) * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

PairingTable ns_pairing() {
  //            h  x   e
  return {{{{0, 0, -1},    // epsilon
            {0, 1, 2},     // sigma
            {1, 0, 0}}}};  // gamma
}

MPoly stratum3_by_inclusion_exclusion(int g) {
  require_genus(g, 3);
  using grassmann::projective_e;
  const MPoly fibre = projective_e(2) * projective_e(g - 2) - projective_e(2) * projective_e(g - 3) -
                      projective_e(1) * projective_e(g - 2) + projective_e(1) * projective_e(g - 3);
  return two_pow_2g(g) * fibre * grassmann::grassmann_e({2, g});
}

}  // namespace modinv::stringy
