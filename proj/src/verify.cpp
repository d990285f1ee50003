#include "modinv/verify.hpp"

#include <exception>
#include <functional>
#include <stdexcept>

#include "modinv/grassmann.hpp"
#include "modinv/kirwan.hpp"
#include "modinv/serialize.hpp"
#include "modinv/series.hpp"
#include "modinv/stringy.hpp"

namespace modinv {
namespace {

// A check returns nullopt on success or a witness describing the failure.
using Check = std::function<std::optional<std::string>()>;

void run_check(VerificationReport& report, const std::string& identity, int g, const Check& check) {
  try {
    auto witness = check();
    report.add(identity, g, !witness.has_value(), std::move(witness));
  } catch (const std::exception& e) {
    report.add(identity, g, false, std::string("exception: ") + e.what());
  }
}

std::optional<std::string> diff_witness(const MPoly& lhs, const MPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  return to_json(lhs - rhs).dump();
}

std::optional<std::string> ratfun_witness(const RatFun& lhs, const RatFun& rhs) {
  if (ratfun_eq(lhs, rhs)) return std::nullopt;
  return to_json(lhs - rhs).dump();
}

std::optional<std::string> fail_if(bool bad, const std::string& why) {
  return bad ? std::optional<std::string>(why) : std::nullopt;
}

void verify_poincare(VerificationReport& report, int g) {
  using namespace kirwan;
  std::optional<PoincareTable> tables[4];
  const Space spaces[4] = {Space::M2, Space::K, Space::Ksigma, Space::S};
  for (int k = 0; k < 4; ++k) {
    const std::string name = std::string("poincare_") + std::string(to_string(spaces[k]));
    run_check(report, name, g, [&]() -> std::optional<std::string> {
      tables[k] = poincare_table(g, spaces[k]);
      return fail_if(!tables[k]->palindromic(), "table is not palindromic");
    });
    run_check(report, "series_oracle_" + std::string(to_string(spaces[k])), g, [&]() -> std::optional<std::string> {
      if (!tables[k]) return "no table";
      const std::size_t order = 6UL * g;
      TruncSeries oracle(Vars::t, order);
      for (const auto& s : summands_for(g, spaces[k])) oracle += series_expand(s.as_ratfun(), order);
      for (std::size_t d = 0; d <= order; ++d) {
        const BigRat expected = d < tables[k]->betti.size() ? BigRat(tables[k]->betti[d]) : BigRat(0);
        if (oracle[d] != expected) {
          return "degree " + std::to_string(d) + ": series " + oracle[d].get_str() + " vs table " +
                 expected.get_str();
        }
      }
      return std::nullopt;
    });
  }

  run_check(report, "chain_consistency", g, [&]() -> std::optional<std::string> {
    if (!tables[0] || !tables[1] || !tables[2] || !tables[3]) return "missing table";
    const MPoly m2 = to_poly(*tables[0]), k = to_poly(*tables[1]), ks = to_poly(*tables[2]), s = to_poly(*tables[3]);
    if (auto w = diff_witness(k - m2, full_desing_correction(g))) return "K-M2: " + *w;
    if (auto w = diff_witness(k - ks, sigma_contraction_correction(g))) return "K-Ksigma: " + *w;
    if (auto w = diff_witness(ks - s, epsilon_contraction_correction(g))) return "Ksigma-S: " + *w;
    return std::nullopt;
  });
  run_check(report, "ksigma_closed_route", g, [&]() -> std::optional<std::string> {
    if (!tables[2]) return "missing table";
    return diff_witness(certify_sum(sigma_contraction_closed_summands(g), "closed P(Ksigma)"), to_poly(*tables[2]));
  });
  run_check(report, "seshadri_closed_route", g, [&]() -> std::optional<std::string> {
    if (!tables[3]) return "missing table";
    return diff_witness(certify_sum(seshadri_closed_summands(g), "closed P(S)"), to_poly(*tables[3]));
  });
}

void verify_stringy(VerificationReport& report, int g) {
  using namespace stringy;
  const RatFun closed = stringy_e_closed(g);

  run_check(report, "discrepancy", g, [&]() -> std::optional<std::string> {
    const auto d = discrepancy_coeffs(g);
    if (g == 3 && !(d == DiscrepancySpec{8, 1, 4})) return "expected 8D1+D2+4D3";
    return fail_if(d.a1 < 0 || d.a2 < 0 || d.a3 < 0, "negative discrepancy");
  });
  run_check(report, "stringy_closed_form", g, [&] { return ratfun_witness(stringy_e_sum(g), closed); });
  run_check(report, "uv_symmetry", g, [&] { return ratfun_witness(closed.swap_uv(), closed); });
  run_check(report, "smooth_part_polynomial", g, [&]() -> std::optional<std::string> {
    return diff_witness(smooth_part_e(g).swap_uv(), smooth_part_e(g));
  });

  const auto poly = closed.as_polynomial();
  run_check(report, "parity_polynomial", g, [&]() -> std::optional<std::string> {
    const bool even = g % 2 == 0;
    return fail_if(poly.has_value() != even, even ? "expected a polynomial" : "expected NotDivisible");
  });
  run_check(report, "ie_comparison", g, [&]() -> std::optional<std::string> {
    const bool equal = ratfun_eq(closed, RatFun(intersection_e(g)));
    return fail_if(equal != (g % 2 == 0), equal ? "IE equals E_st for odd genus" : "IE differs from E_st");
  });

  run_check(report, "pp_split", g, [&]() -> std::optional<std::string> {
    const auto split = grassmann::pp_pair_e_split(g);
    if (!split.plus.as_polynomial() || !split.minus.as_polynomial()) return "E+ or E- is not a polynomial";
    const MPoly pg = grassmann::projective_e(g - 2);
    return ratfun_witness(split.plus + split.minus, RatFun(pg * pg));
  });
  run_check(report, "stratum3_inclusion_exclusion", g, [&]() -> std::optional<std::string> {
    const auto s3 = stratum_e(StratumId{3}, g).as_polynomial();
    if (!s3) return "stratum {3} is not a polynomial";
    const MPoly direct = BigRat(pow_int(2, 2UL * g)) * uv_power(g) * grassmann::grassmann_e({2, g});
    if (auto w = diff_witness(*s3, direct)) return w;
    return diff_witness(*s3, stratum3_by_inclusion_exclusion(g));
  });
}

}  // namespace

VerificationReport verify_genus(int g) {
  if (g < 2) throw std::invalid_argument("verify needs genus >= 2");
  VerificationReport report;
  std::optional<BigRat> euler;
  run_check(report, "euler", g, [&]() -> std::optional<std::string> {
    euler = stringy::stringy_euler(g).value;
    const BigRat expected(pow_int(4, static_cast<unsigned long>(g - 1)));
    return fail_if(*euler != expected, "e_st = " + euler->get_str() + ", expected " + expected.get_str());
  });
  run_check(report, "generating_function", g, [&]() -> std::optional<std::string> {
    if (!euler) return "no Euler number";
    const RatFun gen(MPoly::constant(Vars::q, BigRat(1, 4)), MPoly::constant(Vars::q, 1) - MPoly::power(Vars::q, 1, 4));
    const BigRat coeff = series_expand(gen, static_cast<std::size_t>(g))[static_cast<std::size_t>(g)];
    return fail_if(coeff != *euler, "series " + coeff.get_str() + " vs e_g " + euler->get_str());
  });
  if (g >= 3) {
    verify_stringy(report, g);
    verify_poincare(report, g);
  }
  return report;
}

VerificationReport run_verification(int lo, int hi) {
  if (lo < 2 || hi < lo) throw std::invalid_argument("verify needs 2 <= lo <= hi");
  const int n = hi - lo + 1;
  std::vector<VerificationReport> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < n; ++k) {
    // Larger genera are slower; start them first.
    const int g = hi - k;
    parts[static_cast<std::size_t>(k)] = verify_genus(g);
  }
  VerificationReport report;
  for (const auto& p : parts) report.merge(p);
  report.sort();
  return report;
}

}  // namespace modinv
