#include <doctest.h>

#include "modinv/errors.hpp"
#include "modinv/kirwan.hpp"
#include "oracle.hpp"

using namespace modinv;
using namespace modinv::kirwan;

namespace {

std::vector<long> as_longs(const PoincareTable& table) {
  std::vector<long> out;
  for (const auto& b : table.betti) out.push_back(b.get_si());
  return out;
}

oracle::Series oracle_for(int g, Space space, int n) {
  switch (space) {
    case Space::M2: return oracle::m2(g, n);
    case Space::K: return oracle::k_space(g, n);
    case Space::Ksigma: return oracle::k_sigma(g, n);
    default: return oracle::seshadri(g, n);
  }
}

}  // namespace

TEST_CASE("equivariant_series") {
  const auto s3 = equivariant_series(3, 4);
  CHECK(std::vector<BigRat>(s3.coeffs().begin(), s3.coeffs().end()) ==
        std::vector<BigRat>{1, 0, 1, 6, 2});
  for (int g = 3; g <= 8; ++g) CHECK(equivariant_series(g, 0)[0] == 1);
  CHECK(equivariant_series(4, 3)[3] == 8);
  // oracle agreement well past the first terms
  const auto ref = oracle::equivariant(5, 40);
  const auto got = equivariant_series(5, 40);
  for (int d = 0; d <= 40; ++d) CHECK(got[d] == ref[d]);
  CHECK_THROWS_AS(equivariant_series(2, 4), std::invalid_argument);
}

TEST_CASE("first_blowup_series") {
  CHECK(first_blowup_series(3, 4)[2] == 65);
  for (int g = 3; g <= 6; ++g) {
    const auto s = first_blowup_series(g, 30);
    const auto ref = oracle::first_blowup(g, 30);
    CHECK(s[0] == 1);
    CHECK(s[1] == 0);
    for (int d = 0; d <= 30; ++d) CHECK(s[d] == ref[d]);
  }
}

TEST_CASE("genus-3 spot values") {
  const auto m2 = partial_desing_poincare(3);
  CHECK(m2.betti[0] == 1);
  CHECK(m2.betti[2] == 66);
  CHECK(m2.betti.size() == 13);
  CHECK(full_desing_poincare(3).betti[2] == 130);
  CHECK(full_desing_poincare(3).betti[1] == 0);
  CHECK(sigma_contraction_poincare(3).betti[2] == 66);
  const auto s = seshadri_poincare(3);
  CHECK(s.betti[2] == 2);
  CHECK(s.betti[12] == 1);
}

TEST_CASE("full tables agree with an independent CAS") {
  // Frozen from a sympy expansion of the same displays (cancel + expand).
  CHECK(as_longs(partial_desing_poincare(3)) == std::vector<long>{1, 0, 66, 6, 145, 6, 224, 6, 145, 6, 66, 0, 1});
  CHECK(as_longs(full_desing_poincare(3)) == std::vector<long>{1, 0, 130, 6, 273, 6, 416, 6, 273, 6, 130, 0, 1});
  CHECK(as_longs(sigma_contraction_poincare(3)) == std::vector<long>{1, 0, 66, 6, 81, 6, 160, 6, 81, 6, 66, 0, 1});
  CHECK(as_longs(seshadri_poincare(3)) == std::vector<long>{1, 0, 2, 6, 17, 6, 96, 6, 17, 6, 2, 0, 1});
  CHECK(as_longs(seshadri_poincare(4)) ==
        std::vector<long>{1, 0, 2, 8, 31, 16, 385, 72, 413, 128, 413, 72, 385, 16, 31, 8, 2, 0, 1});
  const auto ks4 = sigma_contraction_poincare(4);
  CHECK(ks4.palindromic());
  CHECK(ks4.betti.size() == 19);
}

TEST_CASE("tables match the series oracle and are palindromic, g = 3..10") {
  for (int g = 3; g <= 10; ++g) {
    for (Space space : {Space::M2, Space::K, Space::Ksigma, Space::S}) {
      CAPTURE(g);
      CAPTURE(to_string(space));
      const auto table = poincare_table(g, space);
      REQUIRE(table.betti.size() == static_cast<std::size_t>(6 * g - 5));
      CHECK(table.palindromic());
      CHECK(table.betti[0] == 1);
      const auto ref = oracle_for(g, space, 6 * g);
      for (int d = 0; d <= 6 * g; ++d) {
        const BigRat expected = d <= 6 * g - 6 ? BigRat(table.betti[d]) : BigRat(0);
        CHECK(ref[d] == expected);
      }
    }
  }
}

TEST_CASE("chain corrections") {
  for (int g = 3; g <= 7; ++g) {
    const MPoly m2 = to_poly(partial_desing_poincare(g));
    const MPoly k = to_poly(full_desing_poincare(g));
    const MPoly ks = to_poly(sigma_contraction_poincare(g));
    const MPoly s = to_poly(seshadri_poincare(g));
    CHECK(k - m2 == full_desing_correction(g));
    CHECK(k - ks == sigma_contraction_correction(g));
    CHECK(ks - s == epsilon_contraction_correction(g));
    CHECK(certify_sum(sigma_contraction_closed_summands(g), "Ksigma") == ks);
    CHECK(certify_sum(seshadri_closed_summands(g), "S") == s);
    CHECK(certify_sum(summands_for(g, Space::K), "K") == k);
  }
}

TEST_CASE("equivariant spaces through the dispatcher") {
  const auto rss = poincare_table(3, Space::Rss, 4);
  CHECK(as_longs(rss) == std::vector<long>{1, 0, 1, 6, 2});
  CHECK(poincare_table(3, Space::R1ss).betti.size() == 13);
  CHECK(poincare_table(3, Space::R1ss, 2).betti[2] == 65);
}

TEST_CASE("domain and certification errors") {
  CHECK_THROWS_AS(partial_desing_poincare(2), std::invalid_argument);
  CHECK_THROWS_AS(seshadri_poincare(1), std::invalid_argument);
  CHECK_THROWS_AS(summands_for(3, Space::Rss), std::invalid_argument);
  // a deliberately broken sum (drop the last summand) is not a polynomial
  auto broken = partial_desing_summands(3);
  broken.pop_back();
  CHECK_THROWS_AS(certify_sum(broken, "broken"), CertificationError);
  CHECK(parse_space("Ksigma") == Space::Ksigma);
  CHECK_FALSE(parse_space("Gr(2,3)").has_value());
}
