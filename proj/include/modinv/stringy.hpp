#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "modinv/report.hpp"
#include "modinv/series.hpp"

namespace modinv::stringy {

/// Discrepancy coefficients of the three exceptional divisors of K -> M0.
struct DiscrepancySpec {
  int a1;
  int a2;
  int a3;
  bool operator==(const DiscrepancySpec&) const = default;
};

/// (3g-1, g-2, 2g-2). Requires g >= 2.
DiscrepancySpec discrepancy_coeffs(int g);

/// Subset I of {1,2,3} naming the locally closed stratum where exactly the
/// divisors in I meet. The empty set is the smooth part M0^s.
class StratumId {
 public:
  StratumId() = default;
  /// Throws std::invalid_argument for members outside {1,2,3}.
  StratumId(std::initializer_list<int> members);

  bool contains(int i) const { return (bits_ >> (i - 1)) & 1U; }
  bool empty() const { return bits_ == 0; }
  std::string to_string() const;  // "{}", "{1,3}", ...
  bool operator==(const StratumId&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

/// The eight strata, smooth part first.
std::vector<StratumId> all_strata();

/// prod_{i in I} (uv-1) / ((uv)^{a_i+1} - 1) for the genus-g coefficients.
RatFun batyrev_weight(StratumId id, int g);

/// E(M0^s), certified polynomial.
MPoly smooth_part_e(int g);

/// E of the stratum for nonempty I (use smooth_part_e for the empty set).
RatFun stratum_e(StratumId id, int g);

/// Sum over all eight strata of E(stratum) * weight.
RatFun stringy_e_sum(int g);

/// The two-term closed form. Requires g >= 2.
RatFun stringy_e_closed(int g);

/// E-polynomial of middle-perversity intersection cohomology, certified.
MPoly intersection_e(int g);

struct EulerNumber {
  BigRat value;
  /// True when the value is the special-cased g = 2 datum (M0 = P^3)
  /// rather than a limit of the closed form.
  bool special_case;
};

/// lim_{u,v->1} of the closed form along u = v = t; g = 2 gives 4.
EulerNumber stringy_euler(int g);

/// Compares the q^g coefficients of 1/4 * 1/(1-4q) with stringy_euler(g)
/// for 2 <= g <= gmax. The q^1 coefficient is not compared.
VerificationReport euler_generating_check(int gmax);

/// Intersection numbers of the curve classes (epsilon, sigma, gamma) with
/// the divisor classes (h, x, e) on the first exceptional divisor.
struct PairingTable {
  std::array<std::array<int, 3>, 3> m;
  long determinant() const;
};

PairingTable ns_pairing();

/// 2^{2g} [E(P2 x P^{g-2}) - E(P2 x P^{g-3}) - E(P1 x P^{g-2}) + E(P1 x P^{g-3})] E(Gr(2,g)),
/// the stratum {3} polynomial assembled from its fibre by inclusion-exclusion.
MPoly stratum3_by_inclusion_exclusion(int g);

/// (uv)^k as a bivariate polynomial.
MPoly uv_power(int k);

}  // namespace modinv::stringy
