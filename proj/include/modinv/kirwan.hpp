#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/series.hpp"

namespace modinv::kirwan {

/// Spaces of the desingularization chain M2 -> K -> K_sigma -> K_eps = S,
/// plus the two equivariant series the chain starts from.
enum class Space { Rss, R1ss, M2, K, Ksigma, S };

std::string_view to_string(Space space);
std::optional<Space> parse_space(std::string_view name);
/// The four spaces whose Poincare series are polynomials.
bool is_compact(Space space);

struct PoincareTable {
  int genus;
  Space space;
  std::vector<BigInt> betti;  // betti[k] = dim H^k

  /// True iff betti[k] == betti[size-1-k] for all k.
  bool palindromic() const;
};

/// One displayed fraction num / prod(den_factors) in t.
struct Summand {
  MPoly num;
  std::vector<MPoly> den_factors;

  RatFun as_ratfun() const;
};

/// Throws std::invalid_argument unless g >= 3.
void require_genus(int g);

/// ((1+t^3)^{2g} - t^{2g+2}(1+t)^{2g}) / ((1-t^2)(1-t^4)) through degree N.
TruncSeries equivariant_series(int g, std::size_t order);
/// Adds the blow-up of the 2^{2g} fixed points.
TruncSeries first_blowup_series(int g, std::size_t order);

/// Every fraction appearing in the P(M2) display, in order.
std::vector<Summand> partial_desing_summands(int g);

/// Correction polynomials between consecutive spaces of the chain.
MPoly full_desing_correction(int g);      // P(K) - P(M2)
MPoly sigma_contraction_correction(int g);  // P(K) - P(K_sigma)
MPoly epsilon_contraction_correction(int g);  // P(K_sigma) - P(S)

/// Sum of certified summands, as a polynomial. Throws
/// CertificationError(FormulaNotPolynomial) if it is not one.
MPoly certify_sum(const std::vector<Summand>& summands, const std::string& label);

// Tables. Each one is certified: polynomial, integral, nonnegative, b0 = 1,
// degree 6g-6. Failures throw CertificationError.
PoincareTable partial_desing_poincare(int g);     // M2
PoincareTable full_desing_poincare(int g);        // K
PoincareTable sigma_contraction_poincare(int g);  // K_sigma
PoincareTable seshadri_poincare(int g);           // S = K_eps

/// Independent assembly routes from raw fractions (Grassmannians kept as
/// unreduced fractions, no use of the chain polynomials).
std::vector<Summand> full_desing_summands(int g);
std::vector<Summand> sigma_contraction_closed_summands(int g);
std::vector<Summand> seshadri_closed_summands(int g);

/// The summand list whose sum is P(space) for the four compact spaces.
std::vector<Summand> summands_for(int g, Space space);

/// Dispatcher. For Rss/R1ss the series is truncated at `order`
/// (default 6g-6); compact spaces ignore `order`.
PoincareTable poincare_table(int g, Space space, std::optional<std::size_t> order = std::nullopt);

/// Betti numbers as a polynomial in t.
MPoly to_poly(const PoincareTable& table);

}  // namespace modinv::kirwan
