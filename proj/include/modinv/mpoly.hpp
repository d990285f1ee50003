#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modinv/bigrat.hpp"

namespace modinv {

/// Variable set of a polynomial. t and q are standalone univariate symbols;
/// uv is the bivariate Hodge-weight ring. q is never silently identified
/// with uv, see embed_q().
enum class Vars : std::uint8_t { t, q, uv };

inline int arity(Vars vars) { return vars == Vars::uv ? 2 : 1; }
const char* to_string(Vars vars);

/// Exponent vector. For univariate polynomials `j` is always 0.
struct Exp {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  std::uint64_t total() const { return std::uint64_t{i} + j; }
  bool operator==(const Exp&) const = default;
};

/// Graded lexicographic order: total degree first, then the u exponent.
struct GrlexLess {
  bool operator()(const Exp& a, const Exp& b) const {
    const auto da = a.total();
    const auto db = b.total();
    if (da != db) return da < db;
    return a.i < b.i;
  }
};

/// Exponent sum; throws std::overflow_error instead of wrapping.
Exp add_exp(const Exp& a, const Exp& b);

class MPoly {
 public:
  using Term = std::pair<Exp, BigRat>;

  explicit MPoly(Vars vars = Vars::t) : vars_(vars) {}

  /// Canonicalizes: sorts, merges equal exponents, drops zeros.
  static MPoly from_terms(Vars vars, std::vector<Term> terms);
  static MPoly constant(Vars vars, const BigRat& c);
  static MPoly monomial(Vars vars, Exp e, const BigRat& c = 1);

  /// t^k, q^k or (uv)^k depending on `vars`.
  static MPoly power(Vars vars, std::uint32_t k, const BigRat& c = 1);

  Vars vars() const { return vars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  long degree() const;
  /// Degree in the first (u or t/q) or second (v) variable; -1 for zero.
  long degree_in(int var) const;

  BigRat coeff(Exp e) const;
  /// Largest term in graded lex order. Precondition: nonzero.
  const Term& leading_term() const { return terms_.back(); }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const BigRat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const BigRat& c) { return a *= c; }
  friend MPoly operator*(const BigRat& c, MPoly a) { return a *= c; }

  bool operator==(const MPoly& rhs) const;

  MPoly pow(unsigned n) const;

  /// Evaluates at (x, y); y is ignored for univariate polynomials.
  BigRat evaluate(const BigRat& x, const BigRat& y = 0) const;

  /// u <-> v. Identity on univariate polynomials.
  MPoly swap_uv() const;

 private:
  Vars vars_;
  std::vector<Term> terms_;  // ascending GrlexLess, no zero coefficients

};

/// Throws std::invalid_argument if the variable sets differ.
void require_same_vars(const MPoly& a, const MPoly& b);

/// Exact product, dispatching to the row-parallel kernel.
MPoly poly_mul(const MPoly& a, const MPoly& b);

namespace kernels {
/// Serial reference product: accumulates every term pair in an ordered map.
MPoly mul_reference(const MPoly& a, const MPoly& b);
/// Product computed one output row (u or t exponent) at a time; rows are
/// independent and distributed with OpenMP when the work is large enough.
MPoly mul_parallel(const MPoly& a, const MPoly& b);
/// Same algorithm as mul_parallel with threading forced off.
MPoly mul_rows_serial(const MPoly& a, const MPoly& b);
}  // namespace kernels

/// q with q * b == a, or nullopt if b does not divide a in Q[vars].
/// Throws std::domain_error if b is zero.
std::optional<MPoly> poly_exact_div(const MPoly& a, const MPoly& b);

/// Sum of var^k for k = lo, lo+step, ..., <= hi. Zero when hi < lo.
MPoly geometric_sum(Vars vars, long lo, long hi, long step = 2);

/// q^k -> (uv)^k.
MPoly embed_q(const MPoly& p);
/// u, v -> t (bivariate to univariate in t).
MPoly substitute_diagonal(const MPoly& p);

/// Univariate quotient and remainder. Throws on bivariate input or b == 0.
std::pair<MPoly, MPoly> poly_divmod(const MPoly& a, const MPoly& b);
/// Monic univariate GCD (zero if both are zero).
MPoly poly_gcd(const MPoly& a, const MPoly& b);

}  // namespace modinv
