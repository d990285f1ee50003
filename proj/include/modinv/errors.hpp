#pragma once

#include <stdexcept>
#include <string>

namespace modinv {

/// A series expansion was requested for a function with a pole at 0.
class NotExpandable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// limit_at_one found a genuine pole at t = 1.
class PoleAtOne : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed formula failed its own certification (polynomiality,
/// integrality, nonnegativity, or agreement between two assembly routes).
/// Seeing one of these means a formula was transcribed wrongly.
class CertificationError : public std::runtime_error {
 public:
  enum class Kind { FormulaNotPolynomial, NegativeBetti, NonIntegral, RouteMismatch };

  CertificationError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace modinv
