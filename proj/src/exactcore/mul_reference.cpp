#include <map>

#include "modinv/mpoly.hpp"

namespace modinv::kernels {

MPoly mul_reference(const MPoly& a, const MPoly& b) {
  require_same_vars(a, b);
  std::map<Exp, BigRat, GrlexLess> acc;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      acc[add_exp(ea, eb)] += ca * cb;
    }
  }
  std::vector<MPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) terms.emplace_back(e, std::move(c));
  }
  return MPoly::from_terms(a.vars(), std::move(terms));
}

}  // namespace modinv::kernels
