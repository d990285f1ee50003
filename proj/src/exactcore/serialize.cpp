#include "modinv/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace modinv {

using nlohmann::json;

json to_json(const MPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json exp = arity(p.vars()) == 2 ? json::array({e.i, e.j}) : json::array({e.i});
    out.push_back({{"exp", std::move(exp)}, {"coeff", to_pq_string(c)}});
  }
  return out;
}

json to_json(const RatFun& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

MPoly mpoly_from_json(const json& j, Vars univariate_var) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  if (arity(univariate_var) != 1) throw std::invalid_argument("univariate_var must be t or q");
  std::vector<MPoly::Term> terms;
  std::optional<std::size_t> width;
  for (const auto& item : j) {
    const auto& exp = item.at("exp");
    if (!exp.is_array() || exp.empty() || exp.size() > 2) throw std::invalid_argument("bad \"exp\"");
    if (width && *width != exp.size()) throw std::invalid_argument("inconsistent exponent lengths");
    width = exp.size();
    Exp e{exp[0].get<std::uint32_t>(), exp.size() == 2 ? exp[1].get<std::uint32_t>() : 0U};
    terms.emplace_back(e, parse_bigrat(item.at("coeff").get<std::string>()));
  }
  const Vars vars = width.value_or(1) == 2 ? Vars::uv : univariate_var;
  return MPoly::from_terms(vars, std::move(terms));
}

RatFun ratfun_from_json(const json& j, Vars univariate_var) {
  MPoly num = mpoly_from_json(j.at("num"), univariate_var);
  MPoly den = mpoly_from_json(j.at("den"), univariate_var);
  // An empty numerator array carries no arity; borrow the denominator's.
  if (num.is_zero()) num = MPoly(den.vars());
  return RatFun(std::move(num), std::move(den));
}

namespace {

void append_power(std::ostringstream& os, const char* name, std::uint32_t k, bool& first_factor) {
  if (k == 0) return;
  if (!first_factor) os << '*';
  os << name;
  if (k > 1) os << '^' << k;
  first_factor = false;
}

}  // namespace

std::string to_pretty(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigRat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_const = e.i == 0 && e.j == 0;
    bool first_factor = true;
    if (is_const || mag != 1) {
      os << mag.get_str();
      first_factor = false;
    }
    if (p.vars() == Vars::uv) {
      append_power(os, "u", e.i, first_factor);
      append_power(os, "v", e.j, first_factor);
    } else {
      append_power(os, to_string(p.vars()), e.i, first_factor);
    }
  }
  return os.str();
}

std::string to_pretty(const RatFun& f) {
  return "(" + to_pretty(f.num()) + ") / (" + to_pretty(f.den()) + ")";
}

}  // namespace modinv
