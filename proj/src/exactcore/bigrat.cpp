#include "modinv/bigrat.hpp"

#include <stdexcept>

namespace modinv {

std::string to_pq_string(const BigRat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = s.front() == '-' ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

BigRat parse_bigrat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_decimal(num_text) || !is_decimal(den_text) || den_text.front() == '-') {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt pow_int(long base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), exp);
  return r;
}

}  // namespace modinv
