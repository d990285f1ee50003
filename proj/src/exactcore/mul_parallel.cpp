#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include <omp.h>

#include "modinv/mpoly.hpp"

namespace modinv::kernels {
namespace {

// Below this many term pairs the threading overhead dominates.
constexpr std::size_t kParallelPairs = 1U << 14;
// Widest output row accumulated in a dense buffer; wider rows use a map.
constexpr std::uint64_t kMaxDenseRow = 1U << 16;

struct RowTerm {
  std::uint32_t j;
  const BigRat* coeff;
};

struct Row {
  std::uint32_t i;
  std::vector<RowTerm> terms;
  std::uint32_t j_min = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t j_max = 0;
};

std::vector<Row> split_rows(const MPoly& p) {
  std::map<std::uint32_t, Row> by_i;
  for (const auto& [e, c] : p.terms()) {
    auto& row = by_i[e.i];
    row.i = e.i;
    row.terms.push_back({e.j, &c});
    row.j_min = std::min(row.j_min, e.j);
    row.j_max = std::max(row.j_max, e.j);
  }
  std::vector<Row> rows;
  rows.reserve(by_i.size());
  for (auto& [i, row] : by_i) rows.push_back(std::move(row));
  return rows;
}

const Row* find_row(const std::vector<Row>& rows, std::uint64_t i) {
  auto it = std::lower_bound(rows.begin(), rows.end(), i,
                             [](const Row& r, std::uint64_t x) { return r.i < x; });
  return it != rows.end() && it->i == i ? &*it : nullptr;
}

// All terms of the product whose first exponent is `out_i`.
std::vector<MPoly::Term> product_row(const std::vector<Row>& a, const std::vector<Row>& b,
                                     std::uint32_t out_i) {
  std::uint64_t j_lo = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t j_hi = 0;
  std::vector<std::pair<const Row*, const Row*>> pairs;
  for (const auto& ra : a) {
    if (ra.i > out_i) break;
    const Row* rb = find_row(b, out_i - ra.i);
    if (rb == nullptr) continue;
    pairs.emplace_back(&ra, rb);
    j_lo = std::min<std::uint64_t>(j_lo, std::uint64_t{ra.j_min} + rb->j_min);
    j_hi = std::max<std::uint64_t>(j_hi, std::uint64_t{ra.j_max} + rb->j_max);
  }
  std::vector<MPoly::Term> out;
  if (pairs.empty()) return out;
  if (j_hi > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("exponent overflow");

  if (j_hi - j_lo < kMaxDenseRow) {
    std::vector<BigRat> acc(j_hi - j_lo + 1);
    for (const auto& [ra, rb] : pairs) {
      for (const auto& ta : ra->terms) {
        for (const auto& tb : rb->terms) {
          acc[std::uint64_t{ta.j} + tb.j - j_lo] += *ta.coeff * *tb.coeff;
        }
      }
    }
    for (std::uint64_t k = 0; k < acc.size(); ++k) {
      if (acc[k] != 0) out.emplace_back(Exp{out_i, static_cast<std::uint32_t>(k + j_lo)}, std::move(acc[k]));
    }
  } else {
    std::map<std::uint32_t, BigRat> acc;
    for (const auto& [ra, rb] : pairs) {
      for (const auto& ta : ra->terms) {
        for (const auto& tb : rb->terms) acc[ta.j + tb.j] += *ta.coeff * *tb.coeff;
      }
    }
    for (auto& [j, c] : acc) {
      if (c != 0) out.emplace_back(Exp{out_i, j}, std::move(c));
    }
  }
  return out;
}

MPoly mul_rows(const MPoly& a, const MPoly& b, bool allow_threads) {
  require_same_vars(a, b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.vars());
  const auto rows_a = split_rows(a);
  const auto rows_b = split_rows(b);

  std::vector<std::uint32_t> out_rows;
  for (const auto& ra : rows_a) {
    for (const auto& rb : rows_b) {
      if (ra.i > std::numeric_limits<std::uint32_t>::max() - rb.i) throw std::overflow_error("exponent overflow");
      out_rows.push_back(ra.i + rb.i);
    }
  }
  std::sort(out_rows.begin(), out_rows.end());
  out_rows.erase(std::unique(out_rows.begin(), out_rows.end()), out_rows.end());

  const bool threaded = allow_threads && a.size() * b.size() >= kParallelPairs;
  const auto n = static_cast<std::ptrdiff_t>(out_rows.size());
  std::vector<std::vector<MPoly::Term>> results(out_rows.size());
  // Exceptions must not escape an OpenMP region.
  bool overflow = false;
#pragma omp parallel for schedule(dynamic, 4) if (threaded)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    try {
      results[r] = product_row(rows_a, rows_b, out_rows[r]);
    } catch (const std::overflow_error&) {
#pragma omp atomic write
      overflow = true;
    }
  }
  if (overflow) throw std::overflow_error("exponent overflow");

  std::vector<MPoly::Term> terms;
  for (auto& row : results) {
    for (auto& t : row) terms.push_back(std::move(t));
  }
  return MPoly::from_terms(a.vars(), std::move(terms));
}

}  // namespace

MPoly mul_parallel(const MPoly& a, const MPoly& b) { return mul_rows(a, b, true); }

MPoly mul_rows_serial(const MPoly& a, const MPoly& b) { return mul_rows(a, b, false); }

}  // namespace modinv::kernels
