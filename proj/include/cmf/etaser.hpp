#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmf/apery.hpp"
#include "cmf/arith.hpp"

namespace cmf {

/// Dense truncated power series sum_{n=0}^{N} c(n) q^n + O(q^{N+1}).
class PowerSeries {
 public:
  explicit PowerSeries(std::uint64_t trunc) : c_(trunc + 1, 0) {}
  PowerSeries(std::uint64_t trunc, std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    c_.resize(trunc + 1, 0);
  }

  static PowerSeries one(std::uint64_t trunc) {
    PowerSeries s(trunc);
    s.c_[0] = 1;
    return s;
  }

  [[nodiscard]] std::uint64_t trunc() const { return c_.size() - 1; }
  [[nodiscard]] const Int& operator[](std::uint64_t n) const { return c_.at(n); }
  Int& operator[](std::uint64_t n) { return c_.at(n); }
  [[nodiscard]] const std::vector<Int>& coefficients() const { return c_; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Int> c_;
};

/// Cauchy product truncated at N. Zero coefficients are skipped, so sparse
/// factors cost O(N * nnz).
inline PowerSeries series_mul(const PowerSeries& s, const PowerSeries& t) {
  if (s.trunc() != t.trunc()) throw std::invalid_argument("series_mul: truncation mismatch");
  const std::uint64_t n = s.trunc();
  PowerSeries out(n);
  for (std::uint64_t j = 0; j <= n; ++j) {
    if (t[j] == 0) continue;
    for (std::uint64_t i = 0; i + j <= n; ++i) {
      if (s[i] == 0) continue;
      out[i + j] += s[i] * t[j];
    }
  }
  return out;
}

/// h = q prod_{n >= 1} (1 - q^{4n})^6 through q^N; each factor is expanded
/// by the binomial theorem before it is multiplied in.
inline PowerSeries eta_product_h(std::uint64_t trunc) {
  if (trunc < 1) throw std::invalid_argument("eta_product_h: N must be >= 1");
  PowerSeries h(trunc);
  h[1] = 1;
  for (std::uint64_t n = 1; 4 * n <= trunc; ++n) {
    PowerSeries factor(trunc);
    for (std::uint64_t j = 0; j <= 6 && 4 * n * j <= trunc; ++j) {
      Int b = binomial(6, j);
      factor[4 * n * j] = j % 2 == 0 ? b : Int(-b);
    }
    h = series_mul(h, factor);
  }
  return h;
}

/// alpha(p) read off the eta product.
inline Int alpha_from_eta(std::uint64_t p, std::uint64_t trunc) {
  if (p > trunc) throw std::invalid_argument("alpha_from_eta: p = " + std::to_string(p) + " beyond truncation");
  return eta_product_h(trunc)[p];
}

}  // namespace cmf
