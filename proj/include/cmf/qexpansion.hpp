#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmf/arith.hpp"

namespace cmf {

/// Truncated q-expansion sum_{n=1}^{N} a(n) q^n of a cusp form, with the
/// weight/level/character metadata of the space it lives in.
class QExpansion {
 public:
  QExpansion() = default;
  QExpansion(std::string label, int weight, std::uint64_t level, std::string character, std::uint64_t nmax)
      : label_(std::move(label)), weight_(weight), level_(level), character_(std::move(character)), a_(nmax + 1, 0) {}

  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] int weight() const { return weight_; }
  [[nodiscard]] std::uint64_t level() const { return level_; }
  [[nodiscard]] const std::string& character() const { return character_; }
  [[nodiscard]] std::uint64_t nmax() const { return a_.empty() ? 0 : a_.size() - 1; }

  [[nodiscard]] const Int& operator[](std::uint64_t n) const { return a_[n]; }
  Int& operator[](std::uint64_t n) { return a_[n]; }

  [[nodiscard]] const Int& at(std::uint64_t n) const {
    if (n == 0 || n > nmax()) throw std::out_of_range("QExpansion: index " + std::to_string(n));
    return a_[n];
  }

  // a(1..nmax)
  [[nodiscard]] std::span<const Int> coefficients() const {
    return a_.empty() ? std::span<const Int>{} : std::span<const Int>(a_).subspan(1);
  }

 private:
  std::string label_;
  int weight_ = 0;
  std::uint64_t level_ = 0;
  std::string character_;
  std::vector<Int> a_;  // a_[0] is the (zero) constant term
};

}  // namespace cmf
