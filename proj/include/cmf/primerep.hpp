#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "cmf/arith.hpp"
#include "cmf/quadint.hpp"

namespace cmf {

/// Binary forms u^2 + M v^2 for M = 1, 2, 3.
enum class Form { m1 = 1, m2 = 2, m3 = 3 };

/// A normalized representation p = u^2 + M v^2.
///  - m1: u odd, u > 0, v > 0
///  - m2: u > 0, v > 0 (u = 0 only for p = 2)
///  - m3: u = 1 (mod 3), v > 0
struct PrimeRep {
  std::uint64_t p;
  Form form;
  std::int64_t u;
  std::int64_t v;

  friend bool operator==(const PrimeRep&, const PrimeRep&) = default;
};

class NotRepresentable : public std::domain_error {
 public:
  NotRepresentable(std::uint64_t p, Form f)
      : std::domain_error("prime " + std::to_string(p) + " is not represented by u^2+" +
                          std::to_string(static_cast<int>(f)) + "v^2") {}
};

namespace detail {

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("primerep: " + std::to_string(p) + " is not prime");
}

// Brute force over v in [1, sqrt(p/M)] with a perfect-square test.
inline std::optional<std::pair<std::int64_t, std::int64_t>> search(std::uint64_t p, std::uint64_t m) {
  for (std::uint64_t v = 1; m * v * v <= p; ++v) {
    if (auto u = exact_sqrt(p - m * v * v)) return std::pair{static_cast<std::int64_t>(*u), static_cast<std::int64_t>(v)};
  }
  return std::nullopt;
}

}  // namespace detail

inline PrimeRep rep_m3(std::uint64_t p) {
  detail::require_prime(p);
  if (p % 6 != 1) throw NotRepresentable(p, Form::m3);
  auto uv = detail::search(p, 3);
  if (!uv) throw std::logic_error("rep_m3: no representation found");
  auto [u, v] = *uv;
  if (floor_mod(u, 3) != 1) u = -u;
  return {p, Form::m3, u, v};
}

inline PrimeRep rep_m2(std::uint64_t p) {
  detail::require_prime(p);
  if (p == 2) return {p, Form::m2, 0, 1};
  if (p % 8 != 1 && p % 8 != 3) throw NotRepresentable(p, Form::m2);
  auto uv = detail::search(p, 2);
  if (!uv) throw std::logic_error("rep_m2: no representation found");
  return {p, Form::m2, uv->first, uv->second};
}

inline PrimeRep rep_m1(std::uint64_t p) {
  detail::require_prime(p);
  if (p % 4 != 1) throw NotRepresentable(p, Form::m1);
  auto uv = detail::search(p, 1);
  if (!uv) throw std::logic_error("rep_m1: no representation found");
  auto [u, v] = *uv;
  if (u % 2 == 0) std::swap(u, v);
  return {p, Form::m1, u, v};
}

/// The ring element u + v*sqrt(-M) of norm p: x+yi, c+d*sqrt(-2), or
/// (a-b) + 2b*w = a + b*sqrt(-3).
inline QuadInt to_quadint(const PrimeRep& r) {
  switch (r.form) {
    case Form::m1: return QuadInt(RingTag::gauss, r.u, r.v);
    case Form::m2: return QuadInt(RingTag::sqrtm2, r.u, r.v);
    case Form::m3: return QuadInt(RingTag::eisen, r.u - r.v, 2 * r.v);
  }
  throw std::logic_error("to_quadint: bad form");
}

}  // namespace cmf
