#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cmf/arith.hpp"
#include "cmf/primerep.hpp"
#include "cmf/qexpansion.hpp"
#include "cmf/quadint.hpp"

namespace cmf {

/// The three CM families:
///  gamma  CM by Q(sqrt(-3)), any weight k >= 2
///  beta   CM by Q(sqrt(-2)), odd weight k >= 3
///  alpha  CM by Q(i),        any weight k >= 2
enum class Family { gamma, beta, alpha };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::gamma: return "gamma";
    case Family::beta: return "beta";
    case Family::alpha: return "alpha";
  }
  return "?";
}

struct FamilyTag {
  Family family;
  int weight;

  FamilyTag(Family f, int k) : family(f), weight(k) {
    if (k < 2) throw std::invalid_argument(std::string(family_name(f)) + ": weight must be >= 2");
    if (f == Family::beta && (k < 3 || k % 2 == 0))
      throw std::invalid_argument("beta: weight must be odd and >= 3");
  }

  // Level of the ambient space. For alpha the level depends on k mod 4:
  // 4 (k = 1), 16 (k = 3), 32 (k even).
  [[nodiscard]] std::uint64_t level() const {
    switch (family) {
      case Family::gamma:
        switch (weight % 6) {
          case 1: return 3;
          case 4: return 9;
          case 3:
          case 5: return 12;
          default: return 36;
        }
      case Family::beta: return 8;
      case Family::alpha:
        if (weight % 2 == 0) return 32;
        return weight % 4 == 1 ? 4 : 16;
    }
    return 0;
  }

  // D with nebentypus (D/.), or 1 for the trivial character.
  [[nodiscard]] int character_discriminant() const {
    switch (family) {
      case Family::gamma: return weight % 2 == 1 ? -3 : 1;
      case Family::beta: return -8;
      case Family::alpha: return weight % 2 == 1 ? -4 : 1;
    }
    return 1;
  }

  [[nodiscard]] std::string character_label() const {
    int d = character_discriminant();
    return d == 1 ? "trivial" : "(" + std::to_string(d) + "/.)";
  }

  /// Nebentypus as a Dirichlet character modulo the level (0 off the units).
  [[nodiscard]] int nebentypus(std::uint64_t n) const {
    if (gcd(n, level()) != 1) return 0;
    int d = character_discriminant();
    return d == 1 ? 1 : kronecker(d, static_cast<std::int64_t>(n));
  }

  [[nodiscard]] std::string label() const {
    return std::string(family_name(family)) + "/k=" + std::to_string(weight);
  }
};

namespace detail {

// pi^e + conj(pi)^e, which is rational.
inline Int trace_power(const QuadInt& pi, std::uint64_t e) {
  QuadInt s = pi.pow(e) + pi.conj().pow(e);
  if (!s.is_rational()) throw std::logic_error("trace_power: non-rational trace");
  // In Z[w] the rational part of x + yw with y = 0 is x.
  return s.x();
}

}  // namespace detail

/// p-th coefficient of the Q(sqrt(-3)) family: (a+b sqrt(-3))^{k-1} +
/// (a-b sqrt(-3))^{k-1} for p = 1 (mod 6), (-3)^{(k-1)/2} at p = 3 for odd k,
/// and 0 otherwise (including the inert prime 2).
inline Int gamma_prime(int k, std::uint64_t p) {
  FamilyTag tag(Family::gamma, k);
  if (!is_prime(p)) throw std::invalid_argument("gamma_prime: p must be prime");
  const auto e = static_cast<std::uint64_t>(k - 1);
  if (p == 3) return k % 2 == 1 ? ipow(Int(-3), e / 2) : Int(0);
  if (p % 6 != 1) return 0;
  return detail::trace_power(to_quadint(rep_m3(p)), e);
}

inline Int beta_prime(int k, std::uint64_t p) {
  FamilyTag tag(Family::beta, k);
  if (!is_prime(p)) throw std::invalid_argument("beta_prime: p must be prime");
  const auto e = static_cast<std::uint64_t>(k - 1);
  if (p == 2) return ipow(Int(-2), e / 2);
  if (p % 8 != 1 && p % 8 != 3) return 0;
  return detail::trace_power(to_quadint(rep_m2(p)), e);
}

/// p-th coefficient of the Q(i) family,
/// (-1)^{(x+y-1)(k-1)/2} [(x+iy)^{k-1} + (x-iy)^{k-1}] with p = x^2+y^2, x odd.
/// At p = 2 the value is (1+i)^{k-1} = (-4)^{(k-1)/4} when k = 1 (mod 4) and
/// 0 otherwise (the prime above 2 divides the conductor).
inline Int alpha_prime(int k, std::uint64_t p) {
  FamilyTag tag(Family::alpha, k);
  if (!is_prime(p)) throw std::invalid_argument("alpha_prime: p must be prime");
  const auto e = static_cast<std::uint64_t>(k - 1);
  if (p == 2) return k % 4 == 1 ? ipow(Int(-4), e / 4) : Int(0);
  if (p % 4 == 3) return 0;
  const PrimeRep rep = rep_m1(p);
  // x odd and y even, so x + y - 1 is even and the exponent is ((x+y-1)/2)(k-1)
  const std::int64_t half = (rep.u + rep.v - 1) / 2;
  const bool negate = (half % 2 != 0) && (e % 2 != 0);
  Int t = detail::trace_power(to_quadint(rep), e);
  return negate ? Int(-t) : t;
}

inline Int prime_coefficient(const FamilyTag& tag, std::uint64_t p) {
  switch (tag.family) {
    case Family::gamma: return gamma_prime(tag.weight, p);
    case Family::beta: return beta_prime(tag.weight, p);
    case Family::alpha: return alpha_prime(tag.weight, p);
  }
  return 0;
}

/// Full expansion a(1..nmax) from the prime coefficients: multiplicative in
/// coprime arguments, and at each prime
///   a(p^{r+1}) = a(p) a(p^r) - eps(p) p^{k-1} a(p^{r-1}),
/// where eps is the nebentypus modulo the level, so primes dividing the level
/// (eps = 0) give a(p^r) = a(p)^r.
inline QExpansion extend_coefficients(const FamilyTag& tag, std::uint64_t nmax) {
  if (nmax < 1) throw std::invalid_argument("extend_coefficients: nmax must be >= 1");
  QExpansion f("closed-form " + tag.label(), tag.weight, tag.level(), tag.character_label(), nmax);
  f[1] = 1;
  const auto spf = smallest_prime_factors(nmax);
  const auto e = static_cast<std::uint64_t>(tag.weight - 1);
  for (std::uint64_t n = 2; n <= nmax; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t rest = n;
    while (rest % p == 0) rest /= p;
    if (rest != 1) {
      f[n] = f[n / rest] * f[rest];
      continue;
    }
    if (n == p) {
      f[n] = prime_coefficient(tag, p);
      continue;
    }
    const Int twist = tag.nebentypus(p) * ipow(Int(p), e);
    f[n] = f[p] * f[n / p] - twist * f[n / p / p];
  }
  return f;
}

/// Both sides of an exact identity.
struct IdentitySides {
  Int lhs;
  Int rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

namespace detail {

inline Int binomial_small(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Int r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// a(p)^r against sum_{t <= (r-1)/2} C(r,t) p^{t(k-1)} a_{(r-2t)(k-1)+1}(p)
// plus C(r, r/2) p^{(r/2)(k-1)} for even r at split primes.
template <typename Coefficient>
IdentitySides power_identity(int k, std::uint64_t p, int r, bool split, Coefficient coeff) {
  if (r < 1) throw std::invalid_argument("power identity: r must be >= 1");
  const auto e = static_cast<std::uint64_t>(k - 1);
  IdentitySides s{ipow(coeff(k, p), static_cast<std::uint64_t>(r)), 0};
  for (int t = 0; t <= (r - 1) / 2; ++t) {
    const int weight = (r - 2 * t) * (k - 1) + 1;
    s.rhs += binomial_small(r, t) * ipow(Int(p), t * e) * coeff(weight, p);
  }
  if (split && r % 2 == 0) s.rhs += binomial_small(r, r / 2) * ipow(Int(p), (r / 2) * e);
  return s;
}

}  // namespace detail

inline IdentitySides power_identity_gamma(int k, std::uint64_t p, int r) {
  if (p <= 3 || !is_prime(p)) throw std::invalid_argument("power_identity_gamma: p must be a prime > 3");
  return detail::power_identity(k, p, r, p % 6 == 1, gamma_prime);
}

inline IdentitySides power_identity_beta(int k, std::uint64_t p, int r) {
  if (p <= 2 || !is_prime(p)) throw std::invalid_argument("power_identity_beta: p must be an odd prime");
  FamilyTag tag(Family::beta, k);
  return detail::power_identity(k, p, r, p % 8 == 1 || p % 8 == 3, beta_prime);
}

/// gamma_k(3)^r = gamma_{r(k-1)+1}(3), k odd.
inline IdentitySides ramified_identity_gamma(int k, int r) {
  if (k % 2 == 0) throw std::invalid_argument("ramified_identity_gamma: k must be odd");
  if (r < 1) throw std::invalid_argument("ramified_identity_gamma: r must be >= 1");
  return {ipow(gamma_prime(k, 3), static_cast<std::uint64_t>(r)), gamma_prime(r * (k - 1) + 1, 3)};
}

/// beta_k(2)^r = beta_{r(k-1)+1}(2).
inline IdentitySides ramified_identity_beta(int k, int r) {
  if (r < 1) throw std::invalid_argument("ramified_identity_beta: r must be >= 1");
  return {ipow(beta_prime(k, 2), static_cast<std::uint64_t>(r)), beta_prime(r * (k - 1) + 1, 2)};
}

}  // namespace cmf
