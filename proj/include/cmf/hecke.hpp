#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmf/arith.hpp"
#include "cmf/qexpansion.hpp"
#include "cmf/quadint.hpp"

namespace cmf {

/// Character constructions. The Q(sqrt(-3)) case is fixed by k mod 6:
///   eisen_c1  k = 1 (mod 6)    conductor (1)
///   eisen_c2  k = 4 (mod 6)    conductor (1+w)
///   eisen_c3  k = 3, 5 (mod 6) conductor (2)
///   eisen_c4  k = 0, 2 (mod 6) conductor (2+2w)
/// and Q(sqrt(-2)) has a single construction for odd k >= 3, conductor (1).
enum class CharCase { eisen_c1, eisen_c2, eisen_c3, eisen_c4, sqrtm2_c1 };

struct HeckeCharSpec {
  RingTag field;
  int weight;
  CharCase kase;

  static HeckeCharSpec eisenstein(int k) {
    if (k < 2) throw std::invalid_argument("Q(sqrt(-3)) family needs weight k >= 2");
    switch (k % 6) {
      case 1: return {RingTag::eisen, k, CharCase::eisen_c1};
      case 4: return {RingTag::eisen, k, CharCase::eisen_c2};
      case 3:
      case 5: return {RingTag::eisen, k, CharCase::eisen_c3};
      default: return {RingTag::eisen, k, CharCase::eisen_c4};
    }
  }

  static HeckeCharSpec sqrtm2(int k) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("Q(sqrt(-2)) family needs odd weight k >= 3");
    return {RingTag::sqrtm2, k, CharCase::sqrtm2_c1};
  }

  // Level of the space S_k(Gamma_0(N), chi) the form lies in.
  [[nodiscard]] std::uint64_t level() const {
    switch (kase) {
      case CharCase::eisen_c1: return 3;
      case CharCase::eisen_c2: return 9;
      case CharCase::eisen_c3: return 12;
      case CharCase::eisen_c4: return 36;
      case CharCase::sqrtm2_c1: return 8;
    }
    return 0;
  }

  // Fundamental discriminant D of the nebentypus (D/.), or 1 if trivial.
  [[nodiscard]] int nebentypus_discriminant() const {
    switch (kase) {
      case CharCase::eisen_c1:
      case CharCase::eisen_c3: return -3;
      case CharCase::eisen_c2:
      case CharCase::eisen_c4: return 1;
      case CharCase::sqrtm2_c1: return -8;
    }
    return 1;
  }

  [[nodiscard]] std::string nebentypus_label() const {
    int d = nebentypus_discriminant();
    return d == 1 ? "trivial" : "(" + std::to_string(d) + "/.)";
  }

  [[nodiscard]] std::string conductor_label() const {
    switch (kase) {
      case CharCase::eisen_c1:
      case CharCase::sqrtm2_c1: return "(1)";
      case CharCase::eisen_c2: return "(1+w)";
      case CharCase::eisen_c3: return "(2)";
      case CharCase::eisen_c4: return "(2+2w)";
    }
    return "?";
  }

  [[nodiscard]] std::string label() const {
    static constexpr const char* names[] = {"eisen_c1", "eisen_c2", "eisen_c3", "eisen_c4", "sqrtm2_c1"};
    return std::string(names[static_cast<int>(kase)]) + "/k=" + std::to_string(weight);
  }
};

/// +1 if x + 2y = m (mod 3), else -1. Both x + 2y and m must be prime to 3.
inline int chi3(const Int& x, const Int& y, const Int& m) {
  Int t = floor_mod(x + 2 * y, Int(3));
  Int mm = floor_mod(m, Int(3));
  if (t == 0 || mm == 0) throw std::domain_error("chi3: argument divisible by 3");
  return t == mm ? 1 : -1;
}

/// psi((x + yw)): 1 for (odd, even), w^2 for (even, odd), w^4 for (odd, odd).
inline QuadInt psi_unit(const Int& x, const Int& y) {
  const bool x_odd = x % 2 != 0;
  const bool y_odd = y % 2 != 0;
  if (!x_odd && !y_odd) throw std::domain_error("psi_unit: x and y both even");
  if (x_odd && !y_odd) return QuadInt::one(RingTag::eisen);
  if (!x_odd) return QuadInt(RingTag::eisen, -1, 1);  // w^2
  return QuadInt(RingTag::eisen, 0, -1);              // w^4
}

namespace detail {

inline bool divisible_by_sqrtm3(const QuadInt& a) { return floor_mod(a.x() + 2 * a.y(), Int(3)) == 0; }
inline bool divisible_by_two(const QuadInt& a) { return a.x() % 2 == 0 && a.y() % 2 == 0; }

inline void require_field(const QuadInt& a, const HeckeCharSpec& spec) {
  if (a.ring() != spec.field) throw std::invalid_argument("Hecke character: element from the wrong ring");
}

}  // namespace detail

/// True iff the principal ideal (alpha) is prime to the conductor.
inline bool coprime_to_conductor(const QuadInt& alpha, const HeckeCharSpec& spec) {
  detail::require_field(alpha, spec);
  if (alpha.is_zero()) throw std::domain_error("coprime_to_conductor: zero element");
  switch (spec.kase) {
    case CharCase::eisen_c1:
    case CharCase::sqrtm2_c1: return true;
    case CharCase::eisen_c2: return !detail::divisible_by_sqrtm3(alpha);
    case CharCase::eisen_c3: return !detail::divisible_by_two(alpha);
    case CharCase::eisen_c4: return !detail::divisible_by_two(alpha) && !detail::divisible_by_sqrtm3(alpha);
  }
  return false;
}

/// Phi_k((alpha)) for an integral generator alpha prime to the conductor.
inline QuadInt phi_eval(const QuadInt& alpha, const HeckeCharSpec& spec) {
  if (!coprime_to_conductor(alpha, spec)) throw std::domain_error("phi_eval: ideal not prime to the conductor");
  const auto e = static_cast<std::uint64_t>(spec.weight - 1);
  QuadInt value = alpha.pow(e);
  switch (spec.kase) {
    case CharCase::eisen_c1:
    case CharCase::sqrtm2_c1: break;
    case CharCase::eisen_c2: value = Int(chi3(alpha.x(), alpha.y(), 1)) * value; break;
    case CharCase::eisen_c3: value = value * psi_unit(alpha.x(), alpha.y()).pow(e); break;
    case CharCase::eisen_c4:
      value = Int(chi3(alpha.x(), alpha.y(), 1)) * (value * psi_unit(alpha.x(), alpha.y()).pow(e));
      break;
  }
  return value;
}

struct IdealRep {
  QuadInt generator;  // canonical associate
  std::uint64_t norm;
};

/// Every nonzero principal ideal of norm <= nmax, one canonical generator
/// each, ordered by (norm, generator). Scans a box covering the norm bound
/// and deduplicates through canonical_associate.
inline std::vector<IdealRep> enumerate_principal_ideals(RingTag ring, std::uint64_t nmax) {
  std::int64_t bx = 0, by = 0;
  switch (ring) {
    case RingTag::gauss: bx = by = static_cast<std::int64_t>(isqrt(nmax)); break;
    case RingTag::sqrtm2:
      bx = static_cast<std::int64_t>(isqrt(nmax));
      by = static_cast<std::int64_t>(isqrt(nmax / 2));
      break;
    case RingTag::eisen:
      // x^2 + xy + y^2 >= 3y^2/4, so |y| <= 2 sqrt(N/3); same for x
      bx = by = static_cast<std::int64_t>(isqrt(4 * nmax / 3)) + 1;
      break;
  }
  std::set<std::pair<std::uint64_t, QuadInt>> seen;
  for (std::int64_t x = -bx; x <= bx; ++x) {
    for (std::int64_t y = -by; y <= by; ++y) {
      if (x == 0 && y == 0) continue;
      QuadInt a(ring, x, y);
      const Int n = a.norm();
      if (n > nmax) continue;
      seen.emplace(static_cast<std::uint64_t>(n), canonical_associate(a));
    }
  }
  std::vector<IdealRep> out;
  out.reserve(seen.size());
  for (const auto& [n, g] : seen) out.push_back({g, n});
  return out;
}

inline std::vector<IdealRep> enumerate_ideals(const HeckeCharSpec& spec, std::uint64_t nmax) {
  if (nmax < 1) throw std::invalid_argument("enumerate_ideals: nmax must be >= 1");
  std::vector<IdealRep> out;
  for (auto& ideal : enumerate_principal_ideals(spec.field, nmax))
    if (coprime_to_conductor(ideal.generator, spec)) out.push_back(std::move(ideal));
  return out;
}

/// a(n) = sum of Phi over ideals of norm n prime to the conductor.
inline QExpansion q_expansion_ideal_sum(const HeckeCharSpec& spec, std::uint64_t nmax) {
  if (nmax < 1) throw std::invalid_argument("q_expansion_ideal_sum: nmax must be >= 1");
  std::vector<QuadInt> sums(nmax + 1, QuadInt::zero(spec.field));
  for (const auto& ideal : enumerate_ideals(spec, nmax))
    sums[ideal.norm] = sums[ideal.norm] + phi_eval(ideal.generator, spec);

  QExpansion f("ideal-sum " + spec.label(), spec.weight, spec.level(), spec.nebentypus_label(), nmax);
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    if (!sums[n].is_rational())
      throw std::logic_error("q_expansion_ideal_sum: a(" + std::to_string(n) + ") = " + sums[n].str() +
                             " is not a rational integer");
    f[n] = sums[n].x();
  }
  return f;
}

}  // namespace cmf
