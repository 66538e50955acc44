#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "cmf/apery.hpp"
#include "cmf/arith.hpp"
#include "cmf/coeffs.hpp"
#include "cmf/etaser.hpp"
#include "cmf/hecke.hpp"
#include "cmf/primerep.hpp"

namespace cmf {

/// One checked instance of a congruence or identity. Both sides are reduced
/// into [0, modulus); pass iff the residues agree.
///
/// theorem_id is the theorem name, optionally qualified with "/..." for the
/// parameters that have no field of their own (e.g. "eq2.1/M=3", "cor1.3/k=5").
struct CongruenceReport {
  std::string theorem_id;
  std::uint64_t p = 0;
  int r = 0;
  int m = 0;
  Int modulus = 1;
  Int lhs_reduced = 0;
  Int rhs_reduced = 0;
  bool pass = false;

  friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

inline CongruenceReport make_report(std::string id, std::uint64_t p, int r, int m, const Int& modulus, const Int& lhs,
                                    const Int& rhs) {
  CongruenceReport rep{std::move(id), p, r, m, modulus, floor_mod(lhs, modulus), floor_mod(rhs, modulus), false};
  rep.pass = rep.lhs_reduced == rep.rhs_reduced;
  return rep;
}

// An exact identity expressed as a report: the modulus 2 max(|lhs|,|rhs|) + 1
// is injective on both values, so residues agree iff the integers are equal.
inline CongruenceReport make_exact_report(std::string id, std::uint64_t p, int r, int m, const IdentitySides& s) {
  const Int bound = 2 * std::max(abs(s.lhs), abs(s.rhs)) + 1;
  return make_report(std::move(id), p, r, m, bound, s.lhs, s.rhs);
}

namespace detail {

inline void require_prime_above(std::uint64_t p, std::uint64_t lo, const char* what) {
  if (!is_prime(p) || p < lo) throw std::invalid_argument(std::string(what) + ": p = " + std::to_string(p) + " out of range");
}

inline std::uint64_t half_index(std::uint64_t p, int r) { return (upow(p, static_cast<unsigned>(r)) - 1) / 2; }

inline std::string with_k(const char* id, int k) { return std::string(id) + "/k=" + std::to_string(k); }

}  // namespace detail

/// C((p^r-1)/2) = gamma_{2r+1}(p) (mod p), p > 3.
inline CongruenceReport verify_thm_1_4(std::uint64_t p, int r) {
  detail::require_prime_above(p, 5, "thm1.4");
  const Int lhs = sequence_mod(Sequence::C, detail::half_index(p, r), p, 1);
  return make_report("thm1.4", p, r, 0, Int(p), lhs, gamma_prime(2 * r + 1, p));
}

/// (-1)^{(p^r-1)/2} D((p^r-1)/2) = beta_{2r+1}(p) (mod p), p > 2.
inline CongruenceReport verify_thm_1_8(std::uint64_t p, int r) {
  detail::require_prime_above(p, 3, "thm1.8");
  const std::uint64_t n = detail::half_index(p, r);
  Int lhs = sequence_mod(Sequence::D, n, p, 1);
  if (n % 2 == 1) lhs = -lhs;
  return make_report("thm1.8", p, r, 0, Int(p), lhs, beta_prime(2 * r + 1, p));
}

/// A((p^r-1)/2) = alpha_{2r+1}(p) (mod p^2), p >= 5, read with the Q(i) family.
inline CongruenceReport verify_thm_1_9(std::uint64_t p, int r) {
  detail::require_prime_above(p, 5, "thm1.9");
  const Int lhs = sequence_mod(Sequence::A, detail::half_index(p, r), p, 2);
  return make_report("thm1.9", p, r, 0, Int(p * p), lhs, alpha_prime(2 * r + 1, p));
}

/// Sign of the (-M/p) = -1 branch: as printed (+p^2 U) or negated (-p^2 U).
enum class NonresidueSign { printed, negated };

/// U_M(m p^r) against the two-branch recursion modulo p^r, branch chosen by
/// (-M/p). U_M at the non-integral index m/p (r = 1, p not dividing m) is 0.
inline CongruenceReport verify_bs_congruence(int M, int m, int r, std::uint64_t p,
                                             NonresidueSign sign = NonresidueSign::printed) {
  if (M < 2 || M > 4) throw std::invalid_argument("eq2.1: M must be 2, 3 or 4");
  if (m < 1 || r < 1) throw std::invalid_argument("eq2.1: m and r must be >= 1");
  if (!is_prime(p) || M % static_cast<int>(p) == 0) throw std::invalid_argument("eq2.1: p must be a prime not dividing M");
  const int e = r;
  const std::uint64_t pe = upow(p, static_cast<unsigned>(e));
  const auto mm = static_cast<std::uint64_t>(m);
  auto u_at = [&](std::uint64_t idx) -> Int { return Int(u_M_mod(M, idx, p, e)); };

  const Int lhs = u_at(mm * pe);
  Int back2 = 0;  // U_M(m p^{r-2})
  if (r >= 2)
    back2 = u_at(mm * upow(p, static_cast<unsigned>(r - 2)));
  else if (mm % p == 0)
    back2 = u_at(mm / p);
  const Int p2 = Int(p) * p;

  std::string id = "eq2.1/M=" + std::to_string(M);
  Int rhs;
  if (kronecker(-M, static_cast<std::int64_t>(p)) == 1) {
    std::int64_t a = 0;
    switch (M) {
      case 2: a = rep_m2(p).u; break;
      case 3: a = rep_m3(p).u; break;
      default: a = rep_m1(p).u; break;  // p = x^2 + (2b)^2 with x odd
    }
    const Int t = 4 * Int(a) * a - 2 * Int(p);
    rhs = t * u_at(mm * upow(p, static_cast<unsigned>(r - 1))) - p2 * back2;
  } else {
    rhs = sign == NonresidueSign::printed ? Int(p2 * back2) : Int(-p2 * back2);
    if (sign == NonresidueSign::negated) id += "/negated";
  }
  return make_report(std::move(id), p, r, m, Int(pe), lhs, rhs);
}

/// A((p-1)/2) = alpha(p) (mod p^2), with alpha(p) read off the eta product.
inline CongruenceReport verify_superapery(std::uint64_t p, const PowerSeries& eta) {
  detail::require_prime_above(p, 5, "eq1.2");
  if (p > eta.trunc()) throw std::invalid_argument("eq1.2: p beyond the eta-series truncation");
  const Int lhs = sequence_mod(Sequence::A, (p - 1) / 2, p, 2);
  return make_report("eq1.2", p, 1, 0, Int(p * p), lhs, eta[p]);
}

inline CongruenceReport verify_superapery(std::uint64_t p) { return verify_superapery(p, eta_product_h(p)); }

/// alpha_3(p)^s = alpha_{2s+1}(p) (mod p^2), odd p.
inline CongruenceReport verify_eq_1_3(std::uint64_t p, int s) {
  detail::require_prime_above(p, 3, "eq1.3");
  return make_report("eq1.3", p, s, 0, Int(p * p), ipow(alpha_prime(3, p), static_cast<std::uint64_t>(s)),
                     alpha_prime(2 * s + 1, p));
}

/// gamma_k(p)^r = gamma_{r(k-1)+1}(p) (mod p^{k-1}), p > 3.
inline CongruenceReport verify_cor_1_3(int k, std::uint64_t p, int r) {
  detail::require_prime_above(p, 5, "cor1.3");
  const Int mod = ipow(Int(p), static_cast<std::uint64_t>(k - 1));
  return make_report(detail::with_k("cor1.3", k), p, r, 0, mod, ipow(gamma_prime(k, p), static_cast<std::uint64_t>(r)),
                     gamma_prime(r * (k - 1) + 1, p));
}

/// beta_k(p)^r = beta_{r(k-1)+1}(p) (mod p^{k-1}), p > 2, k odd.
inline CongruenceReport verify_cor_1_7(int k, std::uint64_t p, int r) {
  detail::require_prime_above(p, 3, "cor1.7");
  const Int mod = ipow(Int(p), static_cast<std::uint64_t>(k - 1));
  return make_report(detail::with_k("cor1.7", k), p, r, 0, mod, ipow(beta_prime(k, p), static_cast<std::uint64_t>(r)),
                     beta_prime(r * (k - 1) + 1, p));
}

/// The exact power identity; p = 3 selects the ramified branch (k odd).
inline CongruenceReport verify_cor_1_2(int k, std::uint64_t p, int r) {
  const IdentitySides s = p == 3 ? ramified_identity_gamma(k, r) : power_identity_gamma(k, p, r);
  return make_exact_report(detail::with_k("cor1.2", k), p, r, 0, s);
}

/// The exact power identity; p = 2 selects the ramified branch.
inline CongruenceReport verify_cor_1_6(int k, std::uint64_t p, int r) {
  const IdentitySides s = p == 2 ? ramified_identity_beta(k, r) : power_identity_beta(k, p, r);
  return make_exact_report(detail::with_k("cor1.6", k), p, r, 0, s);
}

/// Entry-by-entry agreement of two expansions. lhs_reduced counts matching
/// coefficients out of nmax (rhs_reduced); modulus is nmax + 1.
inline CongruenceReport agreement_report(std::string id, const QExpansion& a, const QExpansion& b) {
  if (a.nmax() != b.nmax()) throw std::invalid_argument("agreement_report: truncation mismatch");
  std::uint64_t same = 0;
  for (std::uint64_t n = 1; n <= a.nmax(); ++n) same += a[n] == b[n] ? 1 : 0;
  return make_report(std::move(id), 0, 0, static_cast<int>(a.nmax()), Int(a.nmax() + 1), Int(same), Int(a.nmax()));
}

/// Ideal sum against closed form + Hecke recursion for gamma (k >= 2) or beta (odd k >= 3).
inline CongruenceReport verify_oracle_agreement(const FamilyTag& tag, std::uint64_t nmax) {
  const HeckeCharSpec spec =
      tag.family == Family::beta ? HeckeCharSpec::sqrtm2(tag.weight) : HeckeCharSpec::eisenstein(tag.weight);
  if (tag.family == Family::alpha) throw std::invalid_argument("oracle agreement for alpha uses the eta product");
  return agreement_report("oracle-agreement/" + tag.label(), q_expansion_ideal_sum(spec, nmax),
                          extend_coefficients(tag, nmax));
}

/// Eta product against closed form + recursion for the weight-3 Q(i) form.
inline CongruenceReport verify_eta_agreement(std::uint64_t nmax) {
  const PowerSeries eta = eta_product_h(nmax);
  QExpansion from_eta("eta", 3, 16, "(-4/.)", nmax);
  for (std::uint64_t n = 1; n <= nmax; ++n) from_eta[n] = eta[n];
  return agreement_report("oracle-agreement/alpha/k=3", from_eta, extend_coefficients(FamilyTag(Family::alpha, 3), nmax));
}

enum class WitnessTheorem { thm1_4, thm1_8 };

/// A prime where the mod-p congruence holds but the mod-p^2 lift fails.
struct Witness {
  std::string theorem_id;
  std::uint64_t p;
  int r;
  Int modulus;
  Int lhs_reduced;
  Int rhs_reduced;

  friend bool operator==(const Witness&, const Witness&) = default;
};

inline std::optional<Witness> find_mod_p2_counterexample(WitnessTheorem which, std::uint64_t pmax) {
  const bool c = which == WitnessTheorem::thm1_4;
  for (std::uint64_t p : primes_up_to(pmax)) {
    if (p <= (c ? 3U : 2U)) continue;
    const Int p2 = Int(p) * p;
    const std::uint64_t n = (p - 1) / 2;
    Int lhs(sequence_mod(c ? Sequence::C : Sequence::D, n, p, 2));
    if (!c && n % 2 == 1) lhs = -lhs;
    const Int rhs = c ? gamma_prime(3, p) : beta_prime(3, p);
    if (floor_mod(lhs - rhs, Int(p)) != 0) continue;  // congruence itself fails: not a lift witness
    if (floor_mod(lhs - rhs, p2) != 0)
      return Witness{c ? "thm1.4" : "thm1.8", p, 1, p2, floor_mod(lhs, p2), floor_mod(rhs, p2)};
  }
  return std::nullopt;
}

}  // namespace cmf
