#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmf/arith.hpp"

namespace cmf {

/// Apery numbers A, B and Zagier's sporadic sequences C, D:
///   A(n) = sum C(n,k)^2 C(n+k,k)     B(n) = sum C(n,k)^2 C(n+k,k)^2
///   C(n) = sum C(n,k)^2 C(2k,k)      D(n) = sum C(n,k)^3
enum class Sequence { A, B, C, D };

inline const char* sequence_name(Sequence s) {
  static constexpr std::array<const char*, 4> names{"A", "B", "C", "D"};
  return names[static_cast<std::size_t>(s)];
}

inline std::optional<Sequence> parse_sequence(const std::string& s) {
  if (s == "A") return Sequence::A;
  if (s == "B") return Sequence::B;
  if (s == "C") return Sequence::C;
  if (s == "D") return Sequence::D;
  return std::nullopt;
}

inline Int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Exact term u(n); the binomials are stepped multiplicatively in k.
inline Int sequence_value(Sequence s, std::uint64_t n) {
  Int total = 0;
  Int row = 1;    // C(n, k)
  Int upper = 1;  // C(n+k, k) or C(2k, k)
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (k > 0) {
      row = row * (n - k + 1) / k;
      if (s == Sequence::C)
        upper = upper * (2 * k) * (2 * k - 1) / (k * k);
      else
        upper = upper * (n + k) / k;
    }
    switch (s) {
      case Sequence::A: total += row * row * upper; break;
      case Sequence::B: total += row * row * upper * upper; break;
      case Sequence::C: total += row * row * upper; break;
      case Sequence::D: total += row * row * row; break;
    }
  }
  return total;
}

inline Int apery_A(std::uint64_t n) { return sequence_value(Sequence::A, n); }
inline Int apery_B(std::uint64_t n) { return sequence_value(Sequence::B, n); }
inline Int seq_C(std::uint64_t n) { return sequence_value(Sequence::C, n); }
inline Int seq_D(std::uint64_t n) { return sequence_value(Sequence::D, n); }

struct IntegerSequence {
  std::string name;
  std::vector<Int> terms;  // u(0..N)
};

inline IntegerSequence sequence_terms(Sequence s, std::uint64_t nmax) {
  IntegerSequence out{sequence_name(s), {}};
  out.terms.reserve(nmax + 1);
  for (std::uint64_t n = 0; n <= nmax; ++n) out.terms.push_back(sequence_value(s, n));
  return out;
}

namespace detail {

inline int u_sign(std::uint64_t n) { return ((n - 1) / 2) % 2 == 0 ? 1 : -1; }

inline Sequence u_source(int m) {
  switch (m) {
    case 2: return Sequence::D;
    case 3: return Sequence::C;
    case 4: return Sequence::A;
    default: throw std::invalid_argument("U_M: M must be 2, 3 or 4");
  }
}

}  // namespace detail

/// U_2(n) = (-1)^{(n-1)/2} D((n-1)/2), U_3(n) = C((n-1)/2),
/// U_4(n) = (-1)^{(n-1)/2} A((n-1)/2) for odd n; U_M(n) = 0 for even n.
inline Int u_M(int m, std::uint64_t n) {
  const Sequence src = detail::u_source(m);
  if (n < 1) throw std::invalid_argument("U_M: n must be >= 1");
  if (n % 2 == 0) return 0;
  Int v = sequence_value(src, (n - 1) / 2);
  return (m != 3 && detail::u_sign(n) < 0) ? Int(-v) : v;
}

// ---------------------------------------------------------------------------
// Values modulo p^e for indices far beyond exact reach. Each binomial is
// carried as (unit part mod p^e, p-adic valuation) so the divisions by k in
// the multiplicative update stay exact.

namespace detail {

class PadicAccumulator {
 public:
  PadicAccumulator(std::uint64_t p, std::uint64_t modulus) : p_(p), mod_(modulus) {}

  // Multiply by num / den.
  void scale(std::uint64_t num, std::uint64_t den) {
    val_ += strip(num) - strip(den);
    unit_ = mulmod(mulmod(unit_, num % mod_, mod_), invmod(den % mod_, mod_), mod_);
  }

  [[nodiscard]] int valuation() const { return val_; }
  [[nodiscard]] std::uint64_t unit() const { return unit_; }

 private:
  int strip(std::uint64_t& m) const {
    int v = 0;
    while (m % p_ == 0) {
      m /= p_;
      ++v;
    }
    return v;
  }

  std::uint64_t p_;
  std::uint64_t mod_;
  std::uint64_t unit_ = 1;
  int val_ = 0;
};

}  // namespace detail

/// u(n) mod p^e via the binomial sum.
inline std::uint64_t sequence_mod(Sequence s, std::uint64_t n, std::uint64_t p, int e) {
  if (!is_prime(p) || e < 1) throw std::invalid_argument("sequence_mod: need a prime p and e >= 1");
  const std::uint64_t mod = upow(p, static_cast<unsigned>(e));
  std::vector<std::uint64_t> ppow(static_cast<std::size_t>(e) + 1, 1);
  for (int i = 1; i <= e; ++i) ppow[i] = ppow[i - 1] * p;

  detail::PadicAccumulator row(p, mod);    // C(n, k)
  detail::PadicAccumulator upper(p, mod);  // C(n+k, k) or C(2k, k)
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (k > 0) {
      row.scale(n - k + 1, k);
      if (s == Sequence::C) {
        upper.scale(2 * k, k);
        upper.scale(2 * k - 1, k);
      } else {
        upper.scale(n + k, k);
      }
    }
    int v = 0;
    std::uint64_t u = 0;
    switch (s) {
      case Sequence::A:
      case Sequence::C:
        v = 2 * row.valuation() + upper.valuation();
        u = mulmod(mulmod(row.unit(), row.unit(), mod), upper.unit(), mod);
        break;
      case Sequence::B:
        v = 2 * row.valuation() + 2 * upper.valuation();
        u = mulmod(mulmod(row.unit(), row.unit(), mod), mulmod(upper.unit(), upper.unit(), mod), mod);
        break;
      case Sequence::D:
        v = 3 * row.valuation();
        u = mulmod(mulmod(row.unit(), row.unit(), mod), row.unit(), mod);
        break;
    }
    if (v >= e) continue;
    total = (total + mulmod(u, ppow[static_cast<std::size_t>(v)], mod)) % mod;
  }
  return total;
}

/// U_M(n) mod p^e.
inline std::uint64_t u_M_mod(int m, std::uint64_t n, std::uint64_t p, int e) {
  const Sequence src = detail::u_source(m);
  if (n < 1) throw std::invalid_argument("U_M: n must be >= 1");
  if (n % 2 == 0) return 0;
  const std::uint64_t mod = upow(p, static_cast<unsigned>(e));
  std::uint64_t v = sequence_mod(src, (n - 1) / 2, p, e);
  if (m != 3 && detail::u_sign(n) < 0) v = (mod - v) % mod;
  return v;
}

// ---------------------------------------------------------------------------
// Three-term recurrence b (n+1)^2 u(n+1) + (a n^2 + a n - lambda) u(n) + n^2 u(n-1) = 0.

struct RecurrenceTriple {
  Int a;
  Int b;
  Int lambda;
  friend bool operator==(const RecurrenceTriple&, const RecurrenceTriple&) = default;
};

namespace detail {

template <typename T>
T recurrence_residual(const T& a, const T& b, const T& lambda, const std::vector<Int>& u, std::uint64_t n) {
  const T nn(static_cast<long long>(n));
  return b * (nn + 1) * (nn + 1) * T(u[n + 1]) + (a * nn * nn + a * nn - lambda) * T(u[n]) + nn * nn * T(u[n - 1]);
}

}  // namespace detail

/// True iff the relation holds exactly for 1 <= n <= nmax.
inline bool recurrence_check(const IntegerSequence& seq, const RecurrenceTriple& t, std::uint64_t nmax) {
  if (t.b == 0) throw std::invalid_argument("recurrence_check: b must be nonzero");
  if (seq.terms.size() < nmax + 2) throw std::invalid_argument("recurrence_check: sequence too short");
  for (std::uint64_t n = 1; n <= nmax; ++n)
    if (detail::recurrence_residual(t.a, t.b, t.lambda, seq.terms, n) != 0) return false;
  return true;
}

/// Outcome of fitting: the exact rational solution from n = 1, 2, 3 (when the
/// system is nonsingular), how far it validates, and the integral triple if
/// the solution is integral and validates over the whole prefix.
struct TripleFit {
  std::optional<std::array<Rational, 3>> rational;  // (a, b, lambda)
  std::uint64_t validated_through = 0;              // last n at which the relation holds
  std::optional<RecurrenceTriple> triple;
};

inline TripleFit fit_triple_detailed(const IntegerSequence& seq) {
  const auto& u = seq.terms;
  if (u.size() < 5) throw std::invalid_argument("fit_triple: need at least u(0..4)");
  // Row n: [n(n+1) u(n), (n+1)^2 u(n+1), -u(n)] . (a, b, lambda) = -n^2 u(n-1)
  std::array<std::array<Rational, 4>, 3> m;
  for (int i = 0; i < 3; ++i) {
    const auto n = static_cast<std::uint64_t>(i + 1);
    const Int nn(n);
    m[i] = {Rational(nn * (nn + 1) * u[n]), Rational((nn + 1) * (nn + 1) * u[n + 1]), Rational(-u[n]),
            Rational(-nn * nn * u[n - 1])};
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int r = col; r < 3; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return {};
    std::swap(m[col], m[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::array<Rational, 3> sol{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
  TripleFit fit;
  fit.rational = sol;
  if (sol[1] == 0) return fit;
  for (std::uint64_t n = 1; n + 1 < u.size(); ++n) {
    if (detail::recurrence_residual(sol[0], sol[1], sol[2], u, n) != 0) break;
    fit.validated_through = n;
  }
  const bool integral = std::all_of(sol.begin(), sol.end(), [](const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
  });
  if (integral && fit.validated_through + 2 == u.size()) {
    fit.triple = RecurrenceTriple{boost::multiprecision::numerator(sol[0]), boost::multiprecision::numerator(sol[1]),
                                  boost::multiprecision::numerator(sol[2])};
  }
  return fit;
}

/// Integral triple reproducing every available term, or nullopt (NoFit).
inline std::optional<RecurrenceTriple> fit_triple(const IntegerSequence& seq) {
  return fit_triple_detailed(seq).triple;
}

}  // namespace cmf
