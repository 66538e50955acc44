#pragma once

#include <array>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmf/arith.hpp"

namespace cmf {

/// The three imaginary quadratic rings: Z[i], Z[sqrt(-2)], Z[w] with
/// w = (1 + sqrt(-3))/2. An element is stored as x + y*t on the basis {1, t}.
enum class RingTag { gauss, sqrtm2, eisen };

inline const char* ring_name(RingTag r) {
  switch (r) {
    case RingTag::gauss: return "Z[i]";
    case RingTag::sqrtm2: return "Z[sqrt(-2)]";
    case RingTag::eisen: return "Z[w]";
  }
  return "?";
}

class QuadInt {
 public:
  explicit QuadInt(RingTag ring, Int x = 0, Int y = 0) : ring_(ring), x_(std::move(x)), y_(std::move(y)) {}

  static QuadInt one(RingTag ring) { return QuadInt(ring, 1, 0); }
  static QuadInt zero(RingTag ring) { return QuadInt(ring, 0, 0); }

  [[nodiscard]] RingTag ring() const { return ring_; }
  [[nodiscard]] const Int& x() const { return x_; }
  [[nodiscard]] const Int& y() const { return y_; }

  [[nodiscard]] bool is_zero() const { return x_ == 0 && y_ == 0; }
  [[nodiscard]] bool is_rational() const { return y_ == 0; }

  [[nodiscard]] Int norm() const {
    switch (ring_) {
      case RingTag::gauss: return x_ * x_ + y_ * y_;
      case RingTag::sqrtm2: return x_ * x_ + 2 * y_ * y_;
      case RingTag::eisen: return x_ * x_ + x_ * y_ + y_ * y_;
    }
    return 0;
  }

  // Galois conjugate. In Z[w], conj(w) = 1 - w.
  [[nodiscard]] QuadInt conj() const {
    if (ring_ == RingTag::eisen) return QuadInt(ring_, x_ + y_, -y_);
    return QuadInt(ring_, x_, -y_);
  }

  [[nodiscard]] QuadInt pow(std::uint64_t e) const {
    QuadInt result = one(ring_);
    QuadInt base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  friend QuadInt operator+(const QuadInt& a, const QuadInt& b) {
    check_same(a, b);
    return QuadInt(a.ring_, a.x_ + b.x_, a.y_ + b.y_);
  }
  friend QuadInt operator-(const QuadInt& a, const QuadInt& b) {
    check_same(a, b);
    return QuadInt(a.ring_, a.x_ - b.x_, a.y_ - b.y_);
  }
  friend QuadInt operator-(const QuadInt& a) { return QuadInt(a.ring_, -a.x_, -a.y_); }

  friend QuadInt operator*(const QuadInt& a, const QuadInt& b) {
    check_same(a, b);
    const Int ac = a.x_ * b.x_;
    const Int bd = a.y_ * b.y_;
    const Int cross = a.x_ * b.y_ + a.y_ * b.x_;
    switch (a.ring_) {
      case RingTag::gauss: return QuadInt(a.ring_, ac - bd, cross);
      case RingTag::sqrtm2: return QuadInt(a.ring_, ac - 2 * bd, cross);
      case RingTag::eisen: return QuadInt(a.ring_, ac - bd, cross + bd);  // w^2 = w - 1
    }
    return zero(a.ring_);
  }

  friend QuadInt operator*(const Int& n, const QuadInt& a) { return QuadInt(a.ring_, n * a.x_, n * a.y_); }

  friend bool operator==(const QuadInt& a, const QuadInt& b) {
    return a.ring_ == b.ring_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

  // Lexicographic on (ring, x, y); used for ordered containers only.
  friend bool operator<(const QuadInt& a, const QuadInt& b) {
    if (a.ring_ != b.ring_) return a.ring_ < b.ring_;
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
  }

  [[nodiscard]] std::string str() const {
    static constexpr std::array<const char*, 3> basis{"i", "sqrt(-2)", "w"};
    std::string s = x_.str();
    s += y_ < 0 ? "-" : "+";
    s += (y_ < 0 ? Int(-y_) : y_).str();
    s += basis[static_cast<std::size_t>(ring_)];
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadInt& a) { return os << a.str(); }

 private:
  static void check_same(const QuadInt& a, const QuadInt& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("QuadInt: ring mismatch");
  }

  RingTag ring_;
  Int x_;
  Int y_;
};

inline Int norm(const QuadInt& a) { return a.norm(); }
inline QuadInt conj(const QuadInt& a) { return a.conj(); }
inline QuadInt pow(const QuadInt& a, std::uint64_t e) { return a.pow(e); }

/// Unit group: the six powers of w, {+-1, +-i}, or {+-1}.
inline std::vector<QuadInt> units(RingTag ring) {
  switch (ring) {
    case RingTag::eisen:
      // 1, w, w^2 = w - 1, w^3 = -1, w^4 = -w, w^5 = 1 - w
      return {QuadInt(ring, 1, 0), QuadInt(ring, 0, 1),  QuadInt(ring, -1, 1),
              QuadInt(ring, -1, 0), QuadInt(ring, 0, -1), QuadInt(ring, 1, -1)};
    case RingTag::gauss:
      return {QuadInt(ring, 1, 0), QuadInt(ring, 0, 1), QuadInt(ring, -1, 0), QuadInt(ring, 0, -1)};
    case RingTag::sqrtm2:
      return {QuadInt(ring, 1, 0), QuadInt(ring, -1, 0)};
  }
  return {};
}

// Fundamental sector for the unit action. For Z[w] the complex point
// (x + y/2, y*sqrt(3)/2) has argument in [0, pi/3) iff x > 0 and y >= 0;
// for Z[i] argument in [0, pi/2) is the same test.
inline bool in_canonical_sector(const QuadInt& a) {
  switch (a.ring()) {
    case RingTag::eisen:
    case RingTag::gauss: return a.x() > 0 && a.y() >= 0;
    case RingTag::sqrtm2: return a.y() > 0 || (a.y() == 0 && a.x() > 0);
  }
  return false;
}

/// The unique associate of a (a != 0) in the fundamental sector; one
/// generator per principal ideal.
inline QuadInt canonical_associate(const QuadInt& a) {
  if (a.is_zero()) throw std::domain_error("canonical_associate: zero element");
  for (const QuadInt& u : units(a.ring())) {
    QuadInt b = u * a;
    if (in_canonical_sector(b)) return b;
  }
  throw std::logic_error("canonical_associate: no associate in sector");
}

}  // namespace cmf
