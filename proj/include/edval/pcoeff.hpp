#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "edval/bigint.hpp"

namespace edval {

/// An element num / p^exp of Q_p/Z_p, kept in canonical form:
/// 0 <= num < p^exp, p does not divide a nonzero num, and zero is 0/p^0.
class PCoeff {
 public:
  /// Canonical zero of Q_p/Z_p. Throws ContractError if p is not prime.
  explicit PCoeff(std::uint64_t p);

  /// Reduces num / p^exp modulo 1. Negative numerators are shifted into range.
  static PCoeff normalize(std::uint64_t p, const Int& num, unsigned exp);
  static PCoeff unit_fraction(std::uint64_t p, unsigned exp) { return normalize(p, 1, exp); }

  std::uint64_t p() const { return p_; }
  const Int& num() const { return num_; }
  unsigned exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  /// p^exp as an integer.
  Int denominator() const;
  /// Smallest p-power m with m * a = 0 (1 for zero).
  Int order() const { return denominator(); }

  PCoeff operator-() const;
  PCoeff& operator+=(const PCoeff& other);
  PCoeff& operator-=(const PCoeff& other);

  friend PCoeff operator+(PCoeff a, const PCoeff& b) { return a += b; }
  friend PCoeff operator-(PCoeff a, const PCoeff& b) { return a -= b; }
  friend PCoeff operator*(const Int& m, const PCoeff& a);
  friend bool operator==(const PCoeff& a, const PCoeff& b) = default;

  /// "num/den" with den = p^exp written out, or "0".
  std::string str() const;
  /// Inverse of str(); den must be a power of p.
  static PCoeff parse(std::uint64_t p, std::string_view text);

 private:
  PCoeff(std::uint64_t p, Int num, unsigned exp) : p_(p), num_(std::move(num)), exp_(exp) {}

  std::uint64_t p_;
  Int num_;
  unsigned exp_ = 0;
};

PCoeff pc_normalize(std::uint64_t p, const Int& num, unsigned exp);
PCoeff pc_add(const PCoeff& a, const PCoeff& b);
PCoeff pc_scale(const Int& m, const PCoeff& a);
Int pc_order(const PCoeff& a);

}  // namespace edval
