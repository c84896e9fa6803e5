#include "edval/pcoeff.hpp"

#include "edval/error.hpp"

namespace edval {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw ContractError("non-prime modulus " + std::to_string(p));
}

}  // namespace

PCoeff::PCoeff(std::uint64_t p) : p_(p), num_(0), exp_(0) { require_prime(p); }

PCoeff PCoeff::normalize(std::uint64_t p, const Int& num, unsigned exp) {
  require_prime(p);
  Int den = ipow(Int(p), exp);
  Int n = floor_mod(num, den);
  while (exp > 0 && n % p == 0) {
    n /= p;
    den /= p;
    --exp;
  }
  if (n == 0) exp = 0;
  return PCoeff(p, std::move(n), exp);
}

Int PCoeff::denominator() const { return ipow(Int(p_), exp_); }

PCoeff PCoeff::operator-() const {
  if (is_zero()) return *this;
  return PCoeff(p_, denominator() - num_, exp_);
}

PCoeff& PCoeff::operator+=(const PCoeff& other) {
  if (other.p_ != p_) {
    throw ContractError("mismatched primes " + std::to_string(p_) + " and " +
                        std::to_string(other.p_));
  }
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  unsigned e = std::max(exp_, other.exp_);
  Int sum = num_ * ipow(Int(p_), e - exp_) + other.num_ * ipow(Int(p_), e - other.exp_);
  return *this = normalize(p_, sum, e);
}

PCoeff& PCoeff::operator-=(const PCoeff& other) { return *this += -other; }

PCoeff operator*(const Int& m, const PCoeff& a) {
  if (a.is_zero()) return a;
  return PCoeff::normalize(a.p_, m * a.num_, a.exp_);
}

std::string PCoeff::str() const {
  if (is_zero()) return "0";
  return to_string(num_) + "/" + to_string(denominator());
}

PCoeff PCoeff::parse(std::uint64_t p, std::string_view text) {
  require_prime(p);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    Int value = parse_int(text);
    return normalize(p, value, 0);
  }
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw ParseError("denominator must be positive in '" + std::string(text) + "'");
  unsigned exp = 0;
  Int rest = den;
  while (rest % p == 0) {
    rest /= p;
    ++exp;
  }
  if (rest != 1) {
    throw ParseError("denominator of '" + std::string(text) + "' is not a power of " +
                     std::to_string(p));
  }
  return normalize(p, num, exp);
}

PCoeff pc_normalize(std::uint64_t p, const Int& num, unsigned exp) {
  return PCoeff::normalize(p, num, exp);
}

PCoeff pc_add(const PCoeff& a, const PCoeff& b) { return a + b; }

PCoeff pc_scale(const Int& m, const PCoeff& a) { return m * a; }

Int pc_order(const PCoeff& a) { return a.order(); }

}  // namespace edval
