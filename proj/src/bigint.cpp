#include "edval/bigint.hpp"

#include "edval/error.hpp"

namespace edval {

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int gcd(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  while (y != 0) {
    Int r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Int ipow(const Int& base, unsigned exp) {
  Int result = 1, b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Int floor_mod(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += b;
  return r;
}

Int floor_div(const Int& a, const Int& b) { return (a - floor_mod(a, b)) / b; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

unsigned p_valuation(Int a, std::uint64_t p) {
  unsigned e = 0;
  while (a != 0 && a % p == 0) {
    a /= p;
    ++e;
  }
  return e;
}

bool prime_power(std::uint64_t n, std::uint64_t& p, unsigned& e) {
  if (n < 2) return false;
  std::uint64_t q = 2;
  while (q * q <= n && n % q != 0) ++q;
  if (n % q != 0) q = n;
  unsigned count = 0;
  while (n % q == 0) {
    n /= q;
    ++count;
  }
  if (n != 1) return false;
  p = q;
  e = count;
  return true;
}

std::string to_string(const Int& a) { return a.str(); }

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected integer, got '" + std::string(text) + "'");
  Int value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw ParseError("expected integer, got '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Int(-value) : value;
}

}  // namespace edval
