#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace edval {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);
Int ipow(const Int& base, unsigned exp);

// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

// Floor division and matching nonnegative remainder for b > 0.
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

bool is_prime(std::uint64_t n);

// Largest e with p^e | a; a must be nonzero.
unsigned p_valuation(Int a, std::uint64_t p);

// If n = p^e with p prime and e >= 1, stores p, e and returns true.
bool prime_power(std::uint64_t n, std::uint64_t& p, unsigned& e);

std::string to_string(const Int& a);
Int parse_int(std::string_view text);

}  // namespace edval
