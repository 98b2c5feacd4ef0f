#pragma once

#include <cstdint>
#include <vector>

#include "ringtrace/errors.hpp"

namespace ringtrace {

// Exponent vector of a monomial; length is fixed per ambient ring.
// Entries are machine integers with checked arithmetic.
using Expo = std::vector<int32_t>;

Expo expo_mul(const Expo& a, const Expo& b);
Expo expo_div(const Expo& a, const Expo& b);  // requires expo_divides(b, a)
bool expo_divides(const Expo& a, const Expo& b);  // a | b componentwise
Expo expo_lcm(const Expo& a, const Expo& b);
Expo expo_gcd(const Expo& a, const Expo& b);
bool expo_coprime(const Expo& a, const Expo& b);
bool expo_is_zero(const Expo& a);
int64_t expo_total(const Expo& a);
int64_t expo_wdeg(const Expo& a, const std::vector<int64_t>& weights);
size_t expo_hash(const Expo& a);

}  // namespace ringtrace
