#include "ringtrace/monomial.hpp"

#include <limits>

namespace ringtrace {

namespace {
void check_len(const Expo& a, const Expo& b) {
    if (a.size() != b.size())
        throw InputError("exponent vector length mismatch");
}
}  // namespace

Expo expo_mul(const Expo& a, const Expo& b) {
    check_len(a, b);
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = int64_t(a[i]) + int64_t(b[i]);
        if (s > std::numeric_limits<int32_t>::max())
            throw ResourceError("exponent overflow in monomial product");
        r[i] = int32_t(s);
    }
    return r;
}

Expo expo_div(const Expo& a, const Expo& b) {
    check_len(a, b);
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i])
            throw InternalError("monomial quotient would have a negative exponent");
        r[i] = a[i] - b[i];
    }
    return r;
}

bool expo_divides(const Expo& a, const Expo& b) {
    check_len(a, b);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
    check_len(a, b);
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Expo expo_gcd(const Expo& a, const Expo& b) {
    check_len(a, b);
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool expo_coprime(const Expo& a, const Expo& b) {
    check_len(a, b);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

bool expo_is_zero(const Expo& a) {
    for (int32_t e : a)
        if (e != 0) return false;
    return true;
}

int64_t expo_total(const Expo& a) {
    int64_t d = 0;
    for (int32_t e : a) d += e;
    return d;
}

int64_t expo_wdeg(const Expo& a, const std::vector<int64_t>& weights) {
    int64_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += weights[i] * int64_t(a[i]);
    return d;
}

size_t expo_hash(const Expo& a) {
    size_t h = 1469598103934665603ull;
    for (int32_t e : a) {
        h ^= size_t(uint32_t(e));
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace ringtrace
