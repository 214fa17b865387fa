#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace nlsnf {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline int sign_of(const BigInt& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline int sign_of(const Rat& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// binomial(a, 2) for possibly negative a: a*(a-1)/2
inline BigInt binom2(const BigInt& a) { return a * (a - 1) / 2; }

inline BigInt big_pow(BigInt base, unsigned e) {
    BigInt r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// FNV-1a over a byte string; used for content hashes in manifests.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a_hex(const std::string& s) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a(s);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace nlsnf
