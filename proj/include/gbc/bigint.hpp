#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gbc/errors.hpp"

namespace gbc {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(); }

inline BigInt bigint_from_decimal(const std::string& s) {
    if (s.empty()) throw MalformedInput("empty integer literal");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw MalformedInput("bare sign is not an integer");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw MalformedInput("bad integer literal: " + s);
    return BigInt(s, 10);
}

inline BigInt bigint_from_u64(std::uint64_t v) {
    static_assert(sizeof(unsigned long) == 8, "expects LP64");
    return BigInt(static_cast<unsigned long>(v));
}

inline BigInt bigint_from_i64(std::int64_t v) {
    return BigInt(static_cast<long>(v));
}

// Euclidean remainder in [0, m), m > 0.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace gbc
