#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gbc/bigint.hpp"

namespace gbc {

// Seedable randomness source. Every protocol takes one of these explicitly;
// there is no global RNG. Raw 64-bit draws from mt19937_64 are fully
// specified by the standard, so seeded runs are byte-reproducible; the
// sampling helpers below avoid std distributions for the same reason.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, n), n > 0, by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    // Uniform in [lo, hi], inclusive.
    std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    bool bit() { return next_u64() & 1u; }

    std::vector<std::uint8_t> bytes(std::size_t n) {
        std::vector<std::uint8_t> out(n);
        std::size_t i = 0;
        while (i < n) {
            std::uint64_t v = next_u64();
            for (int b = 0; b < 8 && i < n; ++b, ++i) {
                out[i] = static_cast<std::uint8_t>(v & 0xff);
                v >>= 8;
            }
        }
        return out;
    }

    // Uniform in [0, 2^bits).
    BigInt big_bits(unsigned bits) {
        BigInt acc = 0;
        unsigned got = 0;
        while (got < bits) {
            unsigned take = bits - got >= 64 ? 64 : bits - got;
            std::uint64_t v = next_u64();
            if (take < 64) v &= (std::uint64_t(1) << take) - 1;
            acc <<= take;
            acc += bigint_from_u64(v);
            got += take;
        }
        return acc;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace gbc
