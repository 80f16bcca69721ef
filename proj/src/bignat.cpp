#include "xorgens/bignat.hpp"

#include "xorgens/detail/splitmix.hpp"
#include "xorgens/errors.hpp"

namespace xorgens {

namespace {

// Fixed seed for the primality round bases; results must be identical
// between runs and platforms.
constexpr std::uint64_t kPrimalityBaseSeed = 0xb5ad4eceda1ce2a9ULL;
constexpr int kPrimalityRounds = 64;  // error < 4^-64 = 2^-128

// Uniform value in [0, bound) assembled from the word stream.
BigNat draw_below(detail::SplitMix64& rng, const BigNat& bound) {
    const unsigned bits = bignat_bit_length(bound);
    const unsigned words = (bits + 63) / 64;
    for (;;) {
        BigNat v = 0;
        for (unsigned i = 0; i < words; ++i) {
            v <<= 64;
            v |= rng.next();
        }
        v >>= (words * 64 - bits);
        if (v < bound) return v;
    }
}

// One strong-pseudoprime round: x - 1 = 2^s * d with d odd.
bool strong_round(const BigNat& x, const BigNat& base, const BigNat& d, unsigned s) {
    BigNat y = boost::multiprecision::powm(base, d, x);
    if (y == 1 || y == x - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        y = (y * y) % x;
        if (y == x - 1) return true;
        if (y == 1) return false;
    }
    return false;
}

}  // namespace

BigNat pow2_minus_1(unsigned n) {
    return (BigNat(1) << n) - 1;
}

BigNat bignat_from_decimal(const std::string& s) {
    if (s.empty()) throw ArgumentError("empty decimal string");
    for (char ch : s) {
        if (ch < '0' || ch > '9')
            throw ArgumentError("bad decimal digit in \"" + s + "\"");
    }
    return BigNat(s);
}

std::string bignat_to_decimal(const BigNat& x) {
    return x.str();
}

unsigned bignat_bit_length(const BigNat& x) {
    if (x == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
}

bool is_probable_prime(const BigNat& x) {
    if (x < 2) throw ArgumentError("is_probable_prime requires x >= 2");
    if (x == 2 || x == 3) return true;
    if ((x & 1) == 0) return false;

    BigNat d = x - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }

    detail::SplitMix64 rng(kPrimalityBaseSeed);
    const BigNat span = x - 3;  // bases drawn from [2, x-2]
    for (int round = 0; round < kPrimalityRounds; ++round) {
        const BigNat base = span == 0 ? BigNat(2) : BigNat(2 + draw_below(rng, span));
        if (!strong_round(x, base, d, s)) return false;
    }
    return true;
}

}  // namespace xorgens
