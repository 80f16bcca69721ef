#pragma once

#include <cstdint>

namespace xorgens::detail {

// splitmix64: the stock 64-bit mixer, used wherever the artifact needs an
// internal deterministic word stream (primality bases, probe inputs,
// analysis seeding). Unrelated to the generator under study.
struct SplitMix64 {
    std::uint64_t state;

    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace xorgens::detail
