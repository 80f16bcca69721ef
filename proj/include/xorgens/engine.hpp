#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xorgens/param_db.hpp"

namespace xorgens {

// x ^ (x << t) and x ^ (x >> t) on a w-bit word held in the low bits of a
// uint64_t. These are the row-vector actions x(I+L^t) and x(I+R^t).
// Requires 1 <= t < w and x < 2^w.
std::uint64_t xls(std::uint64_t x, std::uint32_t t, std::uint32_t w);
std::uint64_t xrs(std::uint64_t x, std::uint32_t t, std::uint32_t w);

// Odd constant nearest 2^(w-1)*(sqrt(5)-1), and the output shift w/2.
// Supported word lengths: 32 and 64.
std::uint64_t omega_for(std::uint32_t w);
std::uint32_t gamma_for(std::uint32_t w);

// The linear part of the generator: a circular array of r w-bit words
// advanced by
//   x[k] = xrs(xls(x[k-r], a), b) ^ xrs(xls(x[k-s], c), d).
// Pure GF(2) machinery; any 2 <= w <= 64 works, which the parameter search
// uses for toy word lengths. Shift counts are validated at construction.
class RawEngine {
public:
    // State is injected directly; the array must hold exactly r words,
    // each < 2^w. Used by analysis, search and the linearity probes.
    RawEngine(const Params& params, std::span<const std::uint64_t> state);

    std::uint64_t step();

    const Params& params() const { return params_; }
    std::uint64_t word_mask() const { return mask_; }

    // Oldest-to-newest snapshot (x[k-r] .. x[k-1]), independent of the
    // internal cursor; two engines in the same phase compare equal.
    std::vector<std::uint64_t> state() const;

private:
    Params params_;
    std::vector<std::uint64_t> x_;
    std::uint32_t idx_ = 0;  // position of x[k-r]
    std::uint64_t mask_ = 0;
};

// Full generator: the raw recurrence combined with a Weyl sequence
//   weyl += omega (mod 2^w);  out = (weyl ^ (weyl >> gamma)) + x[k] (mod 2^w).
// The Weyl stage is updated exactly once per output word. Requires
// w in {32, 64}. Instances are independent; no global state.
class Generator {
public:
    // Deterministic seeding: any 64-bit seed is valid and the seeded x
    // array is never all-zero.
    Generator(const Params& params, std::uint64_t seed);

    // Direct state injection (diagnostics and tests).
    Generator(const Params& params, std::span<const std::uint64_t> state,
              std::uint64_t weyl);

    std::uint64_t next_word();

    // Uniform real in (0, 1): the top 53 bits y of generator output mapped
    // to (y + 1/2) * 2^-53. One word for w = 64, two words (high first)
    // for w = 32.
    double next_real();

    const Params& params() const { return raw_.params(); }
    const RawEngine& raw() const { return raw_; }
    std::uint64_t weyl() const { return weyl_; }

private:
    RawEngine raw_;
    std::uint64_t weyl_ = 0;
    std::uint64_t omega_ = 0;
    std::uint32_t gamma_ = 0;
};

// The fixed seed expander behind Generator(params, seed): a 64-bit
// shift/xor register (shifts 13, 7, 17) with a Weyl word added in, so
// related seeds do not produce GF(2)-related states. Exposed for tests.
class SeedExpander {
public:
    explicit SeedExpander(std::uint64_t seed);
    std::uint64_t next();
    std::uint64_t weyl_word() const { return t_; }

private:
    std::uint64_t u_;
    std::uint64_t t_ = 0;
};

}  // namespace xorgens
