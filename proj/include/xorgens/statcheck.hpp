#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>

#include "xorgens/param_db.hpp"

namespace xorgens {

// Checks the sparse-matrix weight bounds on random words: one application
// of x(I+L^t) or x(I+R^t) at most doubles the Hamming weight, and the
// composed transform at most quadruples it. Both shift pairs (a,b) and
// (c,d) are scanned. Returns the number of violations; the bounds are
// theorems, so anything nonzero is an implementation bug.
std::uint64_t hamming_bound_scan(const Params& params, std::uint64_t trials);

struct LinearityProbe {
    bool raw_linear = false;
    bool combined_linear = false;
};

// Runs three generators whose injected x arrays satisfy S'' = S ^ S' and
// reports whether xor-additivity of the outputs holds over `steps` steps,
// once for the raw recurrence and once for the Weyl-combined output
// (identical Weyl words across the three). The raw path is linear over
// GF(2); carry propagation in the combined path is expected to break it.
LinearityProbe linearity_probe(const Params& params, std::uint64_t steps);

// Exact P(popcount(x) <= threshold) for uniform w-bit words, from the
// binomial tail.
double low_weight_probability(std::uint32_t w, std::uint32_t threshold);

struct LowWeightReport {
    std::uint32_t threshold = 0;
    std::uint64_t samples = 0;
    std::uint64_t events = 0;           // popcount(x[k]) <= threshold
    std::uint64_t follow_ups_r = 0;     // event at k and at k + r
    std::uint64_t follow_ups_s = 0;     // event at k and at k + s
    double expected_rate = 0.0;         // exact binomial tail
    double observed_rate = 0.0;
    double rate_after_lag_r = 0.0;      // conditional on an event r back
    double rate_after_lag_s = 0.0;
    bool insufficient_samples = false;  // expected events < 1
};

// Measures how often low-weight words recur at lags r and s in the raw
// sequence versus the unconditional rate. A diagnostic measurement, not a
// pass/fail test. threshold 0 means the default w/8.
LowWeightReport low_weight_lag_correlation(const Params& params,
                                           std::uint64_t samples,
                                           std::uint32_t threshold = 0);

// z-score of the ones proportion over `bits` combined-output bits.
// Rejects bits = 0.
double monobit(const Params& params, std::uint64_t bits);

// Same statistic over an arbitrary word source (w bits per word); lets the
// degenerate-stream behaviour be tested directly.
double monobit_stream(const std::function<std::uint64_t()>& next_word,
                      std::uint32_t w, std::uint64_t bits);

// Runs the full diagnostic suite over the stored rows and prints a table.
// Returns true iff every checked property held.
bool run_selftest(std::ostream& out, bool quick);

}  // namespace xorgens
