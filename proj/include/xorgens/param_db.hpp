#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xorgens {

// One parameter set of the generator family: word length w, state length r
// (so n = r*w state bits), second lag s, and the four shift counts.
struct Params {
    std::uint32_t w = 0;
    std::uint32_t r = 0;
    std::uint32_t s = 0;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t c = 0;
    std::uint32_t d = 0;
    // Expected weight of the characteristic polynomial; absent for
    // unverified candidates.
    std::optional<std::uint32_t> weight;

    std::uint32_t n() const { return r * w; }
    std::uint32_t delta() const;  // min(a, b, c, d)

    friend bool operator==(const Params&, const Params&) = default;
};

// One structural violation; `criterion` names the selection rule that
// failed ("criterion-1" .. "criterion-4" for the shift rules, "lags" /
// "delta" for the structural ones).
struct Violation {
    std::string criterion;
    std::string detail;
};

// Empty iff p satisfies every structural invariant:
//   lags:        0 < s < r, gcd(r, s) = 1
//   criterion-1: a + b <= w and c + d <= w
//   criterion-2: gcd(a, b) = 1 and gcd(c, d) = 1
//   criterion-3: a >= b
//   criterion-4: c <= d
//   delta:       min(a, b, c, d) >= 1
// Violations are data, not errors: the search uses them to report why
// candidates die.
std::vector<Violation> validate(const Params& p);

// The verified parameter rows, all (w, n) combinations with w in {32, 64}
// and n a power of two from 2w up to 4096.
const std::vector<Params>& all_rows();

// Exact stored row for (w, n). Throws UnlistedError for unlisted pairs.
const Params& lookup(std::uint32_t w, std::uint32_t n);
const Params* find_row(std::uint32_t w, std::uint32_t n);  // nullptr if unlisted

}  // namespace xorgens
