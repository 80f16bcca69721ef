#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "xorgens/gf2_poly.hpp"
#include "xorgens/param_db.hpp"

namespace xorgens {

class FactorTable;

enum class Primitivity {
    kPrimitive,
    kNotPrimitive,    // full degree but reducible or short order
    kNotFullDegree,   // every recovery attempt stayed below degree n
    kUnchecked,       // full degree; no factor table supplied
};

const char* to_string(Primitivity v);

// Recovered characteristic polynomial of a parameter set. `poly` is in the
// ascending convention: sum_j c_j x[k+j] = 0 along the word sequence.
struct CharPolyReport {
    Params params;
    Gf2Poly poly;
    std::size_t degree = 0;
    std::size_t weight = 0;
    Primitivity primitive = Primitivity::kNotFullDegree;
    double elapsed_seconds = 0.0;
};

// Minimal connection polynomial C of a bit sequence, canonical convention:
// C(0) = 1 and sum_j C_j s[k-j] = 0 for all valid k. The zero sequence
// gives C = 1.
struct ConnectionPoly {
    Gf2Poly poly;
    std::size_t length = 0;  // LFSR length L; deg(poly) <= L
};
ConnectionPoly berlekamp_massey(const std::vector<std::uint8_t>& bits);

// Recover the characteristic polynomial of the recurrence from output bits.
// Seeds the raw recurrence from fixed internal constants, collects
// 2n + 64 bits of one bit position, and runs Berlekamp-Massey; if the
// recovered degree falls short of n, up to 7 further attempts use
// independent states and bit positions. Degree n means the minimal
// polynomial is the characteristic polynomial, so weight and (with a
// matching factor table) primitivity are decided; anything less is
// reported as not-full-degree, which already rules out a full period.
// The companion matrix is never materialized.
CharPolyReport char_poly(const Params& params, const FactorTable* factors);

// char_poly for a stored row, checked against the row: weight must equal
// the stored W and the verdict must be primitive. Mismatches throw
// VerificationError naming both values.
CharPolyReport verify_row(std::uint32_t w, std::uint32_t n,
                          const FactorTable* factors_override = nullptr);

}  // namespace xorgens
