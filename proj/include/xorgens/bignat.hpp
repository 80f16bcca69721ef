#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace xorgens {

// Arbitrary-precision natural number. The largest value handled anywhere is
// 2^4096 - 1, so plain cpp_int is plenty; only a small interface is used:
// compare, subtract, shift, divide-with-remainder, modular multiply,
// bit-length.
using BigNat = boost::multiprecision::cpp_int;

// 2^n - 1.
BigNat pow2_minus_1(unsigned n);

BigNat bignat_from_decimal(const std::string& s);
std::string bignat_to_decimal(const BigNat& x);

// Number of bits in x (0 for x = 0).
unsigned bignat_bit_length(const BigNat& x);

// Strong-pseudoprime test, 64 rounds. Round bases are derived from a fixed
// internal seed, so the verdict is reproducible run to run. Rejects x < 2.
bool is_probable_prime(const BigNat& x);

}  // namespace xorgens
