#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "xorgens/bignat.hpp"

namespace xorgens {

// Verified prime factorization of 2^n - 1. Construction checks both
// invariants (exact product and primality of every factor); a FactorTable
// that exists is trustworthy.
class FactorTable {
public:
    struct Entry {
        BigNat prime;
        std::uint32_t multiplicity;
    };

    // Validates and adopts the entries. Throws IntegrityError if the product
    // does not reconstruct 2^n - 1, a factor fails the primality test, the
    // primes are not strictly increasing, or a multiplicity is zero.
    static FactorTable checked(unsigned n, std::vector<Entry> entries);

    unsigned n() const { return n_; }
    const std::vector<Entry>& entries() const { return entries_; }

    // 2^n - 1.
    const BigNat& modulus() const { return modulus_; }

    // Distinct primes, ascending.
    std::vector<BigNat> distinct_primes() const;

private:
    FactorTable() = default;
    unsigned n_ = 0;
    std::vector<Entry> entries_;
    BigNat modulus_;
};

// Exponents with shipped factor data. 16 and 48 back the toy search and
// period oracles; powers of two from 64 up are the generator exponents.
const std::vector<unsigned>& supported_exponents();

// Shipped, validated table for 2^n - 1. Throws UnlistedError for other n.
// Tables are validated once and cached; the returned reference stays valid
// for the life of the process.
const FactorTable& load_table(unsigned n);

// Parse factor data in the text format `n: p1^e1 p2^e2 ...` (decimal primes,
// caret and exponent optional when the multiplicity is 1, `#` comments).
// Every parsed table is validated. Used for the CLI --factors override.
std::vector<FactorTable> parse_factor_stream(std::istream& in);

// Table for n from an override list, falling back to the shipped data.
const FactorTable& table_for(unsigned n, const std::vector<FactorTable>& overrides);

// (2^n - 1) / d, exact. Throws ArgumentError if d does not divide 2^n - 1.
BigNat cofactor(unsigned n, const BigNat& d);

}  // namespace xorgens
