#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "xorgens/bignat.hpp"

namespace xorgens {

class FactorTable;

// Dense polynomial over GF(2), bit-packed little-endian by exponent:
// coefficient c_j lives at word j/64, bit j%64. Always canonical (no
// trailing zero words), so equality is word-sequence equality. The zero
// polynomial has no degree; degree() reports that as an empty optional
// rather than a sentinel number.
//
// Sized for degree-4096 work: squaring, reduction and gcd are schoolbook
// shift-xor, which is plenty at this scale and needs no carry-less-multiply
// hardware.
class Gf2Poly {
public:
    Gf2Poly() = default;  // zero polynomial

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly x() { return monomial(1); }
    static Gf2Poly monomial(std::size_t j);
    static Gf2Poly from_terms(std::initializer_list<std::size_t> exponents);
    static Gf2Poly from_words(std::vector<std::uint64_t> words);

    // Hex form: the coefficient bits read as one little-endian integer,
    // lowercase, no leading zeros ("0" for the zero polynomial).
    static Gf2Poly from_hex(const std::string& hex);
    std::string to_hex() const;

    // Debug form: exponents of nonzero terms, descending: "x^64 + x^17 + 1".
    std::string to_text() const;

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    std::optional<std::size_t> degree() const;
    // Degree of a known-nonzero polynomial.
    std::size_t degree_nonzero() const;

    bool coeff(std::size_t j) const;
    void set_coeff(std::size_t j, bool value);
    std::size_t weight() const;  // number of nonzero coefficients
    bool eval_at_one() const { return weight() & 1u; }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

    Gf2Poly& operator^=(const Gf2Poly& rhs);  // coefficientwise xor = add
    friend Gf2Poly operator^(Gf2Poly lhs, const Gf2Poly& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    Gf2Poly shifted_up(std::size_t k) const;  // * z^k

    void normalize();

private:
    std::vector<std::uint64_t> words_;
};

Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q);
Gf2Poly mul(const Gf2Poly& p, const Gf2Poly& q);
Gf2Poly square(const Gf2Poly& p);

// Remainder of p on division by m. m must be nonzero with degree >= 1.
Gf2Poly mod(const Gf2Poly& p, const Gf2Poly& m);
// Quotient and remainder; m nonzero.
struct Gf2DivMod {
    Gf2Poly quotient;
    Gf2Poly remainder;
};
Gf2DivMod divmod(const Gf2Poly& p, const Gf2Poly& m);

Gf2Poly mulmod(const Gf2Poly& p, const Gf2Poly& q, const Gf2Poly& m);
Gf2Poly squaremod(const Gf2Poly& p, const Gf2Poly& m);

// base^e mod m by square-and-multiply over the big exponent; e = 0 gives 1.
Gf2Poly modexp(const Gf2Poly& base, const BigNat& e, const Gf2Poly& m);

// Monic gcd (over GF(2) every nonzero polynomial is monic). Rejects (0, 0).
Gf2Poly gcd(Gf2Poly p, Gf2Poly q);

// Frobenius criterion: p of degree n is irreducible iff z^(2^n) = z mod p
// and gcd(z^(2^(n/q)) - z, p) = 1 for every prime q dividing n.
bool is_irreducible(const Gf2Poly& p);

// p of degree n is primitive iff it is irreducible and
// z^((2^n-1)/d) != 1 mod p for every distinct prime divisor d of 2^n - 1.
// The factor table must match n (checked).
bool is_primitive(const Gf2Poly& p, const FactorTable& factors);

}  // namespace xorgens
