#include "xorgens/gf2_poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <sstream>

#include "xorgens/errors.hpp"
#include "xorgens/factor_tables.hpp"

namespace xorgens {

namespace {

constexpr std::size_t kWordBits = 64;

// dst ^= src * z^k, word-granular with a bit offset.
void xor_shifted(std::vector<std::uint64_t>& dst,
                 const std::vector<std::uint64_t>& src, std::size_t k) {
    const std::size_t q = k / kWordBits;
    const unsigned j = static_cast<unsigned>(k % kWordBits);
    if (j == 0) {
        for (std::size_t t = 0; t < src.size(); ++t) dst[q + t] ^= src[t];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t t = 0; t < src.size(); ++t) {
        dst[q + t] ^= (src[t] << j) | carry;
        carry = src[t] >> (kWordBits - j);
    }
    if (carry) dst[q + src.size()] ^= carry;
}

std::size_t top_degree(const std::vector<std::uint64_t>& v) {
    // requires a nonzero vector in canonical form
    return (v.size() - 1) * kWordBits +
           (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(v.back())));
}

// Spread table for squaring: byte abcdefgh -> 16-bit a0b0c0d0e0f0g0h0.
constexpr std::array<std::uint16_t, 256> make_spread_table() {
    std::array<std::uint16_t, 256> t{};
    for (unsigned b = 0; b < 256; ++b) {
        std::uint16_t v = 0;
        for (unsigned i = 0; i < 8; ++i)
            if (b & (1u << i)) v |= static_cast<std::uint16_t>(1u << (2 * i));
        t[b] = v;
    }
    return t;
}
constexpr auto kSpread = make_spread_table();

void strip_trailing_zeros(std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Repeated reduction by a fixed modulus; keeps the 64 sub-word shifted
// copies of m so the inner loop only xors at word granularity.
class Reducer {
public:
    explicit Reducer(const Gf2Poly& m) : deg_(m.degree_nonzero()) {
        for (unsigned j = 0; j < kWordBits; ++j) {
            auto s = m.shifted_up(j);
            shifted_[j] = s.words();
        }
    }

    std::size_t degree() const { return deg_; }

    void reduce(std::vector<std::uint64_t>& v) const {
        std::size_t wi = v.size();
        while (wi > 0) {
            if (v[wi - 1] == 0) {
                --wi;
                continue;
            }
            const std::size_t i = (wi - 1) * kWordBits + (kWordBits - 1) -
                                  static_cast<std::size_t>(std::countl_zero(v[wi - 1]));
            if (i < deg_) break;
            const std::size_t shift = i - deg_;
            const std::size_t q = shift / kWordBits;
            const auto& s = shifted_[shift % kWordBits];
            for (std::size_t t = 0; t < s.size(); ++t) v[q + t] ^= s[t];
        }
        strip_trailing_zeros(v);
    }

private:
    std::size_t deg_;
    std::array<std::vector<std::uint64_t>, kWordBits> shifted_;
};

std::vector<std::uint64_t> raw_mul(const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t word = a[i];
        while (word) {
            const unsigned j = static_cast<unsigned>(std::countr_zero(word));
            word &= word - 1;
            xor_shifted(out, b, i * kWordBits + j);
        }
    }
    strip_trailing_zeros(out);
    return out;
}

std::vector<std::uint64_t> raw_square(const std::vector<std::uint64_t>& a) {
    std::vector<std::uint64_t> out(2 * a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t lo = 0, hi = 0;
        for (unsigned byte = 0; byte < 4; ++byte)
            lo |= static_cast<std::uint64_t>(kSpread[(a[i] >> (8 * byte)) & 0xff])
                  << (16 * byte);
        for (unsigned byte = 0; byte < 4; ++byte)
            hi |= static_cast<std::uint64_t>(kSpread[(a[i] >> (32 + 8 * byte)) & 0xff])
                  << (16 * byte);
        out[2 * i] = lo;
        out[2 * i + 1] = hi;
    }
    strip_trailing_zeros(out);
    return out;
}

void require_modulus(const Gf2Poly& m) {
    if (m.is_zero() || m.degree_nonzero() < 1)
        throw ArgumentError("modulus must be nonzero with degree >= 1");
}

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Gf2Poly Gf2Poly::monomial(std::size_t j) {
    Gf2Poly p;
    p.words_.assign(j / kWordBits + 1, 0);
    p.words_[j / kWordBits] = 1ULL << (j % kWordBits);
    return p;
}

Gf2Poly Gf2Poly::from_terms(std::initializer_list<std::size_t> exponents) {
    Gf2Poly p;
    for (std::size_t e : exponents) p.set_coeff(e, !p.coeff(e));
    return p;
}

Gf2Poly Gf2Poly::from_words(std::vector<std::uint64_t> words) {
    Gf2Poly p;
    p.words_ = std::move(words);
    p.normalize();
    return p;
}

Gf2Poly Gf2Poly::from_hex(const std::string& hex) {
    if (hex.empty()) throw ArgumentError("empty hex polynomial");
    Gf2Poly p;
    for (char ch : hex) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        unsigned digit;
        if (c >= '0' && c <= '9') digit = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') digit = static_cast<unsigned>(c - 'a' + 10);
        else throw ArgumentError(std::string("bad hex digit '") + ch + "'");
        // shift the accumulated value up one nibble
        std::uint64_t carry = digit;
        for (auto& w : p.words_) {
            const std::uint64_t next = w >> 60;
            w = (w << 4) | carry;
            carry = next;
        }
        if (carry) p.words_.push_back(carry);
    }
    p.normalize();
    return p;
}

std::string Gf2Poly::to_hex() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    out << std::hex;
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (i == words_.size() - 1) {
            out << words_[i];
        } else {
            out.width(16);
            out.fill('0');
            out << words_[i];
        }
    }
    return out.str();
}

std::string Gf2Poly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = words_.size(); i-- > 0;) {
        std::uint64_t word = words_[i];
        while (word) {
            const unsigned top = kWordBits - 1 - static_cast<unsigned>(std::countl_zero(word));
            word &= ~(1ULL << top);
            const std::size_t e = i * kWordBits + top;
            if (!first) out << " + ";
            first = false;
            if (e == 0) out << "1";
            else if (e == 1) out << "x";
            else out << "x^" << e;
        }
    }
    return out.str();
}

std::optional<std::size_t> Gf2Poly::degree() const {
    if (is_zero()) return std::nullopt;
    return top_degree(words_);
}

std::size_t Gf2Poly::degree_nonzero() const {
    return top_degree(words_);
}

bool Gf2Poly::coeff(std::size_t j) const {
    const std::size_t q = j / kWordBits;
    if (q >= words_.size()) return false;
    return (words_[q] >> (j % kWordBits)) & 1u;
}

void Gf2Poly::set_coeff(std::size_t j, bool value) {
    const std::size_t q = j / kWordBits;
    if (q >= words_.size()) {
        if (!value) return;
        words_.resize(q + 1, 0);
    }
    if (value) words_[q] |= 1ULL << (j % kWordBits);
    else words_[q] &= ~(1ULL << (j % kWordBits));
    normalize();
}

std::size_t Gf2Poly::weight() const {
    std::size_t count = 0;
    for (std::uint64_t w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

Gf2Poly& Gf2Poly::operator^=(const Gf2Poly& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    normalize();
    return *this;
}

Gf2Poly Gf2Poly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<std::uint64_t> out(words_.size() + k / kWordBits + 1, 0);
    xor_shifted(out, words_, k);
    strip_trailing_zeros(out);
    Gf2Poly p;
    p.words_ = std::move(out);
    return p;
}

void Gf2Poly::normalize() {
    strip_trailing_zeros(words_);
}

Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q) {
    return p ^ q;
}

Gf2Poly mul(const Gf2Poly& p, const Gf2Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    // scan the operand with fewer set bits
    const bool swap = p.weight() > q.weight();
    const auto& a = swap ? q.words() : p.words();
    const auto& b = swap ? p.words() : q.words();
    return Gf2Poly::from_words(raw_mul(a, b));
}

Gf2Poly square(const Gf2Poly& p) {
    if (p.is_zero()) return {};
    return Gf2Poly::from_words(raw_square(p.words()));
}

Gf2Poly mod(const Gf2Poly& p, const Gf2Poly& m) {
    require_modulus(m);
    if (p.is_zero()) return {};
    if (p.degree_nonzero() < m.degree_nonzero()) return p;
    Reducer red(m);
    auto v = p.words();
    red.reduce(v);
    return Gf2Poly::from_words(std::move(v));
}

Gf2DivMod divmod(const Gf2Poly& p, const Gf2Poly& m) {
    if (m.is_zero()) throw ArgumentError("division by the zero polynomial");
    Gf2DivMod out;
    if (p.is_zero()) return out;
    const std::size_t dm = m.degree_nonzero();
    auto rem = p.words();
    std::vector<std::uint64_t> quot;
    while (true) {
        strip_trailing_zeros(rem);
        if (rem.empty()) break;
        const std::size_t dr = top_degree(rem);
        if (dr < dm) break;
        const std::size_t k = dr - dm;
        if (quot.size() <= k / kWordBits) quot.resize(k / kWordBits + 1, 0);
        quot[k / kWordBits] ^= 1ULL << (k % kWordBits);
        xor_shifted(rem, m.words(), k);
    }
    out.quotient = Gf2Poly::from_words(std::move(quot));
    out.remainder = Gf2Poly::from_words(std::move(rem));
    return out;
}

Gf2Poly mulmod(const Gf2Poly& p, const Gf2Poly& q, const Gf2Poly& m) {
    require_modulus(m);
    return mod(mul(p, q), m);
}

Gf2Poly squaremod(const Gf2Poly& p, const Gf2Poly& m) {
    require_modulus(m);
    return mod(square(p), m);
}

Gf2Poly modexp(const Gf2Poly& base, const BigNat& e, const Gf2Poly& m) {
    require_modulus(m);
    if (e == 0) return mod(Gf2Poly::one(), m);
    const Reducer red(m);
    auto step = [&red](std::vector<std::uint64_t> v) {
        red.reduce(v);
        return Gf2Poly::from_words(std::move(v));
    };
    const Gf2Poly b = step(base.words());
    Gf2Poly result = b;
    for (unsigned i = bignat_bit_length(e) - 1; i-- > 0;) {
        result = step(raw_square(result.words()));
        if (boost::multiprecision::bit_test(e, i))
            result = result.is_zero() || b.is_zero() ? Gf2Poly{}
                                                     : step(raw_mul(result.words(), b.words()));
    }
    return result;
}

Gf2Poly gcd(Gf2Poly p, Gf2Poly q) {
    if (p.is_zero() && q.is_zero())
        throw ArgumentError("gcd(0, 0) is undefined");
    while (!q.is_zero()) {
        if (q.degree_nonzero() == 0) return Gf2Poly::one();
        Gf2Poly r = mod(p, q);
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

bool is_irreducible(const Gf2Poly& p) {
    const auto deg = p.degree();
    if (!deg || *deg < 1)
        throw ArgumentError("irreducibility is defined for degree >= 1");
    const std::size_t n = *deg;

    const Gf2Poly z = Gf2Poly::x();
    const Gf2Poly z_mod = mod(z, p);

    std::vector<std::uint32_t> qs = prime_divisors(static_cast<std::uint32_t>(n));
    Reducer red(p);
    auto sq = [&red](const Gf2Poly& v) {
        auto w = raw_square(v.words());
        red.reduce(w);
        return Gf2Poly::from_words(std::move(w));
    };

    Gf2Poly u = z_mod;  // z^(2^k) mod p
    for (std::size_t k = 1; k <= n; ++k) {
        u = sq(u);
        for (std::uint32_t q : qs) {
            if (k == n / q) {
                const Gf2Poly diff = u ^ z_mod;
                if (diff.is_zero()) return false;
                if (!gcd(diff, p).is_one()) return false;
            }
        }
    }
    return u == z_mod;
}

bool is_primitive(const Gf2Poly& p, const FactorTable& factors) {
    const auto deg = p.degree();
    if (!deg || *deg < 1)
        throw ArgumentError("primitivity is defined for degree >= 1");
    const std::size_t n = *deg;
    if (factors.n() != n)
        throw IntegrityError("factor table is for n=" + std::to_string(factors.n()) +
                             ", polynomial has degree " + std::to_string(n));

    // z must be a unit mod p; a zero constant term rules that out (and for
    // n >= 2 already implies reducibility).
    if (!p.coeff(0)) return false;
    if (!is_irreducible(p)) return false;

    const Gf2Poly z = Gf2Poly::x();
    for (const BigNat& d : factors.distinct_primes()) {
        const BigNat e = factors.modulus() / d;
        if (modexp(z, e, p).is_one()) return false;
    }
    return true;
}

}  // namespace xorgens
