#include <doctest.h>

#include "oracles.hpp"
#include "xorgens/detail/splitmix.hpp"
#include "xorgens/errors.hpp"
#include "xorgens/factor_tables.hpp"
#include "xorgens/gf2_poly.hpp"

using namespace xorgens;

namespace {

Gf2Poly random_poly(detail::SplitMix64& rng, std::size_t max_degree) {
    const std::size_t words = max_degree / 64 + 1;
    std::vector<std::uint64_t> v(words);
    for (auto& w : v) w = rng.next();
    const std::size_t top = max_degree % 64;
    if (top != 63) v.back() &= (2ULL << top) - 1;
    return Gf2Poly::from_words(std::move(v));
}

}  // namespace

TEST_CASE("addition is coefficientwise xor") {
    const auto p = Gf2Poly::from_terms({2, 0});   // z^2+1
    const auto q = Gf2Poly::from_terms({1, 0});   // z+1
    const auto r = Gf2Poly::from_terms({2, 1});   // z^2+z

    CHECK(add(p, p).is_zero());
    CHECK(add(p, Gf2Poly::zero()) == p);
    CHECK(add(q, r) == Gf2Poly::from_terms({2, 0}));
}

TEST_CASE("mulmod basics") {
    const auto m4 = Gf2Poly::from_terms({2, 1, 0});  // z^2+z+1
    CHECK(mulmod(Gf2Poly::x(), Gf2Poly::x(), m4) == Gf2Poly::from_terms({1, 0}));

    // product below the modulus degree comes back unreduced
    const auto p = Gf2Poly::from_terms({1, 0});
    const auto q = Gf2Poly::from_terms({2, 1, 0});
    const auto m = Gf2Poly::from_terms({4, 0});
    CHECK(mulmod(p, q, m) == Gf2Poly::from_terms({3, 0}));

    detail::SplitMix64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const auto a = random_poly(rng, 90);
        const auto mm = Gf2Poly::from_terms({31, 3, 0});
        CHECK(mulmod(a, Gf2Poly::one(), mm) == mod(a, mm));
    }

    CHECK_THROWS_AS(mulmod(p, q, Gf2Poly::zero()), ArgumentError);
}

TEST_CASE("mulmod commutes and distributes") {
    detail::SplitMix64 rng(2);
    for (int i = 0; i < 50; ++i) {
        auto m = random_poly(rng, 128);
        while (m.is_zero() || m.degree_nonzero() < 1) m = random_poly(rng, 128);
        const auto p = random_poly(rng, 140);
        const auto q = random_poly(rng, 140);
        const auto r = random_poly(rng, 140);
        CHECK(mulmod(p, q, m) == mulmod(q, p, m));
        CHECK(mulmod(p, add(q, r), m) == add(mulmod(p, q, m), mulmod(p, r, m)));
    }
}

TEST_CASE("degree of a product adds") {
    detail::SplitMix64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto p = random_poly(rng, 100);
        auto q = random_poly(rng, 80);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK(*mul(p, q).degree() == *p.degree() + *q.degree());
    }
}

TEST_CASE("modexp") {
    const auto m = Gf2Poly::from_terms({2, 1, 0});
    CHECK(modexp(Gf2Poly::x(), BigNat(4), m) == Gf2Poly::x());
    CHECK(modexp(Gf2Poly::x(), BigNat(3), m).is_one());
    CHECK(modexp(Gf2Poly::x(), BigNat(0), m).is_one());

    detail::SplitMix64 rng(4);
    for (int i = 0; i < 10; ++i) {
        const auto p = random_poly(rng, 70);
        CHECK(modexp(p, BigNat(1), m) == mod(p, m));
    }
    CHECK_THROWS_AS(modexp(Gf2Poly::x(), BigNat(5), Gf2Poly::zero()), ArgumentError);
}

TEST_CASE("modexp exponents add") {
    detail::SplitMix64 rng(5);
    const auto m = Gf2Poly::from_terms({64, 4, 3, 1, 0});
    for (int i = 0; i < 20; ++i) {
        const BigNat a = rng.next();
        const BigNat b = rng.next();
        const auto za = modexp(Gf2Poly::x(), a, m);
        const auto zb = modexp(Gf2Poly::x(), b, m);
        CHECK(modexp(Gf2Poly::x(), a + b, m) == mulmod(za, zb, m));
    }
}

TEST_CASE("gcd") {
    const auto z2_1 = Gf2Poly::from_terms({2, 0});
    const auto z_1 = Gf2Poly::from_terms({1, 0});
    CHECK(gcd(z2_1, z_1) == z_1);  // z^2+1 = (z+1)^2
    CHECK(gcd(z2_1, Gf2Poly::zero()) == z2_1);
    CHECK(gcd(Gf2Poly::from_terms({2, 1, 0}), z_1).is_one());
    CHECK_THROWS_AS(gcd(Gf2Poly::zero(), Gf2Poly::zero()), ArgumentError);
}

TEST_CASE("irreducibility matches trial division up to degree 12") {
    CHECK(is_irreducible(Gf2Poly::from_terms({2, 1, 0})));
    CHECK_FALSE(is_irreducible(Gf2Poly::from_terms({2, 0})));
    CHECK(is_irreducible(Gf2Poly::from_terms({4, 3, 2, 1, 0})));

    for (std::uint64_t bits = 2; bits < (1ULL << 13); ++bits) {
        const auto p = oracles::poly_from_bits(bits);
        CHECK(is_irreducible(p) == oracles::trial_division_irreducible(p));
    }
}

TEST_CASE("primitivity agrees with the order oracle up to degree 12") {
    const auto t15 = oracles::small_factor_table(4);
    CHECK(is_primitive(Gf2Poly::from_terms({4, 1, 0}), t15));
    CHECK_FALSE(is_primitive(Gf2Poly::from_terms({4, 3, 2, 1, 0}), t15));
    CHECK_FALSE(is_primitive(Gf2Poly::from_terms({2, 0}), oracles::small_factor_table(2)));

    for (unsigned n = 1; n <= 12; ++n) {
        const auto table = oracles::small_factor_table(n);
        for (std::uint64_t bits = 1ULL << n; bits < (2ULL << n); ++bits) {
            const auto p = oracles::poly_from_bits(bits);
            if (!oracles::trial_division_irreducible(p)) continue;
            CHECK(is_primitive(p, table) == oracles::brute_force_primitive(p));
        }
    }
}

TEST_CASE("primitivity rejects a factor table for the wrong n") {
    const auto p = Gf2Poly::from_terms({4, 1, 0});
    CHECK_THROWS_AS(is_primitive(p, oracles::small_factor_table(6)), IntegrityError);
}

TEST_CASE("weight") {
    CHECK(Gf2Poly::zero().weight() == 0);
    CHECK(Gf2Poly::from_terms({4, 1, 0}).weight() == 3);

    detail::SplitMix64 rng(6);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_poly(rng, 200);
        if (!p.is_zero()) CHECK(p.weight() >= 1);
        // p(1) by direct coefficient summation
        bool at_one = false;
        for (std::size_t j = 0; j <= (p.is_zero() ? 0 : p.degree_nonzero()); ++j)
            at_one ^= p.coeff(j);
        CHECK((p.weight() % 2 == 1) == at_one);
    }
}

TEST_CASE("text and hex forms") {
    const auto p = Gf2Poly::from_terms({64, 17, 0});
    CHECK(p.to_text() == "x^64 + x^17 + 1");
    CHECK(Gf2Poly::zero().to_text() == "0");
    CHECK(Gf2Poly::from_terms({1}).to_text() == "x");

    CHECK(Gf2Poly::from_terms({4, 1, 0}).to_hex() == "13");
    CHECK(Gf2Poly::zero().to_hex() == "0");
    CHECK(Gf2Poly::from_hex("13") == Gf2Poly::from_terms({4, 1, 0}));
    CHECK_THROWS_AS(Gf2Poly::from_hex("xyz"), ArgumentError);

    detail::SplitMix64 rng(7);
    for (int i = 0; i < 30; ++i) {
        const auto p2 = random_poly(rng, 300);
        CHECK(Gf2Poly::from_hex(p2.to_hex()) == p2);
    }
}

TEST_CASE("zero polynomial has no degree") {
    CHECK_FALSE(Gf2Poly::zero().degree().has_value());
    CHECK(*Gf2Poly::one().degree() == 0);
    CHECK(*Gf2Poly::monomial(4096).degree() == 4096);
}

TEST_CASE("divmod reconstructs the dividend") {
    detail::SplitMix64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_poly(rng, 250);
        auto m = random_poly(rng, 120);
        while (m.is_zero()) m = random_poly(rng, 120);
        const auto [q, rem] = divmod(p, m);
        CHECK(add(mul(q, m), rem) == p);
        if (!rem.is_zero()) CHECK(*rem.degree() < *m.degree());
    }
}
