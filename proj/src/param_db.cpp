#include "xorgens/param_db.hpp"

#include <algorithm>
#include <numeric>

#include "xorgens/errors.hpp"

namespace xorgens {

std::uint32_t Params::delta() const {
    return std::min(std::min(a, b), std::min(c, d));
}

namespace {

// The verified rows: one parameter set per (w, n), n a power of two.
// The stored delta column is redundant with min(a,b,c,d) and checked by
// tests; weight is the verified characteristic-polynomial weight.
constexpr struct {
    std::uint32_t w, n, r, s, a, b, c, d, delta, weight;
} kRows[] = {
    // 32-bit generators
    {32, 64, 2, 1, 17, 14, 12, 19, 12, 31},
    {32, 128, 4, 3, 15, 14, 12, 17, 12, 55},
    {32, 256, 8, 3, 18, 13, 14, 15, 13, 109},
    {32, 512, 16, 1, 17, 15, 13, 14, 13, 185},
    {32, 1024, 32, 15, 19, 11, 13, 16, 11, 225},
    {32, 2048, 64, 59, 19, 12, 14, 15, 12, 213},
    {32, 4096, 128, 95, 17, 12, 13, 15, 12, 251},
    // 64-bit generators
    {64, 128, 2, 1, 33, 31, 28, 29, 28, 65},
    {64, 256, 4, 3, 37, 27, 29, 33, 27, 127},
    {64, 512, 8, 1, 37, 26, 29, 34, 26, 231},
    {64, 1024, 16, 7, 34, 29, 25, 31, 25, 439},
    {64, 2048, 32, 1, 35, 27, 26, 37, 26, 745},
    {64, 4096, 64, 53, 33, 26, 27, 29, 26, 961},
};

std::vector<Params> build_rows() {
    std::vector<Params> rows;
    for (const auto& r : kRows) {
        Params p;
        p.w = r.w;
        p.r = r.r;
        p.s = r.s;
        p.a = r.a;
        p.b = r.b;
        p.c = r.c;
        p.d = r.d;
        p.weight = r.weight;
        rows.push_back(p);
    }
    return rows;
}

}  // namespace

std::vector<Violation> validate(const Params& p) {
    std::vector<Violation> out;
    auto fail = [&out](const char* criterion, std::string detail) {
        out.push_back({criterion, std::move(detail)});
    };

    if (p.w == 0 || p.r == 0)
        fail("lags", "w and r must be positive");
    if (!(0 < p.s && p.s < p.r))
        fail("lags", "lag s must satisfy 0 < s < r");
    else if (std::gcd(p.r, p.s) != 1)
        fail("lags", "gcd(r, s) = " + std::to_string(std::gcd(p.r, p.s)) +
                         ", must be 1");

    if (p.delta() < 1)
        fail("delta", "min(a, b, c, d) must be at least 1");
    else {
        if (p.a + p.b > p.w)
            fail("criterion-1", "a + b = " + std::to_string(p.a + p.b) +
                                    " exceeds w = " + std::to_string(p.w));
        if (p.c + p.d > p.w)
            fail("criterion-1", "c + d = " + std::to_string(p.c + p.d) +
                                    " exceeds w = " + std::to_string(p.w));
        if (std::gcd(p.a, p.b) != 1)
            fail("criterion-2", "gcd(a, b) = " + std::to_string(std::gcd(p.a, p.b)) +
                                    ", must be 1");
        if (std::gcd(p.c, p.d) != 1)
            fail("criterion-2", "gcd(c, d) = " + std::to_string(std::gcd(p.c, p.d)) +
                                    ", must be 1");
        if (p.a < p.b) fail("criterion-3", "a must be >= b");
        if (p.c > p.d) fail("criterion-4", "c must be <= d");
    }
    return out;
}

const std::vector<Params>& all_rows() {
    static const std::vector<Params> rows = build_rows();
    return rows;
}

const Params* find_row(std::uint32_t w, std::uint32_t n) {
    for (const Params& p : all_rows())
        if (p.w == w && p.n() == n) return &p;
    return nullptr;
}

const Params& lookup(std::uint32_t w, std::uint32_t n) {
    if (const Params* p = find_row(w, n)) return *p;
    throw UnlistedError("no parameter row for w=" + std::to_string(w) +
                        ", n=" + std::to_string(n));
}

}  // namespace xorgens
