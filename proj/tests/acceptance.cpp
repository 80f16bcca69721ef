// Acceptance suite: runs each acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. The two n = 4096 rows take
// minutes of schoolbook GF(2) arithmetic, so they sit behind --slow:
//
//   xorgens_acceptance             fast criteria only
//   xorgens_acceptance --slow      everything
//   xorgens_acceptance --slow-only just the slow additions
//
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "xorgens/analysis.hpp"
#include "xorgens/engine.hpp"
#include "xorgens/factor_tables.hpp"
#include "xorgens/param_db.hpp"
#include "xorgens/search.hpp"
#include "xorgens/statcheck.hpp"

using namespace xorgens;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    std::cout.flush();
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// the delta column as printed in the source tables
std::uint32_t published_delta(std::uint32_t w, std::uint32_t n) {
    const std::uint32_t column[][3] = {
        {32, 64, 12},   {32, 128, 12},  {32, 256, 13},  {32, 512, 13},
        {32, 1024, 11}, {32, 2048, 12}, {32, 4096, 12}, {64, 128, 28},
        {64, 256, 27},  {64, 512, 26},  {64, 1024, 25}, {64, 2048, 26},
        {64, 4096, 26},
    };
    for (const auto& row : column)
        if (row[0] == w && row[1] == n) return row[2];
    return 0;
}

// criterion 1: degree, weight and delta of every table row, exact
void criterion_1(bool slow_rows) {
    std::ostringstream detail;
    bool ok = true;
    for (const Params& row : all_rows()) {
        if ((row.n() == 4096) != slow_rows) continue;
        const auto t0 = std::chrono::steady_clock::now();
        const CharPolyReport rep = char_poly(row, nullptr);
        const bool row_ok = rep.degree == row.n() && rep.weight == *row.weight &&
                            row.delta() == published_delta(row.w, row.n());
        ok = ok && row_ok;
        detail << "(" << row.w << "," << row.n() << ") degree=" << rep.degree
               << " W=" << rep.weight << " delta=" << row.delta()
               << (row_ok ? "" : " MISMATCH") << " [" << std::fixed
               << std::setprecision(2) << seconds_since(t0) << "s] ";
    }
    report(slow_rows ? "criterion-1 (n=4096 rows)" : "criterion-1 (n<=2048 rows)", ok,
           detail.str());
}

// criterion 2: primitivity proving through the shipped factor tables
void criterion_2_fast() {
    std::ostringstream detail;
    bool ok = true;
    const std::pair<std::uint32_t, std::uint32_t> rows[] = {{32, 64}, {32, 128}, {64, 128}};
    for (const auto& [w, n] : rows) {
        const auto t0 = std::chrono::steady_clock::now();
        bool row_ok = true;
        try {
            verify_row(w, n);
        } catch (const std::exception& e) {
            row_ok = false;
            detail << e.what() << " ";
        }
        const double elapsed = seconds_since(t0);
        row_ok = row_ok && elapsed < 60.0;
        ok = ok && row_ok;
        detail << "(" << w << "," << n << ") " << std::fixed << std::setprecision(2)
               << elapsed << "s ";
    }
    report("criterion-2 (small rows, <60s each)", ok, detail.str());
}

void criterion_2_slow() {
    std::ostringstream detail;
    bool ok = true;
    for (const Params& row : all_rows()) {
        const auto t0 = std::chrono::steady_clock::now();
        bool row_ok = true;
        std::string problem;
        try {
            verify_row(row.w, row.n());
        } catch (const std::exception& e) {
            row_ok = false;
            problem = e.what();
        }
        ok = ok && row_ok;
        detail << "(" << row.w << "," << row.n() << ")" << (row_ok ? "" : " FAILED")
               << problem << " [" << std::fixed << std::setprecision(1)
               << seconds_since(t0) << "s] ";
    }
    report("criterion-2 (full-table primitivity)", ok, detail.str());
}

// criterion 3: exhaustive period oracle on the toy exponent
void criterion_3() {
    const SearchOutcome outcome = search_optimal(8, 2, load_table(16));
    if (!outcome.found) {
        report("criterion-3", false, "search_optimal(8, 2) found nothing");
        return;
    }
    const Params& p = *outcome.found;
    const std::vector<std::uint64_t> start = {0xb5, 0x17};
    RawEngine engine(p, start);
    std::uint64_t period = 0;
    for (std::uint64_t k = 1; k <= 65535; ++k) {
        engine.step();
        if (engine.state() == start) {
            period = k;
            break;
        }
    }
    std::ostringstream detail;
    detail << "quintuple (s,a,b,c,d)=(" << p.s << "," << p.a << "," << p.b << ","
           << p.c << "," << p.d << ") returned to the seed state after " << period
           << " steps (want exactly 65535, no earlier return)";
    report("criterion-3", period == 65535, detail.str());
}

// criterion 4: search reproduction against the published parameters
void criterion_4() {
    {
        const auto t0 = std::chrono::steady_clock::now();
        const SearchOutcome outcome = search_optimal(32, 2, load_table(64));
        const bool found_ok = outcome.found && outcome.found->s == 1 &&
                              outcome.found->a == 17 && outcome.found->b == 14 &&
                              outcome.found->c == 12 && outcome.found->d == 19 &&
                              outcome.delta_reached == 12 &&
                              outcome.found->weight == 31u;
        std::ostringstream detail;
        if (outcome.found)
            detail << "(s,a,b,c,d)=(" << outcome.found->s << "," << outcome.found->a
                   << "," << outcome.found->b << "," << outcome.found->c << ","
                   << outcome.found->d << ") delta=" << outcome.delta_reached
                   << " W=" << *outcome.found->weight;
        else
            detail << "no result";
        detail << ", want (1,17,14,12,19) delta=12 W=31 [" << std::fixed
               << std::setprecision(1) << seconds_since(t0) << "s, "
               << outcome.candidates_tested << " candidates]";
        report("criterion-4 (w=32 r=2 reproduction)", found_ok, detail.str());
    }
    {
        const SearchOutcome outcome = search_optimal(8, 6, load_table(48));
        std::ostringstream detail;
        detail << (outcome.found ? "unexpectedly found a solution" : "no solution")
               << " (" << outcome.candidates_tested << " candidates)";
        report("criterion-4 (w=8 r=6 has no solution)", !outcome.found && outcome.complete,
               detail.str());
    }
}

// criterion 5: factor-table integrity for every shipped exponent
void criterion_5() {
    std::ostringstream detail;
    bool ok = true;
    for (unsigned n : supported_exponents()) {
        try {
            const FactorTable& t = load_table(n);  // validates product + primality
            detail << "n=" << n << " (" << t.entries().size() << " primes) ";
        } catch (const std::exception& e) {
            ok = false;
            detail << "n=" << n << " FAILED: " << e.what() << " ";
        }
    }
    report("criterion-5", ok, detail.str());
}

// criterion 6: Hamming weight bounds, 10^6 words per row
void criterion_6() {
    std::uint64_t violations = 0;
    for (const Params& row : all_rows())
        violations += hamming_bound_scan(row, 1'000'000);
    report("criterion-6", violations == 0,
           "factor-2/factor-4 bound violations over 13x10^6 words: " +
               std::to_string(violations));
}

// criterion 7: linearity dichotomy and Weyl lsb period
void criterion_7() {
    bool raw_ok = true, combined_ok = true, lsb_ok = true;
    for (const Params& row : all_rows()) {
        const LinearityProbe probe = linearity_probe(row, 64);
        raw_ok = raw_ok && probe.raw_linear;
        combined_ok = combined_ok && !probe.combined_linear;

        Generator gen(row, 3);
        std::uint64_t prev = gen.weyl() & 1;
        for (int i = 0; i < 32; ++i) {
            gen.next_word();
            lsb_ok = lsb_ok && (gen.weyl() & 1) != prev;
            prev = gen.weyl() & 1;
        }
    }
    std::ostringstream detail;
    detail << "raw xor-additive over 64 steps: " << (raw_ok ? "all rows" : "VIOLATED")
           << "; combined path non-additive: " << (combined_ok ? "all rows" : "VIOLATED")
           << "; weyl lsb period 2: " << (lsb_ok ? "yes" : "NO");
    report("criterion-7", raw_ok && combined_ok && lsb_ok, detail.str());
}

// criterion 8: binomial tail anchors, 2 significant figures
void criterion_8() {
    // agreement to the quoted precision: within half a unit in the last
    // quoted significant digit
    const auto matches = [](double computed, double quoted, double half_ulp) {
        return std::abs(computed - quoted) <= half_ulp;
    };
    const double p32 = low_weight_probability(32, 4);
    const double p64 = low_weight_probability(64, 8);
    const bool ok32 = matches(p32, 1.0e-5, 0.05e-5);
    const bool ok64 = matches(p64, 2.8e-10, 0.05e-10);
    std::ostringstream detail;
    detail << std::scientific << std::setprecision(4) << "P(w=32, |x|<=4) = " << p32
           << " vs quoted 1.0e-5; P(w=64, |x|<=8) = " << p64 << " vs quoted 2.8e-10";
    report("criterion-8", ok32 && ok64, detail.str());
}

// criterion 9: scope statement for what desk-scale runs cannot reproduce
void criterion_9() {
    report("criterion-9", true,
           "external battery results (Crush/Diehard, n<=128 matrix-rank failures) and "
           "full-period iteration for n >= 64 are not reproducible at desk scale; "
           "covered instead by the algebraic period proof (criteria 1-2), the toy "
           "exhaustion (criterion 3), and the property suite (criteria 6-8)");
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false, fast = true;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;
        if (std::strcmp(argv[i], "--slow-only") == 0) {
            slow = true;
            fast = false;
        }
    }

    if (fast) {
        criterion_1(false);
        criterion_2_fast();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9();
    }
    if (slow) {
        criterion_1(true);
        criterion_2_slow();
    }

    std::cout << (g_failures == 0 ? "all criteria passed" : "FAILURES: ")
              << (g_failures == 0 ? "" : std::to_string(g_failures)) << "\n";
    return g_failures;
}
