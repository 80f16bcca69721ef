#include "xorgens/search.hpp"

#include <chrono>
#include <numeric>

#include "xorgens/analysis.hpp"
#include "xorgens/errors.hpp"

namespace xorgens {

namespace {

struct Quintuple {
    std::uint32_t s, a, b, c, d;

    friend auto operator<=>(const Quintuple&, const Quintuple&) = default;
};

// First failing selection rule, or nullptr if the quadruple survives.
const char* structural_reject(std::uint32_t w, std::uint32_t a, std::uint32_t b,
                              std::uint32_t c, std::uint32_t d) {
    if (a + b > w || c + d > w) return "criterion-1";
    if (std::gcd(a, b) != 1 || std::gcd(c, d) != 1) return "criterion-2";
    if (a < b) return "criterion-3";
    if (c > d) return "criterion-4";
    return nullptr;
}

}  // namespace

SearchOutcome search_optimal(std::uint32_t w, std::uint32_t r,
                             const FactorTable& factors,
                             const SearchOptions& options) {
    if (r < 2) throw ArgumentError("search requires r >= 2");
    if (w < 2 || w > 64) throw ArgumentError("search requires 2 <= w <= 64");
    const std::uint32_t n = r * w;
    if (factors.n() != n)
        throw IntegrityError("search for n=" + std::to_string(n) +
                             " got a factor table for n=" + std::to_string(factors.n()));

    const auto t0 = std::chrono::steady_clock::now();
    const auto out_of_budget = [&] {
        if (options.budget_seconds <= 0) return false;
        const std::chrono::duration<double> used = std::chrono::steady_clock::now() - t0;
        return used.count() > options.budget_seconds;
    };

    std::vector<std::uint32_t> lags;
    for (std::uint32_t s = 1; s < r; ++s)
        if (std::gcd(r, s) == 1) lags.push_back(s);

    SearchOutcome outcome;
    const std::uint32_t delta_floor = std::max<std::uint32_t>(1, options.delta_floor);

    for (std::uint32_t delta = w / 2; delta >= delta_floor; --delta) {
        // All full-period quintuples at this level, selected over afterwards.
        std::vector<std::pair<Quintuple, std::uint32_t>> level_hits;  // (quintuple, W)

        const std::uint64_t span = w - 2 * delta + 1;  // shifts in [delta, w-delta]
        const std::uint64_t quadruples = span * span * span * span;
        for (std::uint64_t q = 0; q < quadruples && outcome.complete; ++q) {
            // decode in lexicographic (a, b, c, d) order
            const std::uint32_t d = delta + static_cast<std::uint32_t>(q % span);
            const std::uint32_t c = delta + static_cast<std::uint32_t>(q / span % span);
            const std::uint32_t b = delta + static_cast<std::uint32_t>(q / (span * span) % span);
            const std::uint32_t a = delta + static_cast<std::uint32_t>(q / (span * span * span));
            if (std::min(std::min(a, b), std::min(c, d)) != delta) continue;
            if (const char* criterion = structural_reject(w, a, b, c, d)) {
                ++outcome.candidates_tested;
                ++outcome.rejects_by_criterion[criterion];
                continue;
            }
            for (std::uint32_t s : lags) {
                if (out_of_budget()) {
                    outcome.complete = false;
                    break;
                }
                ++outcome.candidates_tested;
                Params candidate{.w = w, .r = r, .s = s, .a = a, .b = b, .c = c, .d = d};
                const CharPolyReport report = char_poly(candidate, &factors);
                if (report.primitive == Primitivity::kPrimitive) {
                    ++outcome.successes;
                    level_hits.push_back({{s, a, b, c, d},
                                          static_cast<std::uint32_t>(report.weight)});
                } else {
                    ++outcome.rejects_by_criterion["criterion-6"];
                }
            }
        }

        if (!level_hits.empty()) {
            // Criterion 7: maximum weight; residual ties go to the
            // lexicographically smallest quintuple.
            const std::pair<Quintuple, std::uint32_t>* best = &level_hits.front();
            for (const auto& hit : level_hits) {
                if (hit.second > best->second ||
                    (hit.second == best->second && hit.first < best->first))
                    best = &hit;
            }
            Params found{.w = w, .r = r, .s = best->first.s, .a = best->first.a,
                         .b = best->first.b, .c = best->first.c, .d = best->first.d};
            found.weight = best->second;
            outcome.found = found;
            outcome.delta_reached = delta;
            return outcome;
        }
        if (!outcome.complete) return outcome;
    }
    return outcome;
}

}  // namespace xorgens
