#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "xorgens/factor_tables.hpp"
#include "xorgens/param_db.hpp"

namespace xorgens {

struct SearchOptions {
    // Stop descending delta below this floor (1 = exhaust everything).
    std::uint32_t delta_floor = 1;
    // Wall-clock budget in seconds; 0 = unlimited. When the budget runs
    // out the best result so far is returned with complete = false.
    double budget_seconds = 0.0;
};

struct SearchOutcome {
    std::optional<Params> found;  // weight filled when present
    std::uint32_t delta_reached = 0;  // 0 if exhausted with no result
    std::uint64_t candidates_tested = 0;
    // Keys "criterion-1" .. "criterion-4" count structurally rejected
    // (a,b,c,d) quadruples; "criterion-6" counts (s,a,b,c,d) quintuples
    // whose characteristic polynomial was not primitive of full degree.
    std::map<std::string, std::uint64_t> rejects_by_criterion;
    std::uint64_t successes = 0;  // full-period quintuples seen
    bool complete = true;
};

// Search for the best (s, a, b, c, d) at word length w and state length r,
// given the factorization of 2^(rw) - 1:
// descend delta from floor(w/2); at each level enumerate quadruples
// (a,b,c,d) in [delta, w-delta]^4 with min = delta in lexicographic order,
// apply the structural criteria (a+b <= w, c+d <= w, coprime pairs, a >= b,
// c <= d), and for each survivor try every s in (0, r) with gcd(r, s) = 1,
// testing for a primitive characteristic polynomial of full degree. All
// full-period quintuples at the level are collected before selection:
// maximum weight W wins, residual ties break to the lexicographically
// smallest (s, a, b, c, d). Deterministic by construction.
SearchOutcome search_optimal(std::uint32_t w, std::uint32_t r,
                             const FactorTable& factors,
                             const SearchOptions& options = {});

}  // namespace xorgens
