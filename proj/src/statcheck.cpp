#include "xorgens/statcheck.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <vector>

#include "xorgens/bignat.hpp"
#include "xorgens/detail/splitmix.hpp"
#include "xorgens/engine.hpp"
#include "xorgens/errors.hpp"

namespace xorgens {

namespace {

constexpr std::uint64_t kProbeSeed = 0xe220a8397b1dcdafULL;

std::uint64_t word_mask(std::uint32_t w) {
    return w == 64 ? ~0ULL : (1ULL << w) - 1;
}

void require_valid(const Params& params) {
    if (const auto v = validate(params); !v.empty())
        throw ArgumentError("parameters fail validation (" + v.front().criterion +
                            ": " + v.front().detail + ")");
}

int pc(std::uint64_t x) { return std::popcount(x); }

std::vector<std::uint64_t> probe_state(const Params& params, detail::SplitMix64& rng) {
    const std::uint64_t mask = word_mask(params.w);
    std::vector<std::uint64_t> state(params.r);
    bool any = false;
    for (auto& wv : state) {
        wv = rng.next() & mask;
        any = any || wv != 0;
    }
    if (!any) state[0] = 1;
    return state;
}

}  // namespace

std::uint64_t hamming_bound_scan(const Params& params, std::uint64_t trials) {
    require_valid(params);
    const std::uint32_t w = params.w;
    const std::uint64_t mask = word_mask(w);
    detail::SplitMix64 rng(kProbeSeed);

    std::uint64_t violations = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const std::uint64_t x = rng.next() & mask;
        const int base = pc(x);
        if (pc(xls(x, params.a, w)) > 2 * base) ++violations;
        if (pc(xls(x, params.c, w)) > 2 * base) ++violations;
        if (pc(xrs(x, params.b, w)) > 2 * base) ++violations;
        if (pc(xrs(x, params.d, w)) > 2 * base) ++violations;
        if (pc(xrs(xls(x, params.a, w), params.b, w)) > 4 * base) ++violations;
        if (pc(xrs(xls(x, params.c, w), params.d, w)) > 4 * base) ++violations;
    }
    return violations;
}

LinearityProbe linearity_probe(const Params& params, std::uint64_t steps) {
    require_valid(params);
    detail::SplitMix64 rng(kProbeSeed ^ 0x2545f4914f6cdd1dULL);

    const auto s0 = probe_state(params, rng);
    const auto s1 = probe_state(params, rng);
    std::vector<std::uint64_t> s2(s0.size());
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i] ^ s1[i];

    LinearityProbe probe{true, true};

    {
        RawEngine e0(params, s0), e1(params, s1), e2(params, s2);
        for (std::uint64_t k = 0; k < steps && probe.raw_linear; ++k)
            probe.raw_linear = (e0.step() ^ e1.step()) == e2.step();
    }
    if (params.w == 32 || params.w == 64) {
        Generator g0(params, s0, 0), g1(params, s1, 0), g2(params, s2, 0);
        for (std::uint64_t k = 0; k < steps && probe.combined_linear; ++k)
            probe.combined_linear = (g0.next_word() ^ g1.next_word()) == g2.next_word();
    } else {
        probe.combined_linear = steps == 0;
    }
    return probe;
}

double low_weight_probability(std::uint32_t w, std::uint32_t threshold) {
    if (w < 1 || w > 64) throw ArgumentError("word length must be in [1, 64]");
    // exact binomial tail: sum_{i<=threshold} C(w, i) / 2^w
    BigNat sum = 0, binom = 1;
    for (std::uint32_t i = 0; i <= threshold && i <= w; ++i) {
        sum += binom;
        binom = binom * (w - i) / (i + 1);
    }
    return std::ldexp(sum.convert_to<double>(), -static_cast<int>(w));
}

LowWeightReport low_weight_lag_correlation(const Params& params,
                                           std::uint64_t samples,
                                           std::uint32_t threshold) {
    require_valid(params);
    LowWeightReport report;
    report.threshold = threshold == 0 ? params.w / 8 : threshold;
    report.samples = samples;
    report.expected_rate = low_weight_probability(params.w, report.threshold);
    if (samples == 0) return report;

    detail::SplitMix64 rng(kProbeSeed ^ 0x9e3779b97f4a7c15ULL);
    RawEngine engine(params, probe_state(params, rng));

    const std::uint32_t r = params.r, s = params.s;
    std::vector<std::uint8_t> ring(r, 0);  // events k-r .. k-1
    std::uint64_t cond_total_r = 0, cond_total_s = 0;

    for (std::uint64_t k = 0; k < samples; ++k) {
        const bool event = pc(engine.step()) <= static_cast<int>(report.threshold);
        const std::size_t pos = static_cast<std::size_t>(k % r);
        if (k >= r) {
            cond_total_r += ring[pos];
            if (ring[pos] && event) ++report.follow_ups_r;
        }
        if (k >= s) {
            const std::uint8_t back_s = ring[(pos + r - s) % r];
            cond_total_s += back_s;
            if (back_s && event) ++report.follow_ups_s;
        }
        report.events += event;
        ring[pos] = event;
    }

    report.observed_rate = static_cast<double>(report.events) / static_cast<double>(samples);
    report.rate_after_lag_r = cond_total_r
        ? static_cast<double>(report.follow_ups_r) / static_cast<double>(cond_total_r) : 0.0;
    report.rate_after_lag_s = cond_total_s
        ? static_cast<double>(report.follow_ups_s) / static_cast<double>(cond_total_s) : 0.0;
    report.insufficient_samples =
        report.expected_rate * static_cast<double>(samples) < 1.0;
    return report;
}

double monobit_stream(const std::function<std::uint64_t()>& next_word,
                      std::uint32_t w, std::uint64_t bits) {
    if (bits == 0) throw ArgumentError("monobit requires a nonempty bit stream");
    std::uint64_t ones = 0, consumed = 0;
    while (consumed < bits) {
        std::uint64_t wv = next_word();
        const std::uint64_t take = std::min<std::uint64_t>(w, bits - consumed);
        if (take < 64) wv &= (1ULL << take) - 1;
        ones += static_cast<std::uint64_t>(pc(wv));
        consumed += take;
    }
    const double nbits = static_cast<double>(bits);
    return (2.0 * static_cast<double>(ones) - nbits) / std::sqrt(nbits);
}

double monobit(const Params& params, std::uint64_t bits) {
    require_valid(params);
    Generator gen(params, kProbeSeed);
    return monobit_stream([&gen] { return gen.next_word(); }, params.w, bits);
}

bool run_selftest(std::ostream& out, bool quick) {
    const std::uint64_t scan_trials = quick ? 100'000 : 1'000'000;
    const std::uint64_t monobit_bits = quick ? 1'000'000 : 10'000'000;
    const std::uint64_t lag_samples = quick ? 1'000'000 : 10'000'000;

    bool ok = true;
    out << "hamming/linearity per row (" << scan_trials << " trials, 64 steps):\n";
    out << "  w     n  bound-violations  raw-linear  combined-linear  weyl-lsb  |monobit z|\n";
    for (const Params& row : all_rows()) {
        const std::uint64_t violations = hamming_bound_scan(row, scan_trials);
        const LinearityProbe probe = linearity_probe(row, 64);

        // the least significant Weyl bit must alternate: period exactly 2
        Generator gen(row, 1);
        bool lsb_period_2 = true;
        std::uint64_t prev = gen.weyl() & 1u;
        for (int i = 0; i < 64; ++i) {
            gen.next_word();
            lsb_period_2 = lsb_period_2 && ((gen.weyl() & 1u) != prev);
            prev = gen.weyl() & 1u;
        }

        const double z = monobit(row, monobit_bits);
        const bool row_ok = violations == 0 && probe.raw_linear &&
                            !probe.combined_linear && lsb_period_2 && std::abs(z) < 4.0;
        ok = ok && row_ok;
        out << "  " << std::setw(2) << row.w << " " << std::setw(5) << row.n()
            << "  " << std::setw(16) << violations
            << "  " << std::setw(10) << (probe.raw_linear ? "yes" : "NO")
            << "  " << std::setw(15) << (probe.combined_linear ? "YES" : "no")
            << "  " << std::setw(8) << (lsb_period_2 ? "2" : "BAD")
            << "  " << std::fixed << std::setprecision(3) << std::setw(10) << std::abs(z)
            << (row_ok ? "" : "  <-- FAIL") << "\n";
        out.unsetf(std::ios::fixed);
    }

    out << "\nlow-weight recurrence (raw sequence, threshold w/8):\n";
    for (std::uint32_t w : {32u, 64u}) {
        const Params& row = lookup(w, 4096);
        const LowWeightReport rep = low_weight_lag_correlation(row, lag_samples);
        out << "  w=" << w << " threshold=" << rep.threshold
            << " exact-rate=" << std::scientific << std::setprecision(2)
            << rep.expected_rate << std::defaultfloat;
        if (rep.insufficient_samples) {
            out << "  insufficient samples (" << rep.samples
                << ") to observe events\n";
            continue;
        }
        out << " observed=" << std::scientific << std::setprecision(2)
            << rep.observed_rate << std::defaultfloat << " events=" << rep.events
            << " after-lag-r=" << rep.rate_after_lag_r
            << " after-lag-s=" << rep.rate_after_lag_s << "\n";
    }

    out << "\nselftest " << (ok ? "passed" : "FAILED") << "\n";
    return ok;
}

}  // namespace xorgens
