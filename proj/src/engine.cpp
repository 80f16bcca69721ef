#include "xorgens/engine.hpp"

#include <cmath>

#include "xorgens/errors.hpp"

namespace xorgens {

namespace {

std::uint64_t mask_for(std::uint32_t w) {
    return w == 64 ? ~0ULL : (1ULL << w) - 1;
}

void require_shift(std::uint32_t t, std::uint32_t w, const char* name) {
    if (t < 1 || t >= w)
        throw ArgumentError(std::string("shift ") + name + "=" + std::to_string(t) +
                            " outside [1, w) for w=" + std::to_string(w));
}

constexpr std::uint64_t kOmega64 = 0x9e3779b97f4a7c15ULL;  // odd, ~2^63*(sqrt(5)-1)
constexpr std::uint64_t kOmega32 = 0x9e3779b9ULL;          // odd, ~2^31*(sqrt(5)-1)

// Replacement register value when seed ^ omega collapses to zero.
constexpr std::uint64_t kSeedFallback = 0x6a09e667f3bcc909ULL;

}  // namespace

std::uint64_t xls(std::uint64_t x, std::uint32_t t, std::uint32_t w) {
    return (x ^ (x << t)) & mask_for(w);
}

std::uint64_t xrs(std::uint64_t x, std::uint32_t t, std::uint32_t w) {
    (void)w;  // x < 2^w, so the zero-fill right shift needs no mask
    return x ^ (x >> t);
}

std::uint64_t omega_for(std::uint32_t w) {
    switch (w) {
        case 32: return kOmega32;
        case 64: return kOmega64;
        default: throw UnlistedError("omega defined for w in {32, 64}, got w=" + std::to_string(w));
    }
}

std::uint32_t gamma_for(std::uint32_t w) {
    if (w != 32 && w != 64)
        throw UnlistedError("gamma defined for w in {32, 64}, got w=" + std::to_string(w));
    return w / 2;
}

RawEngine::RawEngine(const Params& params, std::span<const std::uint64_t> state)
    : params_(params), mask_(mask_for(params.w)) {
    if (params.w < 2 || params.w > 64)
        throw ArgumentError("word length must be in [2, 64]");
    if (params.r < 2 || params.s < 1 || params.s >= params.r)
        throw ArgumentError("lags must satisfy r >= 2, 0 < s < r");
    require_shift(params.a, params.w, "a");
    require_shift(params.b, params.w, "b");
    require_shift(params.c, params.w, "c");
    require_shift(params.d, params.w, "d");
    if (state.size() != params.r)
        throw ArgumentError("state must hold exactly r words");
    x_.assign(state.begin(), state.end());
    for (std::uint64_t wv : x_)
        if (wv & ~mask_)
            throw ArgumentError("state word exceeds 2^w");
}

std::uint64_t RawEngine::step() {
    // x_[idx_] holds x[k-r]; x[k-s] sits s-1 slots behind the newest word.
    std::uint32_t js = idx_ + params_.r - params_.s;
    if (js >= params_.r) js -= params_.r;

    const std::uint64_t t =
        xrs(xls(x_[idx_], params_.a, params_.w), params_.b, params_.w) ^
        xrs(xls(x_[js], params_.c, params_.w), params_.d, params_.w);
    x_[idx_] = t;
    ++idx_;
    if (idx_ == params_.r) idx_ = 0;
    return t;
}

std::vector<std::uint64_t> RawEngine::state() const {
    std::vector<std::uint64_t> out(params_.r);
    for (std::uint32_t i = 0; i < params_.r; ++i)
        out[i] = x_[(idx_ + i) % params_.r];
    return out;
}

SeedExpander::SeedExpander(std::uint64_t seed) : u_(seed ^ kOmega64) {
    if (u_ == 0) u_ = kSeedFallback;
}

std::uint64_t SeedExpander::next() {
    u_ = xls(u_, 13, 64);
    u_ = xrs(u_, 7, 64);
    u_ = xls(u_, 17, 64);
    t_ += kOmega64;
    return u_ + t_;
}

namespace {

Generator make_seeded(const Params& params, std::uint64_t seed) {
    const std::uint64_t mask = mask_for(params.w);
    SeedExpander ex(seed);
    // Burn-in decouples the state words from simple seed structure.
    for (std::uint32_t i = 0; i < 2 * params.r; ++i) ex.next();
    std::vector<std::uint64_t> state(params.r);
    bool any = false;
    for (std::uint32_t i = 0; i < params.r; ++i) {
        state[i] = ex.next() & mask;
        any = any || state[i] != 0;
    }
    if (!any) state[0] = 1;
    return Generator(params, state, ex.weyl_word() & mask);
}

}  // namespace

Generator::Generator(const Params& params, std::uint64_t seed)
    : Generator(make_seeded(params, seed)) {}

Generator::Generator(const Params& params, std::span<const std::uint64_t> state,
                     std::uint64_t weyl)
    : raw_(params, state),
      weyl_(weyl),
      omega_(omega_for(params.w)),
      gamma_(gamma_for(params.w)) {
    if (weyl_ & ~raw_.word_mask())
        throw ArgumentError("weyl word exceeds 2^w");
}

std::uint64_t Generator::next_word() {
    weyl_ = (weyl_ + omega_) & raw_.word_mask();
    const std::uint64_t v = weyl_ ^ (weyl_ >> gamma_);
    return (v + raw_.step()) & raw_.word_mask();
}

double Generator::next_real() {
    std::uint64_t y;
    if (params().w == 64) {
        y = next_word() >> 11;
    } else {
        const std::uint64_t hi = next_word();
        const std::uint64_t lo = next_word();
        y = ((hi << 32) | lo) >> 11;
    }
    const double v = (static_cast<double>(y) + 0.5) * 0x1p-53;
    // y = 2^53-1 lands on 1 - 2^-54, which is not a double and rounds up
    // to 1.0; keep the interval open by snapping to the next value down.
    return v < 1.0 ? v : 1.0 - 0x1p-53;
}

}  // namespace xorgens
