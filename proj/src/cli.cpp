#include "xorgens/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "xorgens/analysis.hpp"
#include "xorgens/engine.hpp"
#include "xorgens/errors.hpp"
#include "xorgens/factor_tables.hpp"
#include "xorgens/param_db.hpp"
#include "xorgens/search.hpp"
#include "xorgens/statcheck.hpp"

namespace xorgens::cli {

namespace {

std::vector<FactorTable> load_overrides(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) throw IntegrityError("cannot open factor file \"" + path + "\"");
    return parse_factor_stream(in);
}

void warn_small_n(const Params& row, std::ostream& err) {
    if (row.n() <= 128)
        err << "warning: n=" << row.n()
            << " generators can fail matrix-rank tests; prefer n >= 256\n";
}

std::string hex_word(std::uint64_t v, std::uint32_t w) {
    std::ostringstream s;
    s << std::hex << std::setw(w / 4) << std::setfill('0') << v;
    return s.str();
}

void print_row_fields(const Params& row, std::ostream& out) {
    out << "w=" << row.w << " n=" << row.n() << " r=" << row.r << " s=" << row.s
        << " a=" << row.a << " b=" << row.b << " c=" << row.c << " d=" << row.d
        << " delta=" << row.delta();
    if (row.weight) out << " W=" << *row.weight;
    out << "\n";
}

int cmd_gen(std::uint32_t w, std::optional<std::uint32_t> n, std::uint64_t seed,
            std::optional<std::uint64_t> count, const std::string& format,
            std::ostream& out, std::ostream& err) {
    const std::uint32_t n_eff = n.value_or(4096);  // largest stored row
    const Params& row = lookup(w, n_eff);
    warn_small_n(row, err);
    Generator gen(row, seed);

    if (format == "raw") {
        const std::uint32_t bytes = w / 8;
        std::vector<char> buf;
        buf.reserve(1 << 16);
        for (std::uint64_t emitted = 0; !count || emitted < *count; ++emitted) {
            const std::uint64_t v = gen.next_word();
            for (std::uint32_t i = 0; i < bytes; ++i)
                buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
            if (buf.size() >= (1 << 16) || (count && emitted + 1 == *count)) {
                out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
                buf.clear();
                if (!out) return kOk;  // downstream closed the pipe
            }
        }
        if (!buf.empty()) out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        return kOk;
    }
    if (format == "hex") {
        for (std::uint64_t emitted = 0; !count || emitted < *count; ++emitted) {
            out << hex_word(gen.next_word(), w) << "\n";
            if (!out) return kOk;
        }
        return kOk;
    }
    if (format == "real") {
        out << std::setprecision(17);
        for (std::uint64_t emitted = 0; !count || emitted < *count; ++emitted) {
            out << gen.next_real() << "\n";
            if (!out) return kOk;
        }
        return kOk;
    }
    err << "error: unknown format \"" << format << "\"\n";
    return kUsage;
}

int cmd_params(std::optional<std::uint32_t> w, std::optional<std::uint32_t> n,
               std::ostream& out) {
    if (w && n) {
        print_row_fields(lookup(*w, *n), out);
        return kOk;
    }
    out << "   w     n    r    s   a   b   c   d  delta    W\n";
    bool any = false;
    for (const Params& row : all_rows()) {
        if (w && row.w != *w) continue;
        if (n && row.n() != *n) continue;
        any = true;
        out << std::setw(4) << row.w << std::setw(6) << row.n() << std::setw(5) << row.r
            << std::setw(5) << row.s << std::setw(4) << row.a << std::setw(4) << row.b
            << std::setw(4) << row.c << std::setw(4) << row.d << std::setw(7)
            << row.delta() << std::setw(5) << (row.weight ? *row.weight : 0) << "\n";
    }
    if (!any) throw UnlistedError("no rows match the requested filter");
    return kOk;
}

int cmd_verify(std::uint32_t w, std::uint32_t n, const std::string& factors_path,
               std::ostream& out) {
    lookup(w, n);  // unlisted rows fail before any factor-table work
    const auto overrides = load_overrides(factors_path);
    const FactorTable& factors = table_for(n, overrides);
    const CharPolyReport report = verify_row(w, n, &factors);
    out << "row (w=" << w << ", n=" << n << "): degree=" << report.degree
        << " W=" << report.weight << " " << to_string(report.primitive)
        << " elapsed=" << std::fixed << std::setprecision(3) << report.elapsed_seconds
        << "s\n";
    return kOk;
}

int cmd_search(std::uint32_t w, std::uint32_t r, std::uint32_t delta_floor,
               double budget, const std::string& factors_path, std::ostream& out) {
    const auto overrides = load_overrides(factors_path);
    const FactorTable& factors = table_for(w * r, overrides);
    SearchOptions options;
    options.delta_floor = delta_floor;
    options.budget_seconds = budget;
    const SearchOutcome outcome = search_optimal(w, r, factors, options);

    out << "found=" << (outcome.found ? "yes" : "no");
    if (outcome.found) {
        const Params& p = *outcome.found;
        out << " s=" << p.s << " a=" << p.a << " b=" << p.b << " c=" << p.c
            << " d=" << p.d << " delta=" << p.delta() << " W=" << *p.weight;
    }
    out << " delta_reached=" << outcome.delta_reached
        << " candidates=" << outcome.candidates_tested
        << " successes=" << outcome.successes;
    for (const auto& [criterion, count] : outcome.rejects_by_criterion)
        out << " rejects[" << criterion << "]=" << count;
    out << " complete=" << (outcome.complete ? "true" : "false") << "\n";
    return outcome.complete ? kOk : kVerifyMismatch;
}

int cmd_bench(std::uint32_t w, std::optional<std::uint32_t> n, std::ostream& out) {
    const Params& row = lookup(w, n.value_or(4096));
    Generator gen(row, 1);
    // warm up, then time ~0.5 s worth of batches
    std::uint64_t sink = 0;
    for (int i = 0; i < 1'000'000; ++i) sink ^= gen.next_word();
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t words = 0;
    double elapsed = 0;
    do {
        for (int i = 0; i < 4'000'000; ++i) sink ^= gen.next_word();
        words += 4'000'000;
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } while (elapsed < 0.5);
    volatile std::uint64_t keep = sink;
    (void)keep;
    const double rate = static_cast<double>(words) / elapsed;
    out << "w=" << row.w << " n=" << row.n() << " words/s=" << std::fixed
        << std::setprecision(0) << rate << " MB/s=" << std::setprecision(1)
        << rate * (w / 8) / 1e6 << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"long-period shift/xor random number generators with a Weyl output stage"};
    app.name("xorgens");
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit the combined output stream");
    std::uint32_t gen_w = 64;
    std::optional<std::uint32_t> gen_n;
    std::uint64_t gen_seed = 1;
    std::optional<std::uint64_t> gen_count;
    std::string gen_format = "raw";
    gen->add_option("--w", gen_w, "word length (32 or 64)")->check(CLI::IsMember({32, 64}));
    gen->add_option("--n", gen_n, "state bits (a stored row; default 4096)");
    gen->add_option("--seed", gen_seed, "64-bit seed (default 1)");
    gen->add_option("--count", gen_count, "words to emit (default: unbounded)");
    gen->add_option("--format", gen_format, "raw | hex | real")
        ->check(CLI::IsMember({"raw", "hex", "real"}));

    // params
    auto* params = app.add_subcommand("params", "print stored parameter rows");
    std::optional<std::uint32_t> par_w, par_n;
    params->add_option("--w", par_w, "filter by word length");
    params->add_option("--n", par_n, "filter by state bits");

    // verify
    auto* verify = app.add_subcommand("verify", "recover and check a row's characteristic polynomial");
    std::uint32_t ver_w = 0, ver_n = 0;
    std::string ver_factors;
    verify->add_option("--w", ver_w, "word length")->required();
    verify->add_option("--n", ver_n, "state bits")->required();
    verify->add_option("--factors", ver_factors, "factor data file overriding the shipped tables");

    // search
    auto* search = app.add_subcommand("search", "search optimal (s,a,b,c,d) for given w, r");
    std::uint32_t sea_w = 0, sea_r = 0, sea_floor = 1;
    double sea_budget = 0.0;
    std::string sea_factors;
    search->add_option("--w", sea_w, "word length")->required();
    search->add_option("--r", sea_r, "state length in words")->required();
    search->add_option("--delta-floor", sea_floor, "stop descending delta below this");
    search->add_option("--budget", sea_budget, "time budget in seconds (0 = unlimited)");
    search->add_option("--factors", sea_factors, "factor data file overriding the shipped tables");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "run the statistical diagnostic suite");
    bool quick = false;
    selftest->add_flag("--quick", quick, "smaller trial counts");

    // bench
    auto* bench = app.add_subcommand("bench", "measure words/second (informational)");
    std::uint32_t ben_w = 64;
    std::optional<std::uint32_t> ben_n;
    bench->add_option("--w", ben_w, "word length")->check(CLI::IsMember({32, 64}));
    bench->add_option("--n", ben_n, "state bits (default 4096)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_w, gen_n, gen_seed, gen_count, gen_format, out, err);
        if (params->parsed()) return cmd_params(par_w, par_n, out);
        if (verify->parsed()) return cmd_verify(ver_w, ver_n, ver_factors, out);
        if (search->parsed())
            return cmd_search(sea_w, sea_r, sea_floor, sea_budget, sea_factors, out);
        if (selftest->parsed()) return run_selftest(out, quick) ? kOk : kVerifyMismatch;
        if (bench->parsed()) return cmd_bench(ben_w, ben_n, out);
    } catch (const VerificationError& e) {
        err << "error: " << e.what() << "\n";
        return kVerifyMismatch;
    } catch (const UnlistedError& e) {
        err << "error: " << e.what() << "\n";
        return kUnlisted;
    } catch (const IntegrityError& e) {
        err << "error: " << e.what() << "\n";
        return kBadFactorData;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace xorgens::cli
