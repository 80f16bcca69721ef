#include "xorgens/factor_tables.hpp"

#include <istream>
#include <map>
#include <mutex>
#include <sstream>

#include "xorgens/errors.hpp"

namespace xorgens {

namespace detail {
extern const char* const kFactorData;
}

FactorTable FactorTable::checked(unsigned n, std::vector<Entry> entries) {
    if (n == 0) throw IntegrityError("factor table: n must be positive");

    // empty product = 1, which is only right for n = 1
    const BigNat target = pow2_minus_1(n);
    BigNat product = 1;
    const BigNat* prev = nullptr;
    for (const Entry& e : entries) {
        if (e.multiplicity == 0)
            throw IntegrityError("factor table for n=" + std::to_string(n) +
                                 ": zero multiplicity");
        if (prev && !(*prev < e.prime))
            throw IntegrityError("factor table for n=" + std::to_string(n) +
                                 ": primes not strictly increasing");
        prev = &e.prime;
        if (!is_probable_prime(e.prime))
            throw IntegrityError("factor table for n=" + std::to_string(n) +
                                 ": listed factor " + bignat_to_decimal(e.prime) +
                                 " is not prime");
        for (std::uint32_t i = 0; i < e.multiplicity; ++i) {
            product *= e.prime;
            if (product > target)
                throw IntegrityError("factor table for n=" + std::to_string(n) +
                                     ": product exceeds 2^n-1");
        }
    }
    if (product != target)
        throw IntegrityError("factor table for n=" + std::to_string(n) +
                             ": product does not equal 2^n-1");

    FactorTable t;
    t.n_ = n;
    t.entries_ = std::move(entries);
    t.modulus_ = target;
    return t;
}

std::vector<BigNat> FactorTable::distinct_primes() const {
    std::vector<BigNat> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.prime);
    return out;
}

const std::vector<unsigned>& supported_exponents() {
    static const std::vector<unsigned> kSupported = {16, 48, 64, 128, 256, 512, 1024, 2048, 4096};
    return kSupported;
}

std::vector<FactorTable> parse_factor_stream(std::istream& in) {
    std::vector<FactorTable> tables;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank
        if (head.empty() || head.back() != ':')
            throw IntegrityError("factor data line " + std::to_string(lineno) +
                                 ": expected \"n:\" prefix");
        unsigned n = 0;
        try {
            n = static_cast<unsigned>(std::stoul(head.substr(0, head.size() - 1)));
        } catch (const std::exception&) {
            throw IntegrityError("factor data line " + std::to_string(lineno) +
                                 ": bad exponent \"" + head + "\"");
        }
        std::vector<FactorTable::Entry> entries;
        std::string tok;
        while (ls >> tok) {
            std::uint32_t mult = 1;
            std::string prime = tok;
            const auto caret = tok.find('^');
            if (caret != std::string::npos) {
                prime = tok.substr(0, caret);
                try {
                    mult = static_cast<std::uint32_t>(std::stoul(tok.substr(caret + 1)));
                } catch (const std::exception&) {
                    throw IntegrityError("factor data line " + std::to_string(lineno) +
                                         ": bad multiplicity in \"" + tok + "\"");
                }
            }
            try {
                entries.push_back({bignat_from_decimal(prime), mult});
            } catch (const ArgumentError& e) {
                throw IntegrityError("factor data line " + std::to_string(lineno) +
                                     ": " + e.what());
            }
        }
        tables.push_back(FactorTable::checked(n, std::move(entries)));
    }
    return tables;
}

namespace {

const std::map<unsigned, FactorTable>& shipped_tables() {
    static std::once_flag flag;
    static std::map<unsigned, FactorTable> tables;
    std::call_once(flag, [] {
        std::istringstream in(detail::kFactorData);
        for (FactorTable& t : parse_factor_stream(in)) {
            const unsigned n = t.n();
            tables.emplace(n, std::move(t));
        }
    });
    return tables;
}

}  // namespace

const FactorTable& load_table(unsigned n) {
    const auto& tables = shipped_tables();
    const auto it = tables.find(n);
    if (it == tables.end())
        throw UnlistedError("no factor table for n=" + std::to_string(n) +
                            " (supported: 16, 48, and powers of two 64..4096)");
    return it->second;
}

const FactorTable& table_for(unsigned n, const std::vector<FactorTable>& overrides) {
    for (const FactorTable& t : overrides)
        if (t.n() == n) return t;
    return load_table(n);
}

BigNat cofactor(unsigned n, const BigNat& d) {
    if (d <= 0) throw ArgumentError("cofactor: divisor must be positive");
    const BigNat modulus = pow2_minus_1(n);
    BigNat q, rem;
    boost::multiprecision::divide_qr(modulus, d, q, rem);
    if (rem != 0)
        throw ArgumentError("cofactor: " + bignat_to_decimal(d) +
                            " does not divide 2^" + std::to_string(n) + "-1");
    return q;
}

}  // namespace xorgens
