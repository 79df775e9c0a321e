#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovalprimes/numerics.hpp"

namespace ovalprimes {

// von Mangoldt table up to a fixed limit: Lambda(n) = log p when n = p^k,
// 0 otherwise.  Also carries prime flags, the prime-counting prefix pi(n),
// and the Chebyshev prefix psi(n) = sum_{m<=n} Lambda(m) accumulated with
// compensated summation (so psi lookups equal a fresh Kahan sum bit for bit).
// Immutable once built.
class MangoldtTable {
public:
    static MangoldtTable build(std::uint64_t limit) {
        if (limit < 1)
            throw std::invalid_argument("MangoldtTable: limit must be >= 1");
        if (limit > max_limit)
            throw std::length_error("MangoldtTable: limit exceeds supported size");
        MangoldtTable t;
        t.limit_ = limit;
        t.values_.assign(limit + 1, 0.0);
        t.sieve_flags();

        // one log per prime, propagated to its powers
        for (std::uint64_t p = 2; p <= limit; ++p) {
            if (!t.prime_[p]) continue;
            const double lp = std::log(static_cast<double>(p));
            for (std::uint64_t q = p; q <= limit; q *= p) {
                t.values_[q] = lp;
                if (q > limit / p) break;
            }
        }
        t.build_prefixes();
        return t;
    }

    std::uint64_t limit() const { return limit_; }

    double lambda(std::uint64_t n) const {
        check_range(n);
        return values_[n];
    }

    bool is_prime(std::uint64_t n) const {
        check_range(n);
        return prime_[n];
    }

    // Chebyshev psi(x) = sum_{n <= floor(x)} Lambda(n); x may be fractional.
    double psi(double x) const {
        if (x > static_cast<double>(limit_))
            throw std::domain_error("MangoldtTable: psi argument exceeds table limit");
        if (x < 1.0) return 0.0;
        return psi_prefix_[static_cast<std::uint64_t>(x)];
    }

    // pi(n): number of primes <= n.
    std::uint64_t prime_count(std::uint64_t n) const {
        if (n > limit_)
            throw std::domain_error("MangoldtTable: prime_count argument exceeds table limit");
        if (n < 2) return 0;
        return pi_prefix_[n];
    }

    // --- binary cache -----------------------------------------------------
    // Layout: 8 magic bytes, little-endian u64 limit, raw Lambda values for
    // n = 1..limit.  Prefixes and flags are rebuilt on load, so results are
    // identical with or without the cache.

    void save_cache(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("MangoldtTable: cannot open cache for writing: " + path);
        out.write(magic, 8);
        std::uint64_t n = limit_;
        out.write(reinterpret_cast<const char*>(&n), 8);
        out.write(reinterpret_cast<const char*>(values_.data() + 1),
                  static_cast<std::streamsize>(sizeof(double) * limit_));
        if (!out) throw std::runtime_error("MangoldtTable: cache write failed: " + path);
    }

    static MangoldtTable load_cache(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("MangoldtTable: cannot open cache: " + path);
        char m[8];
        in.read(m, 8);
        if (!in || std::memcmp(m, magic, 8) != 0)
            throw std::runtime_error("MangoldtTable: bad cache magic: " + path);
        std::uint64_t n = 0;
        in.read(reinterpret_cast<char*>(&n), 8);
        if (!in || n < 1 || n > max_limit)
            throw std::runtime_error("MangoldtTable: bad cache header: " + path);
        MangoldtTable t;
        t.limit_ = n;
        t.values_.assign(n + 1, 0.0);
        in.read(reinterpret_cast<char*>(t.values_.data() + 1),
                static_cast<std::streamsize>(sizeof(double) * n));
        if (!in) throw std::runtime_error("MangoldtTable: truncated cache: " + path);
        t.sieve_flags();
        t.build_prefixes();
        return t;
    }

private:
    static constexpr std::uint64_t max_limit = std::uint64_t(1) << 31;
    static constexpr char magic[9] = "OVPMANG1";

    void check_range(std::uint64_t n) const {
        if (n < 1 || n > limit_)
            throw std::domain_error("MangoldtTable: index outside [1,limit]");
    }

    void sieve_flags() {
        prime_.assign(limit_ + 1, true);
        prime_[0] = false;
        if (limit_ >= 1) prime_[1] = false;
        for (std::uint64_t p = 2; p * p <= limit_; ++p)
            if (prime_[p])
                for (std::uint64_t q = p * p; q <= limit_; q += p) prime_[q] = false;
    }

    void build_prefixes() {
        psi_prefix_.assign(limit_ + 1, 0.0);
        pi_prefix_.assign(limit_ + 1, 0);
        KahanSum acc;
        std::uint32_t np = 0;
        for (std::uint64_t n = 1; n <= limit_; ++n) {
            acc.add(values_[n]);
            psi_prefix_[n] = acc.value();
            if (prime_[n]) ++np;
            pi_prefix_[n] = np;
        }
    }

    std::uint64_t limit_ = 0;
    std::vector<double> values_;      // Lambda(n), index 0 unused
    std::vector<bool> prime_;
    std::vector<double> psi_prefix_;
    std::vector<std::uint32_t> pi_prefix_;
};

inline double chebyshev_psi(const MangoldtTable& table, double x) { return table.psi(x); }

} // namespace ovalprimes
