#include "aring/modtables.hpp"

#include <stdexcept>
#include <string>

#include "aring/residue.hpp"

namespace aring {

namespace {

// Partial sums of a[n] * inv[k - n] stay below 2^63 as long as p^3 does:
// each term is < p^2 and there are fewer than p of them.
constexpr std::uint64_t kLazyLimit = 1ull << 21;

}  // namespace

GregoryResidues gregory_mod_p(std::uint64_t p) {
    if (p < 3) throw std::invalid_argument("gregory_mod_p: needs an odd prime");
    GregoryResidues out;
    out.p = p;
    const std::uint64_t n_max = p - 2;
    const auto inv = inverse_table(p - 1, p);
    auto& g = out.abs_g;
    g.assign(n_max + 1, 0);
    for (std::uint64_t k = 1; k <= n_max; ++k) {
        std::uint64_t acc = 0;
        if (p < kLazyLimit) {
            for (std::uint64_t n = 1; n < k; ++n) acc += g[n] * inv[k + 1 - n];
            acc %= p;
        } else {
            for (std::uint64_t n = 1; n < k; ++n)
                acc = addmod(acc, mulmod(g[n], inv[k + 1 - n], p), p);
        }
        g[k] = submod(inv[k + 1], acc, p);
    }
    std::uint64_t tail = 0;
    if (p < kLazyLimit) {
        for (std::uint64_t n = 1; n <= n_max; ++n) tail += g[n] * inv[p - n];
        tail %= p;
    } else {
        for (std::uint64_t n = 1; n <= n_max; ++n)
            tail = addmod(tail, mulmod(g[n], inv[p - n], p), p);
    }
    out.regularized_tail = tail;
    return out;
}

std::vector<std::uint64_t> stirling_row_mod_p(std::uint64_t p, StirlingKind kind,
                                              std::uint64_t n) {
    if (n > p - 1) throw std::invalid_argument("stirling_row_mod_p: needs n <= p-1");
    std::vector<std::uint64_t> row{1 % p};
    std::vector<std::uint64_t> next;
    for (std::uint64_t r = 1; r <= n; ++r) {
        next.assign(r + 1, 0);
        for (std::uint64_t m = 1; m <= r; ++m) {
            std::uint64_t up = (m <= r - 1) ? row[m] : 0;
            std::uint64_t factor = (kind == StirlingKind::FirstUnsigned) ? (r - 1) % p : m % p;
            next[m] = addmod(row[m - 1], mulmod(factor, up, p), p);
        }
        row.swap(next);
    }
    return row;
}

std::uint64_t bernoulli_mod_p(std::uint64_t n, std::uint64_t p) {
    if (n > p - 2) throw std::invalid_argument("bernoulli_mod_p: needs n <= p-2");
    const auto row = stirling_row_mod_p(p, StirlingKind::Second, n);
    const auto inv = inverse_table(p - 1, p);
    std::uint64_t sum = 0;
    std::uint64_t mfact = 1;
    for (std::uint64_t m = 0; m <= n; ++m) {
        if (m > 0) mfact = mulmod(mfact, m, p);
        std::uint64_t term = mulmod(mulmod(mfact, row[m], p), inv[m + 1], p);
        sum = (m % 2 == 0) ? addmod(sum, term, p) : submod(sum, term, p);
    }
    return (n % 2 == 0) ? sum : submod(0, sum, p);
}

std::shared_ptr<const GregoryResidues> GregoryCache::get(std::uint64_t p) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = tables_.find(p);
        if (it != tables_.end()) return it->second;
    }
    auto table = std::make_shared<const GregoryResidues>(gregory_mod_p(p));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = tables_.emplace(p, table);
    return it->second;
}

void GregoryCache::put(GregoryResidues table) {
    std::lock_guard<std::mutex> lock(mu_);
    std::uint64_t p = table.p;
    tables_.emplace(p, std::make_shared<const GregoryResidues>(std::move(table)));
}

std::vector<std::uint64_t> GregoryCache::cached_primes() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<std::uint64_t> out;
    out.reserve(tables_.size());
    for (const auto& [p, _] : tables_) out.push_back(p);
    return out;
}

}  // namespace aring
