#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "aring/tables.hpp"

namespace aring {

/// Per-prime residues of the Gregory coefficients: abs_g[n] = |G_n| mod p
/// for 1 <= n <= p-2, generated by the recurrence carried out entirely
/// mod p (every denominator is < p, hence invertible).  regularized_tail is
/// the class of G_{p-1} + 1/p, obtained from the recurrence instance k = p:
///     G_{p-1} + 1/p = sum_{n=1}^{p-2} |G_n| / (p-n).
struct GregoryResidues {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> abs_g;   // index 0 unused; valid 1..p-2
    std::uint64_t regularized_tail = 0;
};

/// Build the Gregory residue table for an odd prime p.  O(p^2) word ops.
GregoryResidues gregory_mod_p(std::uint64_t p);

/// Row n (0 <= n <= p-1) of the chosen Stirling triangle reduced mod p.
std::vector<std::uint64_t> stirling_row_mod_p(std::uint64_t p, StirlingKind kind,
                                              std::uint64_t n);

/// B_n mod p for 0 <= n <= p-2, via the second-kind Stirling expansion
/// B_n = (-1)^n sum_{m=0}^{n} (-1)^m m! {n m} / (m+1); every denominator
/// m+1 <= n+1 <= p-1 is invertible.  O(n^2).
std::uint64_t bernoulli_mod_p(std::uint64_t n, std::uint64_t p);

/// Memoized, thread-safe store of Gregory residue tables keyed by prime.
/// The tables dominate the cost of every Gregory-based suite, so verifiers
/// running over overlapping windows share one cache.
class GregoryCache {
public:
    std::shared_ptr<const GregoryResidues> get(std::uint64_t p);

    /// Pre-populate (e.g. from a persisted cache file).  Entries for primes
    /// already present are ignored.
    void put(GregoryResidues table);

    std::vector<std::uint64_t> cached_primes() const;

private:
    mutable std::mutex mu_;
    std::map<std::uint64_t, std::shared_ptr<const GregoryResidues>> tables_;
};

}  // namespace aring
