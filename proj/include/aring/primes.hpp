#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace aring {

/// All primes <= limit in increasing order; empty for limit < 2.
std::vector<std::uint64_t> sieve(std::uint64_t limit);

/// Deterministic trial-division primality check.  Used as the independent
/// oracle for sieve output and for small ad-hoc queries.
bool is_prime_u64(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime_above(std::uint64_t n);

/// Iterable range of primes p with p_min <= p <= p_max minus an excluded set.
/// Iteration is lazy over a shared sieve bitmap so per-prime work can stream.
class PrimeWindow {
public:
    PrimeWindow() : PrimeWindow(2, 2) {}
    PrimeWindow(std::uint64_t p_min, std::uint64_t p_max,
                std::vector<std::uint64_t> excluded = {});

    std::uint64_t p_min() const { return p_min_; }
    std::uint64_t p_max() const { return p_max_; }
    const std::vector<std::uint64_t>& excluded() const { return excluded_; }

    bool contains(std::uint64_t p) const;

    /// Materialized prime list (increasing).
    std::vector<std::uint64_t> primes() const;

    class iterator {
    public:
        using value_type = std::uint64_t;
        iterator(const PrimeWindow* w, std::uint64_t cur) : w_(w), cur_(cur) {}
        std::uint64_t operator*() const { return cur_; }
        iterator& operator++() { cur_ = w_->next_after(cur_); return *this; }
        bool operator==(const iterator& o) const { return cur_ == o.cur_; }
        bool operator!=(const iterator& o) const { return cur_ != o.cur_; }
    private:
        const PrimeWindow* w_;
        std::uint64_t cur_;  // 0 = end
    };

    iterator begin() const { return iterator(this, next_after(p_min_ == 0 ? 0 : p_min_ - 1)); }
    iterator end() const { return iterator(this, 0); }

    // Windows are equal when they describe the same prime set.
    bool operator==(const PrimeWindow& o) const {
        return p_min_ == o.p_min_ && p_max_ == o.p_max_ && excluded_ == o.excluded_;
    }
    bool operator!=(const PrimeWindow& o) const { return !(*this == o); }

private:
    friend class iterator;
    std::uint64_t next_after(std::uint64_t n) const;  // next window prime > n, 0 if none
    bool is_excluded(std::uint64_t p) const;

    std::uint64_t p_min_;
    std::uint64_t p_max_;
    std::vector<std::uint64_t> excluded_;                  // sorted, unique
    std::shared_ptr<const std::vector<bool>> composite_;   // [0, p_max]
};

}  // namespace aring
