#include "aring/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace aring {

namespace {

std::shared_ptr<const std::vector<bool>> composite_bitmap(std::uint64_t limit) {
    auto bits = std::make_shared<std::vector<bool>>(limit + 1, false);
    auto& c = *bits;
    c[0] = true;
    if (limit >= 1) c[1] = true;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!c[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) c[j] = true;
    return bits;
}

}  // namespace

std::vector<std::uint64_t> sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    auto bits = composite_bitmap(limit);
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!(*bits)[i]) out.push_back(i);
    return out;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime_u64(c)) ++c;
    return c;
}

PrimeWindow::PrimeWindow(std::uint64_t p_min, std::uint64_t p_max,
                         std::vector<std::uint64_t> excluded)
    : p_min_(p_min), p_max_(p_max), excluded_(std::move(excluded)) {
    if (p_min_ > p_max_) throw std::invalid_argument("PrimeWindow: p_min > p_max");
    std::sort(excluded_.begin(), excluded_.end());
    excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
    composite_ = composite_bitmap(p_max_);
}

bool PrimeWindow::is_excluded(std::uint64_t p) const {
    return std::binary_search(excluded_.begin(), excluded_.end(), p);
}

bool PrimeWindow::contains(std::uint64_t p) const {
    return p >= p_min_ && p <= p_max_ && !(*composite_)[p] && !is_excluded(p);
}

std::uint64_t PrimeWindow::next_after(std::uint64_t n) const {
    std::uint64_t c = std::max(n + 1, p_min_);
    for (; c <= p_max_; ++c)
        if (!(*composite_)[c] && !is_excluded(c)) return c;
    return 0;
}

std::vector<std::uint64_t> PrimeWindow::primes() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : *this) out.push_back(p);
    return out;
}

}  // namespace aring
