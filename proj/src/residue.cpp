#include "aring/residue.hpp"

namespace aring {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    a %= m;
    if (a == 0) throw std::domain_error("invmod: zero is not invertible");
    // Bezout coefficients stay below m in magnitude, so int64 is safe for
    // every modulus this project uses (m < 2^62).
    std::int64_t t0 = 0, t1 = 1;
    std::uint64_t r0 = m, r1 = a;
    while (r1 != 0) {
        std::uint64_t q = r0 / r1;
        std::int64_t t2 = t0 - static_cast<std::int64_t>(q) * t1;
        t0 = t1;
        t1 = t2;
        std::uint64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
    }
    if (r0 != 1) throw std::domain_error("invmod: argument shares a factor with the modulus");
    return static_cast<std::uint64_t>(t0 < 0 ? t0 + static_cast<std::int64_t>(m) : t0);
}

std::vector<std::uint64_t> inverse_table(std::uint64_t n, std::uint64_t p) {
    if (n >= p) throw std::domain_error("inverse_table: n must be < p");
    std::vector<std::uint64_t> inv(n + 1, 0);
    if (n >= 1) inv[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i)
        inv[i] = mulmod(p - p / i, inv[p % i], p);
    return inv;
}

}  // namespace aring
