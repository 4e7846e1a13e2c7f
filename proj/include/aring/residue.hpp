#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace aring {

// Product modulo m, safe for any m < 2^63.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Inverse modulo m by extended Euclid; m need not be prime but gcd(a, m) = 1.
// Throws std::domain_error on zero or non-invertible input.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

// inv[i] = i^{-1} mod p for 1 <= i <= n < p, p prime; inv[0] unused.
std::vector<std::uint64_t> inverse_table(std::uint64_t n, std::uint64_t p);

/// An integer class modulo a prime p, canonical representative in [0, p).
class Residue {
public:
    Residue(std::uint64_t value, std::uint64_t p) : value_(value % p), p_(p) {
        if (p < 2) throw std::domain_error("Residue: modulus must be >= 2");
    }

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return p_; }

    Residue operator+(const Residue& o) const { check(o); return Residue(addmod(value_, o.value_, p_), p_); }
    Residue operator-(const Residue& o) const { check(o); return Residue(submod(value_, o.value_, p_), p_); }
    Residue operator*(const Residue& o) const { check(o); return Residue(mulmod(value_, o.value_, p_), p_); }
    Residue operator-() const { return Residue(value_ == 0 ? 0 : p_ - value_, p_); }

    Residue inv() const {
        if (value_ == 0) throw std::domain_error("Residue::inv: zero is not invertible");
        return Residue(invmod(value_, p_), p_);
    }
    Residue pow(std::uint64_t e) const { return Residue(powmod(value_, e, p_), p_); }

    bool operator==(const Residue& o) const { return p_ == o.p_ && value_ == o.value_; }
    bool operator!=(const Residue& o) const { return !(*this == o); }

private:
    void check(const Residue& o) const {
        if (p_ != o.p_) throw std::logic_error("Residue: mixed moduli");
    }
    std::uint64_t value_;
    std::uint64_t p_;
};

/// An integer class modulo p^2 (p prime), canonical representative in [0, p^2).
/// Holds quantities such as (p-1)! + 1 and x^{p-1} - 1 before their exact
/// division by p.
class ResidueSq {
public:
    ResidueSq(std::uint64_t value, std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 31)) throw std::domain_error("ResidueSq: base prime out of range");
        psq_ = p * p;
        value_ = value % psq_;
    }

    std::uint64_t value() const { return value_; }
    std::uint64_t base() const { return p_; }
    std::uint64_t modulus() const { return psq_; }

    ResidueSq operator+(const ResidueSq& o) const { check(o); return ResidueSq(addmod(value_, o.value_, psq_), p_); }
    ResidueSq operator-(const ResidueSq& o) const { check(o); return ResidueSq(submod(value_, o.value_, psq_), p_); }
    ResidueSq operator*(const ResidueSq& o) const { check(o); return ResidueSq(mulmod(value_, o.value_, psq_), p_); }

    ResidueSq inv() const {
        if (value_ % p_ == 0) throw std::domain_error("ResidueSq::inv: not a unit mod p^2");
        return ResidueSq(invmod(value_, psq_), p_);
    }
    ResidueSq pow(std::uint64_t e) const { return ResidueSq(powmod(value_, e, psq_), p_); }

    Residue to_residue() const { return Residue(value_ % p_, p_); }

    // Exact division by p of a class known to be divisible by p, then
    // reduction mod p.  The workhorse behind Wilson and Fermat quotients.
    Residue div_exact_p() const {
        if (value_ % p_ != 0) throw std::logic_error("ResidueSq::div_exact_p: value not divisible by p");
        return Residue((value_ / p_) % p_, p_);
    }

    bool operator==(const ResidueSq& o) const { return p_ == o.p_ && value_ == o.value_; }
    bool operator!=(const ResidueSq& o) const { return !(*this == o); }

private:
    void check(const ResidueSq& o) const {
        if (p_ != o.p_) throw std::logic_error("ResidueSq: mixed moduli");
    }
    std::uint64_t value_;
    std::uint64_t p_;
    std::uint64_t psq_;
};

}  // namespace aring
