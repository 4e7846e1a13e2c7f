#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "aring/residue.hpp"

namespace aring {

/// Normalized arbitrary-precision fraction: gcd(|num|, den) = 1, den >= 1,
/// zero is 0/1.  The universal exact scalar of the project.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    // Accepts "a" or "a/b" in base 10.
    static Rational from_string(const std::string& s);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const { return Rational(::abs(q_)); }

    Rational operator+(const Rational& o) const { return Rational(q_ + o.q_); }
    Rational operator-(const Rational& o) const { return Rational(q_ - o.q_); }
    Rational operator*(const Rational& o) const { return Rational(q_ * o.q_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(q_ / o.q_);
    }
    Rational operator-() const { return Rational(-q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }

    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }  // "a" or "a/b"

private:
    explicit Rational(const mpq_class& q) : q_(q) {}  // assumed canonical
    mpq_class q_;
};

inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

/// p-adic valuation v_p(x); kValuationInfinity for x = 0.
long padic_valuation(const Rational& x, std::uint64_t p);

/// Class of a p-integral rational in Z/pZ via numerator * denominator^{-1}.
/// Throws std::domain_error when v_p(x) < 0.
Residue reduce_mod(const Rational& x, std::uint64_t p);

/// Same reduction taken mod p^2.
ResidueSq reduce_mod_sq(const Rational& x, std::uint64_t p);

/// Exact binomial coefficient as an arbitrary-precision integer.
mpz_class binom_mpz(std::uint64_t n, std::uint64_t k);

/// Generalized binomial coefficient C(x, k) = x(x-1)...(x-k+1) / k! for an
/// integer x of either sign (so C(-1, k) = (-1)^k, C(x, 0) = 1).
Rational binom_general(long long x, std::uint64_t k);

}  // namespace aring
