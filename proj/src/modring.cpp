#include "aring/modring.hpp"

#include <gmpxx.h>

namespace aring {

namespace {

std::uint64_t binom_reduced(std::uint64_t n, std::uint64_t k, std::uint64_t mod) {
    if (k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return mpz_fdiv_ui(b.get_mpz_t(), mod);
}

}  // namespace

Residue binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    return Residue(binom_reduced(n, k, p), p);
}

ResidueSq binom_mod_sq(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    if (p >= (1ull << 31)) throw std::domain_error("binom_mod_sq: prime too large");
    return ResidueSq(binom_reduced(n, k, p * p), p);
}

Residue fermat_quotient(const Rational& x, std::uint64_t p) {
    mpz_class pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(x.numerator().get_mpz_t(), pz.get_mpz_t()) ||
        mpz_divisible_p(x.denominator().get_mpz_t(), pz.get_mpz_t()) || x.is_zero())
        throw std::domain_error("fermat_quotient: argument is not a unit at p = " + std::to_string(p));
    ResidueSq xs = reduce_mod_sq(x, p);
    ResidueSq power = xs.pow(p - 1);
    if (power.value() % p != 1)
        throw std::logic_error("fermat_quotient: Fermat's little theorem violated (internal)");
    return (power - ResidueSq(1, p)).div_exact_p();
}

Residue wilson_quotient(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31)) throw std::domain_error("wilson_quotient: bad prime");
    const std::uint64_t psq = p * p;
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i < p; ++i) fact = mulmod(fact, i, psq);
    if (fact % p != p - 1)
        throw std::logic_error("wilson_quotient: Wilson's theorem violated (internal)");
    return (ResidueSq(fact, p) + ResidueSq(1, p)).div_exact_p();
}

Residue ell_component(const Rational& x, std::uint64_t p) {
    return reduce_mod(x, p) * fermat_quotient(x, p);
}

Residue ell_component_extended(const Rational& x, std::uint64_t p) {
    long v = padic_valuation(x, p);
    if (v == kValuationInfinity || v < 0)
        throw std::domain_error("ell_component_extended: needs v_p(x) >= 0 and x != 0");
    if (v == 0) return ell_component(x, p);
    // v >= 1: (x^p - x)/p = -x/p (mod p).
    Rational over_p = x / Rational(static_cast<long>(p));
    return -reduce_mod(over_p, p);
}

}  // namespace aring
