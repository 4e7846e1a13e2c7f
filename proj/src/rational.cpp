#include "aring/rational.hpp"

#include <stdexcept>

namespace aring {

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.q_ = q;
    return r;
}

long padic_valuation(const Rational& x, std::uint64_t p) {
    if (x.is_zero()) return kValuationInfinity;
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.numerator().get_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.denominator().get_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
}

namespace {

std::uint64_t reduce_mod_pow(const Rational& x, std::uint64_t p, std::uint64_t mod) {
    long v = padic_valuation(x, p);
    if (v == kValuationInfinity) return 0;
    if (v < 0)
        throw std::domain_error("reduce_mod: rational is not p-integral at p = " + std::to_string(p));
    std::uint64_t num = mpz_fdiv_ui(x.numerator().get_mpz_t(), mod);
    std::uint64_t den = mpz_fdiv_ui(x.denominator().get_mpz_t(), mod);
    return mulmod(num, invmod(den, mod), mod);
}

}  // namespace

Residue reduce_mod(const Rational& x, std::uint64_t p) {
    return Residue(reduce_mod_pow(x, p, p), p);
}

ResidueSq reduce_mod_sq(const Rational& x, std::uint64_t p) {
    if (p >= (1ull << 31)) throw std::domain_error("reduce_mod_sq: prime too large");
    return ResidueSq(reduce_mod_pow(x, p, p * p), p);
}

mpz_class binom_mpz(std::uint64_t n, std::uint64_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

Rational binom_general(long long x, std::uint64_t k) {
    mpz_class num(1);
    for (std::uint64_t i = 0; i < k; ++i)
        num *= mpz_class(static_cast<long>(x - static_cast<long long>(i)));
    mpz_class kfact;
    mpz_fac_ui(kfact.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(num, kfact);
}

}  // namespace aring
