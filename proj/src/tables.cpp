#include "aring/tables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aring {

namespace {

mpz_class factorial(std::size_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class binom(std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace

GregoryTable::GregoryTable(std::size_t n_max) {
    if (n_max < 1) throw std::invalid_argument("GregoryTable: n_max must be >= 1");
    g_.assign(n_max + 1, Rational());
    std::vector<Rational> abs(n_max + 1, Rational());
    for (std::size_t k = 1; k <= n_max; ++k) {
        Rational s(1, static_cast<long>(k + 1));
        for (std::size_t n = 1; n < k; ++n)
            s -= abs[n] / Rational(static_cast<long>(k + 1 - n));
        abs[k] = s;
        g_[k] = (k % 2 == 1) ? s : -s;
    }

    // Independent route for the leading entries: the signed Stirling sum.
    std::size_t n_check = std::min<std::size_t>(n_max, 30);
    StirlingTriangle st1(StirlingKind::FirstUnsigned, n_check);
    for (std::size_t n = 1; n <= n_check; ++n) {
        Rational sum;
        for (std::size_t m = 1; m <= n; ++m) {
            Rational term(st1.at(n, m), mpz_class(static_cast<unsigned long>(m + 1)));
            sum = (m % 2 == 1) ? sum - term : sum + term;
        }
        Rational byst1 = sum / Rational(factorial(n));
        if (n % 2 == 1) byst1 = -byst1;
        if (byst1 != g_[n])
            throw std::logic_error("GregoryTable: recurrence and Stirling route disagree at n = " +
                                   std::to_string(n));
    }
}

const Rational& GregoryTable::at(std::size_t n) const {
    if (n < 1 || n >= g_.size()) throw std::out_of_range("GregoryTable::at");
    return g_[n];
}

BernoulliTable::BernoulliTable(std::size_t n_max) {
    b_.assign(n_max + 1, Rational());
    b_[0] = Rational(1);
    // From x = (1 - e^{-x}) * sum B_n x^n / n!:
    //   B_n = (1/(n+1)) * sum_{m=2}^{n+1} (-1)^m C(n+1, m) B_{n+1-m}.
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational s;
        for (std::size_t m = 2; m <= n + 1; ++m) {
            Rational term = Rational(binom(n + 1, m)) * b_[n + 1 - m];
            s = (m % 2 == 0) ? s + term : s - term;
        }
        b_[n] = s / Rational(static_cast<long>(n + 1));
    }

    // Cross-check against the second-kind Stirling expansion.
    std::size_t n_check = std::min<std::size_t>(n_max, 30);
    StirlingTriangle st2(StirlingKind::Second, n_check);
    for (std::size_t n = 0; n <= n_check; ++n) {
        Rational sum;
        for (std::size_t m = 0; m <= n; ++m) {
            Rational term(factorial(m) * st2.at(n, m), mpz_class(static_cast<unsigned long>(m + 1)));
            sum = (m % 2 == 0) ? sum + term : sum - term;
        }
        if (n % 2 == 1) sum = -sum;
        if (sum != b_[n])
            throw std::logic_error("BernoulliTable: recurrence and Stirling route disagree at n = " +
                                   std::to_string(n));
    }
}

const Rational& BernoulliTable::at(std::size_t n) const {
    if (n >= b_.size()) throw std::out_of_range("BernoulliTable::at");
    return b_[n];
}

StirlingTriangle::StirlingTriangle(StirlingKind kind, std::size_t n_max)
    : kind_(kind), zero_(0) {
    rows_.resize(n_max + 1);
    rows_[0] = {mpz_class(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        rows_[n].assign(n + 1, mpz_class(0));
        for (std::size_t m = 1; m <= n; ++m) {
            const mpz_class& diag = rows_[n - 1][m - 1];
            const mpz_class& up = (m <= n - 1) ? rows_[n - 1][m] : zero_;
            if (kind == StirlingKind::FirstUnsigned)
                rows_[n][m] = diag + mpz_class(static_cast<unsigned long>(n - 1)) * up;
            else
                rows_[n][m] = diag + mpz_class(static_cast<unsigned long>(m)) * up;
        }
    }

    if (kind == StirlingKind::Second) {
        std::size_t n_check = std::min<std::size_t>(n_max, 20);
        for (std::size_t n = 0; n <= n_check; ++n)
            for (std::size_t m = 0; m <= n; ++m)
                if (stirling2_explicit(n, m) != rows_[n][m])
                    throw std::logic_error("StirlingTriangle: explicit formula disagrees at (" +
                                           std::to_string(n) + ", " + std::to_string(m) + ")");
    }
}

const mpz_class& StirlingTriangle::at(std::size_t n, std::size_t m) const {
    if (n >= rows_.size()) throw std::out_of_range("StirlingTriangle::at");
    if (m > n) return zero_;
    return rows_[n][m];
}

mpz_class stirling2_explicit(std::size_t n, std::size_t m) {
    mpz_class sum(0);
    for (std::size_t l = 0; l <= m; ++l) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(n));
        mpz_class term = binom(m, l) * pw;
        if (l % 2 == 1) term = -term;
        sum += term;
    }
    if (m % 2 == 1) sum = -sum;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), factorial(m).get_mpz_t());
    if (r != 0) throw std::logic_error("stirling2_explicit: sum not divisible by m!");
    return q;
}

Rational harmonic(std::size_t m) {
    Rational h;
    for (std::size_t j = 1; j <= m; ++j) h += Rational(1, static_cast<long>(j));
    return h;
}

BetaValue beta_value(std::size_t n, std::uint64_t p, const BernoulliTable& bernoulli) {
    if (n < 1) throw std::invalid_argument("beta_value: n must be >= 1");
    Rational num = bernoulli.at(n);
    if (n % (p - 1) == 0)
        num = num + Rational(1, static_cast<long>(p)) - Rational(1);
    Rational value = num / Rational(static_cast<long>(n));
    if (padic_valuation(value, p) < 0)
        throw std::logic_error("beta_value: not p-integral (contradicts Clausen-von Staudt)");
    return BetaValue{n, p, value};
}

std::vector<double> gregory_abs_float(std::size_t n_max) {
    std::vector<double> a(n_max + 1, 0.0);
    for (std::size_t k = 1; k <= n_max; ++k) {
        double s = 1.0 / static_cast<double>(k + 1);
        for (std::size_t n = 1; n < k; ++n)
            s -= a[n] / static_cast<double>(k + 1 - n);
        a[k] = s;
    }
    return a;
}

double gamma_float(unsigned m, std::size_t n_terms, const std::vector<double>& abs_g) {
    if (n_terms >= abs_g.size())
        throw std::invalid_argument("gamma_float: not enough precomputed coefficients");
    double mfact = 1.0;
    for (unsigned i = 2; i <= m; ++i) mfact *= i;
    double sum = 0.0;
    for (std::size_t n = 1; n <= n_terms; ++n) {
        double fall = 1.0;
        for (unsigned i = 0; i <= m; ++i) fall *= static_cast<double>(n + i);
        sum += abs_g[n] / fall;
    }
    double h = 0.0;
    for (unsigned j = 1; j <= m; ++j) h += 1.0 / j;
    return mfact * sum + h - std::log(static_cast<double>(m + 1));
}

double gamma_float(unsigned m, std::size_t n_terms) {
    return gamma_float(m, n_terms, gregory_abs_float(n_terms));
}

}  // namespace aring
