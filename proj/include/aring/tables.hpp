#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aring/rational.hpp"

namespace aring {

/// Gregory coefficients G_n (Bernoulli numbers of the second kind),
/// coefficients of x/log(1+x) - 1.  Built exactly by the recurrence
///     |G_k| = 1/(k+1) - sum_{n<k} |G_n| / (k+1-n),
/// signs alternating with G_1 = 1/2 > 0.  Construction cross-checks the
/// first min(N, 30) entries against the Stirling-number formula
///     G_n = ((-1)^n / n!) * sum_{m=1}^{n} (-1)^m [n m] / (m+1).
class GregoryTable {
public:
    explicit GregoryTable(std::size_t n_max);

    std::size_t size() const { return g_.size() - 1; }
    const Rational& at(std::size_t n) const;   // G_n, 1 <= n <= size()
    Rational abs(std::size_t n) const { return at(n).abs(); }

private:
    std::vector<Rational> g_;  // g_[0] unused
};

/// Bernoulli numbers with the B_1 = +1/2 convention, i.e. the expansion of
/// x / (1 - e^{-x}).  Construction cross-checks n <= min(N, 30) against the
/// second-kind Stirling sum B_n = (-1)^n sum_m (-1)^m m! {n m} / (m+1).
class BernoulliTable {
public:
    explicit BernoulliTable(std::size_t n_max);

    std::size_t size() const { return b_.size() - 1; }
    const Rational& at(std::size_t n) const;   // B_n, 0 <= n <= size()

private:
    std::vector<Rational> b_;
};

enum class StirlingKind { FirstUnsigned, Second };

/// Triangle of Stirling numbers, unsigned first kind [n m] or second kind
/// {n m}, by the standard two-term recurrences.  Second-kind rows n <= 20
/// are verified against the alternating-binomial explicit formula.
class StirlingTriangle {
public:
    StirlingTriangle(StirlingKind kind, std::size_t n_max);

    StirlingKind kind() const { return kind_; }
    std::size_t size() const { return rows_.size() - 1; }

    /// Entry (n, m); zero outside 0 <= m <= n.
    const mpz_class& at(std::size_t n, std::size_t m) const;

private:
    StirlingKind kind_;
    std::vector<std::vector<mpz_class>> rows_;
    mpz_class zero_;
};

/// Second-kind Stirling number via the explicit alternating sum
/// {n m} = ((-1)^m / m!) sum_{l=0}^{m} (-1)^l C(m,l) l^n.  Exact; used as
/// the independent route for triangle verification.
mpz_class stirling2_explicit(std::size_t n, std::size_t m);

/// H_m = sum_{j=1}^{m} 1/j, with H_0 = 0.
Rational harmonic(std::size_t m);

struct BetaValue {
    std::size_t n;
    std::uint64_t p;
    Rational value;
};

/// beta_n = B_n/n when (p-1) does not divide n, (B_n + 1/p - 1)/n otherwise.
/// The result is certified p-integral (a consequence of Clausen-von Staudt);
/// a negative valuation raises std::logic_error.
BetaValue beta_value(std::size_t n, std::uint64_t p, const BernoulliTable& bernoulli);

/// |G_n| for 1 <= n <= n_max in double precision, by the same recurrence as
/// the exact table.
std::vector<double> gregory_abs_float(std::size_t n_max);

/// Partial sum of the Gregory-coefficient series for Euler's constant:
///     m! * sum_{n=1}^{N} |G_n| / (n(n+1)...(n+m)) + H_m - log(m+1).
/// m = 0 is the plain sum of |G_n|/n.
double gamma_float(unsigned m, std::size_t n_terms);
double gamma_float(unsigned m, std::size_t n_terms, const std::vector<double>& abs_g);

/// Reference value of Euler's constant for deviation reporting.
inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024;

}  // namespace aring
