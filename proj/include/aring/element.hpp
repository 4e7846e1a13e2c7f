#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aring/modtables.hpp"
#include "aring/primes.hpp"
#include "aring/rational.hpp"

namespace aring {

struct Counterexample {
    std::uint64_t p;
    std::uint64_t lhs;
    std::uint64_t rhs;
};

struct EqualityResult {
    bool pass = true;
    std::uint64_t compared_from = 0;       // first prime actually compared
    std::size_t compared = 0;              // number of primes compared
    std::vector<Counterexample> counterexamples;
};

/// An element of the big quotient ring at desk scale: one residue per prime
/// of a window.  Components at primes below defined_from may be materialized
/// (some named constants extend meaningfully below their formula's general
/// range) but carry no weight in comparisons, mirroring equality up to
/// finitely many primes.
class AElement {
public:
    AElement(PrimeWindow window, std::string label, std::uint64_t defined_from);

    const PrimeWindow& window() const { return window_; }
    const std::string& label() const { return label_; }
    std::uint64_t defined_from() const { return defined_from_; }
    void set_label(std::string label) { label_ = std::move(label); }

    void set_residue(std::uint64_t p, std::uint64_t value);
    bool has(std::uint64_t p) const { return residues_.count(p) != 0; }
    std::uint64_t at(std::uint64_t p) const;
    const std::map<std::uint64_t, std::uint64_t>& residues() const { return residues_; }

    AElement operator+(const AElement& o) const;
    AElement operator-(const AElement& o) const;
    AElement operator*(const AElement& o) const;
    AElement operator-() const;

private:
    AElement combine(const AElement& o, char op) const;

    PrimeWindow window_;
    std::string label_;
    std::uint64_t defined_from_;
    std::map<std::uint64_t, std::uint64_t> residues_;
};

/// PASS iff the two elements agree at every window prime above both
/// thresholds; otherwise the full list of disagreeing primes.
EqualityResult a_equal(const AElement& a, const AElement& b);

/// Diagonal embedding of a rational: residue x mod p at every window prime
/// not dividing the denominator.
AElement embed(const Rational& x, const PrimeWindow& w);

/// Multiplication by a rational scalar (embed, then multiply); primes hitting
/// the scalar's denominator raise the threshold.
AElement scalar_mul(const Rational& c, const AElement& a);

/// Componentwise Fermat quotient q_p(x), and ell(x) = x * q_p(x).  Primes
/// dividing the numerator or denominator of x sit below defined_from.
AElement log_A(const Rational& x, const PrimeWindow& w);
AElement ell_A(const Rational& x, const PrimeWindow& w);

/// Z(k): p-component B_{p-k}/k mod p, materialized for primes p > k.
AElement Z_A(std::uint64_t k, const PrimeWindow& w);

/// G(k): p-component G_{p-k} mod p = (-1)^k |G_{p-k}| mod p for p >= k+1.
AElement G_A(std::uint64_t k, const PrimeWindow& w, GregoryCache& cache);

/// Wilson-quotient constant (W_p mod p)_p.  Materialized from p = 2,
/// meaningful from p = 3.
AElement gamma_W(const PrimeWindow& w);

/// Truncated Mascheroni sum (sum_{n=1}^{p-2} |G_n|/n mod p)_p for p >= 3.
AElement gamma_M(const PrimeWindow& w, GregoryCache& cache);

/// Kluyver-type constant, m >= 1:
///   (m! sum_{n=1}^{p-m-1} |G_n| / (n(n+1)...(n+m)) mod p)_p + H_m - ell(m+1).
/// The component at p = m+1 (when prime) is materialized with (m+1) q_p(m+1)
/// read as (x^p - x)/p at x = p, i.e. p^{p-1} - 1; defined_from is the next
/// prime above m+1.
AElement gamma_K(std::uint64_t m, const PrimeWindow& w, GregoryCache& cache);

/// One p-component of gamma_K.  The Gregory table is only consulted for
/// p >= m+2; at the boundary p = m+1 pass gr = nullptr.
std::uint64_t gamma_K_component(std::uint64_t m, std::uint64_t p, const GregoryResidues* gr);

/// One p-component of the finite multiple zeta value
///   sum_{0 < m_1 < ... < m_r < p} 1 / (m_1^{k_1} ... m_r^{k_r}) mod p,
/// by prefix accumulation in O(r p) ring operations.
Residue finite_mzv(const std::vector<std::uint64_t>& index, std::uint64_t p);

/// The same nested sum by full enumeration; exponential in depth, usable for
/// depth <= 2 as an independent oracle.
Residue finite_mzv_naive(const std::vector<std::uint64_t>& index, std::uint64_t p);

/// Residue vector of the finite multiple zeta value over a window.
AElement finite_mzv_element(const std::vector<std::uint64_t>& index, const PrimeWindow& w);

}  // namespace aring
