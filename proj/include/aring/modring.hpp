#pragma once

#include <cstdint>

#include "aring/rational.hpp"
#include "aring/residue.hpp"

namespace aring {

/// Exact binomial coefficient C(n, k) reduced mod p; 0 when k > n.
Residue binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// Exact binomial coefficient C(n, k) reduced mod p^2.
ResidueSq binom_mod_sq(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// Fermat quotient q_p(x) = (x^{p-1} - 1)/p mod p for a rational x whose
/// numerator and denominator are both prime to p.  Computed through mod-p^2
/// exponentiation; the intermediate x^{p-1} is checked to be 1 mod p before
/// the quotient is formed.
Residue fermat_quotient(const Rational& x, std::uint64_t p);

/// Wilson quotient W_p = ((p-1)! + 1)/p mod p, via the incremental factorial
/// mod p^2.  Wilson's theorem is checked before dividing.
Residue wilson_quotient(std::uint64_t p);

/// x * q_p(x) mod p for a p-unit x.
Residue ell_component(const Rational& x, std::uint64_t p);

/// (x^p - x)/p mod p, defined for every rational x with v_p(x) >= 0.
/// For p-units this equals x * q_p(x); for v_p(x) >= 1 it equals -x/p mod p
/// (in particular, for x = p it is p^{p-1} - 1 reduced mod p, i.e. p - 1).
Residue ell_component_extended(const Rational& x, std::uint64_t p);

}  // namespace aring
