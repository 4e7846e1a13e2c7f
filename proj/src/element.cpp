#include "aring/element.hpp"

#include <algorithm>
#include <stdexcept>

#include "aring/modring.hpp"

namespace aring {

AElement::AElement(PrimeWindow window, std::string label, std::uint64_t defined_from)
    : window_(std::move(window)), label_(std::move(label)), defined_from_(defined_from) {}

void AElement::set_residue(std::uint64_t p, std::uint64_t value) {
    residues_[p] = value % p;
}

std::uint64_t AElement::at(std::uint64_t p) const {
    auto it = residues_.find(p);
    if (it == residues_.end())
        throw std::out_of_range("AElement::at: no residue at p = " + std::to_string(p));
    return it->second;
}

AElement AElement::combine(const AElement& o, char op) const {
    if (window_ != o.window_)
        throw std::invalid_argument("AElement: ring operations need identical windows");
    AElement out(window_, "(" + label_ + std::string(1, op) + o.label_ + ")",
                 std::max(defined_from_, o.defined_from_));
    for (const auto& [p, v] : residues_) {
        auto it = o.residues_.find(p);
        if (it == o.residues_.end()) continue;
        std::uint64_t w = it->second;
        std::uint64_t r = 0;
        switch (op) {
            case '+': r = addmod(v, w, p); break;
            case '-': r = submod(v, w, p); break;
            case '*': r = mulmod(v, w, p); break;
        }
        out.residues_[p] = r;
    }
    return out;
}

AElement AElement::operator+(const AElement& o) const { return combine(o, '+'); }
AElement AElement::operator-(const AElement& o) const { return combine(o, '-'); }
AElement AElement::operator*(const AElement& o) const { return combine(o, '*'); }

AElement AElement::operator-() const {
    AElement out(window_, "(-" + label_ + ")", defined_from_);
    for (const auto& [p, v] : residues_) out.residues_[p] = (v == 0) ? 0 : p - v;
    return out;
}

EqualityResult a_equal(const AElement& a, const AElement& b) {
    if (a.window() != b.window())
        throw std::invalid_argument("a_equal: elements live over different windows");
    EqualityResult res;
    std::uint64_t from = std::max(a.defined_from(), b.defined_from());
    for (std::uint64_t p : a.window()) {
        if (p < from) continue;
        if (res.compared == 0) res.compared_from = p;
        ++res.compared;
        std::uint64_t va = a.at(p);
        std::uint64_t vb = b.at(p);
        if (va != vb) {
            res.pass = false;
            res.counterexamples.push_back({p, va, vb});
        }
    }
    return res;
}

namespace {

// Largest prime factor appearing in numerator or denominator, 1 if none.
std::uint64_t max_bad_prime(const Rational& x) {
    mpz_class n = ::abs(x.numerator()) * x.denominator();
    std::uint64_t worst = 1;
    if (n <= 1) return worst;
    mpz_class rest = n;
    for (std::uint64_t d = 2; mpz_class(d) * d <= rest; ++d) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            worst = d;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), d))
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
        }
    }
    if (rest > 1) {
        if (!rest.fits_ulong_p())
            throw std::domain_error("max_bad_prime: prime factor exceeds 64 bits");
        worst = std::max<std::uint64_t>(worst, rest.get_ui());
    }
    return worst;
}

}  // namespace

AElement embed(const Rational& x, const PrimeWindow& w) {
    std::uint64_t worst = 1;
    if (x.denominator() != 1) worst = max_bad_prime(Rational(x.denominator()));
    AElement out(w, x.str(), std::max<std::uint64_t>(2, worst + 1));
    for (std::uint64_t p : w)
        if (padic_valuation(x, p) >= 0) out.set_residue(p, reduce_mod(x, p).value());
    return out;
}

AElement scalar_mul(const Rational& c, const AElement& a) {
    AElement prod = embed(c, a.window()) * a;
    prod.set_label(c.str() + "*" + a.label());
    return prod;
}

AElement log_A(const Rational& x, const PrimeWindow& w) {
    if (x.is_zero()) throw std::domain_error("log_A: zero argument");
    std::uint64_t from = std::max<std::uint64_t>(2, max_bad_prime(x) + 1);
    AElement out(w, "log(" + x.str() + ")", from);
    for (std::uint64_t p : w) {
        if (p < from) continue;
        out.set_residue(p, fermat_quotient(x, p).value());
    }
    return out;
}

AElement ell_A(const Rational& x, const PrimeWindow& w) {
    if (x.is_zero()) throw std::domain_error("ell_A: zero argument");
    std::uint64_t from = std::max<std::uint64_t>(2, max_bad_prime(x) + 1);
    AElement out(w, "ell(" + x.str() + ")", from);
    for (std::uint64_t p : w) {
        if (p < from) continue;
        out.set_residue(p, ell_component(x, p).value());
    }
    return out;
}

AElement Z_A(std::uint64_t k, const PrimeWindow& w) {
    if (k < 2) throw std::invalid_argument("Z_A: needs k >= 2");
    std::uint64_t from = next_prime_above(k);
    AElement out(w, "Z(" + std::to_string(k) + ")", from);
    for (std::uint64_t p : w) {
        if (p <= k) continue;
        std::uint64_t b = bernoulli_mod_p(p - k, p);
        out.set_residue(p, mulmod(b, invmod(k % p, p), p));
    }
    return out;
}

AElement G_A(std::uint64_t k, const PrimeWindow& w, GregoryCache& cache) {
    if (k < 2) throw std::invalid_argument("G_A: needs k >= 2");
    AElement out(w, "G(" + std::to_string(k) + ")", k + 1);
    for (std::uint64_t p : w) {
        if (p < k + 1) continue;
        auto gr = cache.get(p);
        std::uint64_t a = gr->abs_g[p - k];
        // G_n = (-1)^{n-1} |G_n| and n = p-k with p odd, so the sign is (-1)^k.
        out.set_residue(p, (k % 2 == 0) ? a : submod(0, a, p));
    }
    return out;
}

AElement gamma_W(const PrimeWindow& w) {
    AElement out(w, "gammaW", 3);
    for (std::uint64_t p : w) out.set_residue(p, wilson_quotient(p).value());
    return out;
}

AElement gamma_M(const PrimeWindow& w, GregoryCache& cache) {
    AElement out(w, "gammaM", 3);
    for (std::uint64_t p : w) {
        if (p < 3) continue;
        auto gr = cache.get(p);
        const auto inv = inverse_table(p - 1, p);
        std::uint64_t acc = 0;
        for (std::uint64_t n = 1; n + 2 <= p; ++n)
            acc = addmod(acc, mulmod(gr->abs_g[n], inv[n], p), p);
        out.set_residue(p, acc);
    }
    return out;
}

std::uint64_t gamma_K_component(std::uint64_t m, std::uint64_t p, const GregoryResidues* gr) {
    // m! sum_{n=1}^{p-m-1} |G_n| / (n (n+1) ... (n+m)) + H_m - ell_p(m+1).
    // At p = m+1 the sum is empty and ell is the (x^p - x)/p reading at x = p.
    std::uint64_t acc = 0;
    if (p >= m + 2) {
        const auto inv = inverse_table(p - 1, p);
        std::uint64_t fall_inv = 1;  // 1 / (n (n+1) ... (n+m)), starting at n = 1
        for (std::uint64_t i = 1; i <= m + 1; ++i) fall_inv = mulmod(fall_inv, inv[i], p);
        for (std::uint64_t n = 1; n + m + 1 <= p; ++n) {
            acc = addmod(acc, mulmod(gr->abs_g[n], fall_inv, p), p);
            if (n + m + 2 <= p)
                fall_inv = mulmod(mulmod(fall_inv, n % p, p), inv[n + m + 1], p);
        }
        std::uint64_t mfact = 1;
        for (std::uint64_t i = 2; i <= m; ++i) mfact = mulmod(mfact, i, p);
        acc = mulmod(acc, mfact, p);
    }
    std::uint64_t h = reduce_mod(harmonic(m), p).value();
    std::uint64_t ell = ell_component_extended(Rational(static_cast<long>(m + 1)), p).value();
    return submod(addmod(acc, h, p), ell, p);
}

AElement gamma_K(std::uint64_t m, const PrimeWindow& w, GregoryCache& cache) {
    if (m < 1) throw std::invalid_argument("gamma_K: needs m >= 1");
    AElement out(w, "gammaK(" + std::to_string(m) + ")", next_prime_above(m + 1));
    for (std::uint64_t p : w) {
        if (p < m + 1) continue;
        if (p == m + 1) {
            out.set_residue(p, gamma_K_component(m, p, nullptr));
        } else {
            auto gr = cache.get(p);
            out.set_residue(p, gamma_K_component(m, p, gr.get()));
        }
    }
    return out;
}

Residue finite_mzv(const std::vector<std::uint64_t>& index, std::uint64_t p) {
    if (index.empty()) throw std::invalid_argument("finite_mzv: empty index");
    const std::uint64_t n = p - 1;
    const auto inv = inverse_table(n, p);
    // chain[i] = sum over 0 < m_1 < ... < m_d = i of the partial products.
    std::vector<std::uint64_t> chain(n + 1, 0), next(n + 1, 0);
    for (std::uint64_t i = 1; i <= n; ++i) chain[i] = powmod(inv[i], index[0], p);
    for (std::size_t d = 1; d < index.size(); ++d) {
        std::uint64_t prefix = 0;
        for (std::uint64_t i = 1; i <= n; ++i) {
            next[i] = mulmod(powmod(inv[i], index[d], p), prefix, p);
            prefix = addmod(prefix, chain[i], p);
        }
        // note: prefix accumulates chain[i] *after* next[i] uses it, which
        // enforces the strict inequality m_{d-1} < m_d.
        chain.swap(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t i = 1; i <= n; ++i) total = addmod(total, chain[i], p);
    return Residue(total, p);
}

namespace {

void mzv_enumerate(const std::vector<std::uint64_t>& index,
                   const std::vector<std::uint64_t>& inv, std::uint64_t p,
                   std::size_t depth, std::uint64_t start, std::uint64_t partial,
                   std::uint64_t& total) {
    if (depth == index.size()) {
        total = addmod(total, partial, p);
        return;
    }
    for (std::uint64_t m = start; m + (index.size() - 1 - depth) <= p - 1; ++m)
        mzv_enumerate(index, inv, p, depth + 1, m + 1,
                      mulmod(partial, powmod(inv[m], index[depth], p), p), total);
}

}  // namespace

Residue finite_mzv_naive(const std::vector<std::uint64_t>& index, std::uint64_t p) {
    if (index.empty()) throw std::invalid_argument("finite_mzv_naive: empty index");
    const auto inv = inverse_table(p - 1, p);
    std::uint64_t total = 0;
    mzv_enumerate(index, inv, p, 0, 1, 1, total);
    return Residue(total, p);
}

AElement finite_mzv_element(const std::vector<std::uint64_t>& index, const PrimeWindow& w) {
    std::string label = "zeta(";
    for (std::size_t i = 0; i < index.size(); ++i)
        label += (i ? "," : "") + std::to_string(index[i]);
    label += ")";
    AElement out(w, label, 2);
    for (std::uint64_t p : w) out.set_residue(p, finite_mzv(index, p).value());
    return out;
}

}  // namespace aring
