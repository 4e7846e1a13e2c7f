#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aring/element.hpp"
#include "aring/modtables.hpp"
#include "aring/primes.hpp"

namespace aring {

inline constexpr const char* kVersion = "0.1.0";

/// One verified congruence or identity instance: statement, prime (if any),
/// named integer parameters, both sides, verdict.
struct VerificationRecord {
    std::string statement_id;
    std::optional<std::uint64_t> prime;
    std::map<std::string, long long> params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct StatementSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
};

struct Report {
    std::vector<VerificationRecord> records;
    std::map<std::string, StatementSummary> summary;
    std::map<std::string, std::string> environment;  // window bounds, suite, version
    std::vector<std::string> notes;

    /// Sort records by (statement_id, prime, params) and rebuild the summary.
    void finalize();
    bool all_pass() const;
    std::size_t fail_count() const;
    void merge(Report other);
};

struct VerifyOptions {
    int jobs = 1;
};

/// Glaisher's congruence W_p = B_{p-1} + 1/p - 1 (mod p) for odd primes,
/// exact-Bernoulli tier only: p <= exact_limit.
Report verify_glaisher(const PrimeWindow& w, std::uint64_t exact_limit = 97,
                       const VerifyOptions& opts = {});

/// The Mascheroni/Wilson congruence
///   sum_{n=1}^{p-2} |G_n|/n = W_p + 2 q_p(2) - 1 (mod p), all odd p.
/// Left side from the Gregory residue tables, right side from Wilson and
/// Fermat quotients; the two pipelines share no intermediates.
Report verify_main1(const PrimeWindow& w, GregoryCache& cache,
                    const VerifyOptions& opts = {});

/// For each k in 2..k_max and window primes p >= k+1, two routes:
///  (a) G_{p-k} = (-1)^k sum_{j=1}^{k} (-1)^{j-1} C(k,j) ell_p(j+1)  (mod p),
///  (b) G_{p-k} = -k! (1/p) {p+1, k+1}  (mod p), with the Stirling number
///      evaluated through the alternating power sum mod p^2 (mod p^3 at the
///      boundary p = k+1) and divided by p after a divisibility check.
Report verify_gregory_thm(std::uint64_t k_max, const PrimeWindow& w,
                          GregoryCache& cache, const VerifyOptions& opts = {});

/// Exact product route behind the nonvanishing evidence for G(k):
///   P(k) = prod_{j=1}^{k} (j+1)^{(-1)^{j-1} (j+1) C(k,j)} != 1 exactly, and
///   G(k) componentwise equals (-1)^k q_p(P(k)); the count of nonzero
///   components is reported as evidence in the notes.
Report verify_nonvanishing_product(std::uint64_t k_max, const PrimeWindow& w,
                                   GregoryCache& cache, const VerifyOptions& opts = {});

/// Kluyver-type decomposition for m in 1..m_max:
///   gammaK(m) = gammaW - 1 + (H_m - 1) ell(m+1)
///               + sum_{j=1}^{m-1} (-1)^{m-j} C(m,j) ell(j+1) / (m-j),
/// checked componentwise for primes p >= next_prime(m+1).  At the boundary
/// p = m+1 the materialized component (with (m+1) q_p(m+1) evaluated as
/// (x^p - x)/p at x = p) is checked against an independent modular
/// evaluation.  For m = 1 the specialized form gammaK(1) = gammaW - 1 is
/// checked as well.
Report verify_kluyver(std::uint64_t m_max, const PrimeWindow& w,
                      GregoryCache& cache, const VerifyOptions& opts = {});

/// Exact Gregory-coefficient identity on the grid m in 1..m_max,
/// l in m+1..l_max:
///   m! sum_{n=1}^{l-m} |G_n| / ((l-n-m+1)...(l-n+1))
///     = m!/((l-m+1)...(l+1))
///       + sum_{k=1}^{m} (-1)^{m+k} C(m,k) (H_m - H_{m-k}) |G_{l-k+1}|.
Report verify_lemma1(std::uint64_t l_max, std::uint64_t m_max);

/// (-1)^m / (p C(p-1,m)) - 1/p = H_m (mod p) for p >= m+1, with the pole
/// removed through mod-p^2 inversion of C(p-1, m).
Report verify_lemma2(std::uint64_t m_max, const PrimeWindow& w,
                     const VerifyOptions& opts = {});

/// -G_{p-1} - 1/p = W_p + 2 q_p(2) - 1 (mod p) for p >= 3; left side is the
/// negated regularized tail of the Gregory residue table.
Report verify_lemma3(const PrimeWindow& w, GregoryCache& cache,
                     const VerifyOptions& opts = {});

/// For m in 2..m_max and p >= m+1 (boundary p = m+1 under the extended
/// ell evaluation):
///   sum_{k=2}^{m} (-1)^k C(m,k) (H_m - H_{m-k}) |G_{p-k}|
///     = -sum_{j=1}^{m-1} (-1)^{m-j} C(m,j) (j+1) q_p(j+1)/(m-j)
///       - H_m (m+1) q_p(m+1) + 2 q_p(2)   (mod p).
Report verify_lemma4(std::uint64_t m_max, const PrimeWindow& w,
                     GregoryCache& cache, const VerifyOptions& opts = {});

struct IdentityOptions {
    std::uint64_t m_max = 15;            // claim + binomial-polynomial grids
    std::uint64_t jordan_n_max = 20;
    std::uint64_t binom_sum_k_max = 20;
    std::uint64_t eisenstein_p_max = 1000;
    std::uint64_t st1st2_p_max = 100;
};

/// Exact combinatorial identities and per-prime classics:
///  - harmonic-difference sum:  sum_{k=j}^{m} (-1)^k C(k,j) C(m,k) (H_m - H_{m-k})
///      = (-1)^m C(m,j)/(m-j)  (j < m), or (-1)^m H_m (j = m);
///  - binomial-polynomial identity at integer points x = m..m+5:
///      sum_{k=j}^{m} (-1)^k C(k,j) C(x,k) = (-1)^m C(x,j) C(x-j-1, m-j);
///  - Eisenstein:  sum_{m=0}^{p-2} (-1)^m/(m+1) = 2 q_p(2) (mod p);
///  - sum_{j=1}^{k} (-1)^{j-1} C(k,j) (j+1) = 1 for k >= 2;
///  - Jordan:  sum_{m=1}^{n} C(n,m) {m k} = {n+1, k+1};
///  - the first/second-kind reflection [n m] = {p-m, p-n} (mod p) over full
///    triangles, and the row congruence [p-1, m] = 1 (mod p).
Report verify_combinatorial_identities(const IdentityOptions& id_opts = {},
                                       const VerifyOptions& opts = {});

struct WilsonSearchResult {
    std::vector<std::uint64_t> wilson_primes;  // p <= limit with p | W_p
    std::size_t primes_checked = 0;
};

/// Scan all primes <= limit for vanishing Wilson quotients.  The complement
/// count doubles as nonvanishing evidence for the Wilson-quotient constant.
WilsonSearchResult wilson_prime_search(std::uint64_t limit, int jobs = 1);

}  // namespace aring
