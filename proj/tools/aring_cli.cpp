// Command-line front end: congruence verification suites, residue-vector
// computation, exact constant tables, floating gamma approximations and the
// Wilson prime search.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aring/element.hpp"
#include "aring/modring.hpp"
#include "aring/primes.hpp"
#include "aring/report_io.hpp"
#include "aring/tables.hpp"
#include "aring/verify.hpp"

namespace {

using namespace aring;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::uint64_t p_min = 2;
    std::uint64_t p_max = 0;  // 0 = suite default
    std::string format = "jsonl";
    std::string out = "-";
    std::string cache_path;
    int jobs = 1;
};

std::string resolve_cache_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("ARING_CACHE_DIR");
    if (dir && *dir) return std::string(dir) + "/" + path;
    return path;
}

void warm_cache(GregoryCache& cache, const std::string& path) {
    if (path.empty()) return;
    for (auto& [p, table] : load_gregory_cache(path)) {
        if (!is_prime_u64(p)) continue;
        bool ok = table.abs_g.size() == p - 1 && table.regularized_tail < p;
        for (std::uint64_t n = 1; ok && n + 2 <= p; ++n) ok = table.abs_g[n] < p;
        if (!ok) continue;
        // O(p) self-consistency: the tail must equal the (p-n)-weighted sum
        // of the array.  A malformed entry is dropped and recomputed.
        const auto inv = inverse_table(p - 1, p);
        std::uint64_t sum = 0;
        for (std::uint64_t n = 1; n + 2 <= p; ++n)
            sum = addmod(sum, mulmod(table.abs_g[n], inv[p - n], p), p);
        if (sum != table.regularized_tail) continue;
        cache.put(std::move(table));
    }
}

int run_verify(const std::string& suite, CommonOpts common, std::uint64_t k_max,
               std::uint64_t m_max, std::uint64_t l_max, std::uint64_t exact_limit) {
    VerifyOptions vopts;
    vopts.jobs = common.jobs;
    GregoryCache cache;
    std::string cache_path = resolve_cache_path(common.cache_path);
    warm_cache(cache, cache_path);

    auto window_for = [&](std::uint64_t def_max, std::uint64_t min_admissible) {
        std::uint64_t hi = common.p_max ? common.p_max : def_max;
        PrimeWindow w(common.p_min, hi);
        for (std::uint64_t p : w)
            if (p >= min_admissible) return PrimeWindow(common.p_min, hi);
        throw CLI::ValidationError("verify", "window [" + std::to_string(common.p_min) + ", " +
                                                 std::to_string(hi) +
                                                 "] contains no admissible primes");
    };

    Report report;
    bool ran = false;
    auto add = [&](Report r) {
        if (!ran) {
            report = std::move(r);
            ran = true;
        } else {
            report.merge(std::move(r));
        }
    };

    if (suite == "glaisher" || suite == "all")
        add(verify_glaisher(window_for(exact_limit ? exact_limit : 97, 3),
                            exact_limit ? exact_limit : 97, vopts));
    if (suite == "main1" || suite == "all") add(verify_main1(window_for(2000, 3), cache, vopts));
    if (suite == "gregory" || suite == "all")
        add(verify_gregory_thm(k_max ? k_max : 10, window_for(1000, 3), cache, vopts));
    if (suite == "nonvanishing" || suite == "all")
        add(verify_nonvanishing_product(k_max ? k_max : 10, window_for(1000, 4), cache, vopts));
    if (suite == "kluyver" || suite == "all")
        add(verify_kluyver(m_max ? m_max : 8, window_for(500, 2), cache, vopts));
    if (suite == "lemma1" || suite == "all")
        add(verify_lemma1(l_max ? l_max : 30, m_max ? m_max : 10));
    if (suite == "lemma2" || suite == "all")
        add(verify_lemma2(m_max ? m_max : 20, window_for(1000, 2), vopts));
    if (suite == "lemma3" || suite == "all") add(verify_lemma3(window_for(2000, 3), cache, vopts));
    if (suite == "lemma4" || suite == "all")
        add(verify_lemma4(m_max ? m_max : 8, window_for(500, 3), cache, vopts));
    if (suite == "identities" || suite == "all") {
        IdentityOptions id;
        if (m_max) id.m_max = m_max;
        if (common.p_max) {
            id.eisenstein_p_max = common.p_max;
            id.st1st2_p_max = std::min<std::uint64_t>(common.p_max, 100);
        }
        add(verify_combinatorial_identities(id, vopts));
    }
    if (!ran) throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");
    if (suite == "all") report.environment["suite"] = "all";

    if (!cache_path.empty()) save_gregory_cache(cache_path, cache);
    write_output(common.out, common.format == "csv" ? report_to_csv(report)
                                                    : report_to_jsonl(report));
    return report.all_pass() ? kExitPass : kExitFail;
}

int run_compute(const std::string& quantity, CommonOpts common, std::uint64_t k,
                std::uint64_t m, const std::string& x_str, const std::string& index_str) {
    if (common.p_max == 0)
        throw CLI::ValidationError("compute", "--pmax is required");
    PrimeWindow w(common.p_min, common.p_max);
    GregoryCache cache;
    std::string cache_path = resolve_cache_path(common.cache_path);
    warm_cache(cache, cache_path);

    AElement e(w, "", 2);
    if (quantity == "gamma_W") {
        e = gamma_W(w);
    } else if (quantity == "gamma_M") {
        e = gamma_M(w, cache);
    } else if (quantity == "gamma_K") {
        if (m < 1) throw CLI::ValidationError("compute", "gamma_K needs --m >= 1");
        e = gamma_K(m, w, cache);
    } else if (quantity == "ZA") {
        if (k < 2) throw CLI::ValidationError("compute", "ZA needs --k >= 2");
        e = Z_A(k, w);
    } else if (quantity == "GA") {
        if (k < 2) throw CLI::ValidationError("compute", "GA needs --k >= 2");
        e = G_A(k, w, cache);
    } else if (quantity == "log" || quantity == "ell") {
        if (x_str.empty()) throw CLI::ValidationError("compute", quantity + " needs --x");
        Rational x = Rational::from_string(x_str);
        if (x.is_zero()) throw CLI::ValidationError("compute", "--x must be nonzero");
        e = (quantity == "log") ? log_A(x, w) : ell_A(x, w);
    } else if (quantity == "mzv") {
        if (index_str.empty()) throw CLI::ValidationError("compute", "mzv needs --index k1,k2,...");
        std::vector<std::uint64_t> index;
        std::stringstream ss(index_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            long long v = std::stoll(tok);
            if (v < 1) throw CLI::ValidationError("compute", "mzv indices must be >= 1");
            index.push_back(static_cast<std::uint64_t>(v));
        }
        if (index.empty()) throw CLI::ValidationError("compute", "mzv needs a nonempty index");
        e = finite_mzv_element(index, w);
    } else {
        throw CLI::ValidationError("compute", "unknown quantity '" + quantity + "'");
    }

    if (!cache_path.empty()) save_gregory_cache(cache_path, cache);
    write_output(common.out, common.format == "csv" ? element_to_csv(e) : element_to_jsonl(e));
    return kExitPass;
}

int run_constants(const std::string& table, std::uint64_t n, const std::string& format,
                  const std::string& out) {
    if (n < 1) throw CLI::ValidationError("constants", "--n must be >= 1");
    if ((table == "gregory" || table == "bernoulli") && n > 500)
        throw CLI::ValidationError("constants", "--n too large for exact tables (max 500)");
    if ((table == "stirling1" || table == "stirling2") && n > 200)
        throw CLI::ValidationError("constants", "--n too large for triangles (max 200)");
    std::ostringstream os;
    bool csv = (format == "csv");
    if (table == "gregory") {
        GregoryTable t(n);
        if (csv) os << "n,numerator,denominator\n";
        for (std::uint64_t i = 1; i <= n; ++i) {
            const Rational& g = t.at(i);
            if (csv)
                os << i << ',' << g.numerator() << ',' << g.denominator() << '\n';
            else
                os << i << ", " << g.numerator() << ", " << g.denominator() << '\n';
        }
    } else if (table == "bernoulli") {
        BernoulliTable t(n);
        if (csv) os << "n,numerator,denominator\n";
        for (std::uint64_t i = 0; i <= n; ++i) {
            const Rational& b = t.at(i);
            if (csv)
                os << i << ',' << b.numerator() << ',' << b.denominator() << '\n';
            else
                os << i << ", " << b.numerator() << ", " << b.denominator() << '\n';
        }
    } else if (table == "stirling1" || table == "stirling2") {
        StirlingTriangle t(table == "stirling1" ? StirlingKind::FirstUnsigned
                                                : StirlingKind::Second,
                           n);
        if (csv) {
            os << "n,m,value\n";
            for (std::uint64_t r = 1; r <= n; ++r)
                for (std::uint64_t mm = 1; mm <= r; ++mm)
                    os << r << ',' << mm << ',' << t.at(r, mm) << '\n';
        } else {
            for (std::uint64_t r = 1; r <= n; ++r) {
                for (std::uint64_t mm = 1; mm <= r; ++mm)
                    os << (mm > 1 ? ", " : "") << t.at(r, mm);
                os << '\n';
            }
        }
    } else {
        throw CLI::ValidationError("constants", "unknown table '" + table + "'");
    }
    write_output(out, os.str());
    return kExitPass;
}

int run_gamma_approx(std::uint64_t m, std::uint64_t n_terms) {
    double approx = gamma_float(static_cast<unsigned>(m), n_terms);
    std::ostringstream os;
    os << std::setprecision(15) << "gamma_approx(m=" << m << ", N=" << n_terms
       << ") = " << approx << "\n|approx - gamma| = " << std::setprecision(6)
       << std::scientific << std::abs(approx - kEulerGamma) << "\n";
    std::cout << os.str();
    return kExitPass;
}

int run_wilson_search(std::uint64_t limit, int jobs) {
    auto result = wilson_prime_search(limit, jobs);
    std::ostringstream os;
    os << "wilson primes <= " << limit << ":";
    for (std::uint64_t p : result.wilson_primes) os << ' ' << p;
    if (result.wilson_primes.empty()) os << " none";
    os << "\nnon-wilson primes (nonzero Wilson quotient): "
       << (result.primes_checked - result.wilson_primes.size()) << " of "
       << result.primes_checked << "\n";
    std::cout << os.str();
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Euler-constant analogues over prime residue vectors"};
    app.require_subcommand(1);

    CommonOpts common;
    std::uint64_t k = 0, m = 0, l_max = 0, k_max = 0, m_max = 0;
    std::uint64_t exact_limit = 0, n = 6, limit = 10000;
    std::string suite = "all", quantity, table, x_str, index_str;

    auto add_common = [&](CLI::App* cmd, bool with_jobs = true) {
        cmd->add_option("--pmin", common.p_min, "lower end of the prime window");
        cmd->add_option("--pmax", common.p_max, "upper end of the prime window");
        cmd->add_option("--format", common.format, "output format: jsonl or csv")
            ->check(CLI::IsMember({"jsonl", "csv"}));
        cmd->add_option("--out", common.out, "output path ('-' for stdout)");
        cmd->add_option("--cache", common.cache_path,
                        "Gregory residue cache file (JSON Lines; see ARING_CACHE_DIR)");
        if (with_jobs) cmd->add_option("--jobs", common.jobs, "worker threads");
    };

    CLI::App* vcmd = app.add_subcommand("verify", "run a verification suite");
    vcmd->add_option("--suite", suite,
                     "glaisher|main1|gregory|nonvanishing|kluyver|lemma1|lemma2|lemma3|lemma4|"
                     "identities|all");
    vcmd->add_option("--kmax", k_max, "largest k for the Gregory-theorem suites");
    vcmd->add_option("--mmax", m_max, "largest m for the Kluyver/lemma suites");
    vcmd->add_option("--lmax", l_max, "largest l for the exact lemma1 grid");
    vcmd->add_option("--exact-limit", exact_limit, "largest prime for exact Bernoulli numbers");
    add_common(vcmd);

    CLI::App* ccmd = app.add_subcommand("compute", "emit the residue vector of a named quantity");
    ccmd->add_option("quantity", quantity, "gamma_W|gamma_M|gamma_K|ZA|GA|log|ell|mzv")
        ->required();
    ccmd->add_option("--k", k, "index k for ZA/GA");
    ccmd->add_option("--m", m, "index m for gamma_K");
    ccmd->add_option("--x", x_str, "rational argument for log/ell, e.g. 2 or 1/2");
    ccmd->add_option("--index", index_str, "comma-separated index for mzv, e.g. 1,2");
    add_common(ccmd);

    CLI::App* tcmd = app.add_subcommand("constants", "print exact sequence tables");
    tcmd->add_option("table", table, "gregory|bernoulli|stirling1|stirling2")->required();
    tcmd->add_option("--n", n, "table size")->required();
    tcmd->add_option("--format", common.format, "plain or csv");
    tcmd->add_option("--out", common.out, "output path ('-' for stdout)");

    std::uint64_t ga_m = 0, ga_n = 0;
    CLI::App* gcmd = app.add_subcommand("gamma-approx", "floating Euler-constant partial sums");
    gcmd->add_option("--m", ga_m, "family parameter m >= 0");
    gcmd->add_option("--n", ga_n, "number of series terms")->required();

    CLI::App* wcmd = app.add_subcommand("wilson-search", "find primes with vanishing Wilson quotient");
    wcmd->add_option("--limit", limit, "search bound");
    wcmd->add_option("--jobs", common.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return (code == 0) ? 0 : kExitUsage;
    }

    try {
        if (vcmd->parsed()) return run_verify(suite, common, k_max, m_max, l_max, exact_limit);
        if (ccmd->parsed()) return run_compute(quantity, common, k, m, x_str, index_str);
        if (tcmd->parsed()) return run_constants(table, n, common.format, common.out);
        if (gcmd->parsed()) return run_gamma_approx(ga_m, ga_n);
        if (wcmd->parsed()) return run_wilson_search(limit, common.jobs);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
