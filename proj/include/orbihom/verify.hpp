#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "orbihom/generators.hpp"
#include "orbihom/homology.hpp"
#include "orbihom/subdivision.hpp"

namespace orbihom {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int cases = 50;
    int threads = 1;
};

struct SuiteResult {
    std::string suite;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes; // one per failure, carries the replay seed

    bool ok() const { return failures == 0; }
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt)
{
    // splitmix64 step
    std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ull + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline int env_threads()
{
    const char* s = std::getenv("ORBIHOM_THREADS");
    if (!s)
        return 1;
    int n = std::atoi(s);
    return n >= 1 ? n : 1;
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers; failure notes are
/// collected per index and appended in index order, so reports do not depend
/// on scheduling.
inline void run_cases(int n, int threads, SuiteResult& result,
                      const std::function<std::optional<std::string>(int)>& fn)
{
    std::vector<std::optional<std::string>> notes(n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i)
            notes[i] = fn(i);
    } else {
        std::atomic<int> next{0};
        auto worker = [&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n)
                    return;
                notes[i] = fn(i);
            }
        };
        std::vector<std::thread> pool;
        const int t = std::min(threads, n);
        pool.reserve(t);
        for (int i = 0; i < t; ++i)
            pool.emplace_back(worker);
        for (std::thread& th : pool)
            th.join();
    }
    result.cases += n;
    for (int i = 0; i < n; ++i)
        if (notes[i].has_value()) {
            ++result.failures;
            result.notes.push_back(*notes[i]);
        }
}

inline std::optional<std::string> guarded(std::uint64_t seed, const std::string& what,
                                          const std::function<bool()>& body)
{
    try {
        if (!body())
            return what + " failed (seed " + std::to_string(seed) + ")";
    } catch (const std::exception& e) {
        return what + " threw (seed " + std::to_string(seed) + "): " + e.what();
    }
    return std::nullopt;
}

} // namespace detail

/// Acyclicity of divisibly-weighted simplices: wt-homology of a random
/// simplex is (Z, 0, ...) and st-homology of a random semi-regular simplex
/// is (Z/w(v_s), 0, ...) with w(v_s) its minimal singular vertex weight.
inline SuiteResult run_simplex_suite(const VerifyOptions& opt)
{
    SuiteResult r;
    r.suite = "simplex";
    detail::run_cases(opt.cases, opt.threads, r, [&](int i) {
        std::uint64_t seed = detail::mix_seed(opt.seed, 2 * i);
        return detail::guarded(seed, "wt acyclicity case " + std::to_string(i), [&]() {
            int dim = 1 + static_cast<int>(seed % 5);
            WeightedComplex K = random_dw_simplex(dim, seed, false);
            HomologyProfile p = wt_homology(K);
            if (p.group(0).rank != 1 || !p.group(0).torsion.empty())
                return false;
            for (int n = 1; n <= K.dim(); ++n)
                if (!p.group(n).is_trivial())
                    return false;
            return true;
        });
    });
    detail::run_cases(opt.cases, opt.threads, r, [&](int i) {
        std::uint64_t seed = detail::mix_seed(opt.seed, 2 * i + 1);
        return detail::guarded(seed, "st semi-regular case " + std::to_string(i), [&]() {
            int dim = 1 + static_cast<int>(seed % 5);
            WeightedComplex K = random_dw_simplex(dim, seed, true);
            Integer ws = 0;
            for (VertexId v : K.vertices()) {
                const Integer& w = K.vertex_weight(v);
                if (w >= 2 && (sgn(ws) == 0 || w < ws))
                    ws = w;
            }
            HomologyProfile p = st_homology(K);
            if (p.group(0).rank != 0 || p.group(0).torsion != std::vector<Integer>{ws})
                return false;
            for (int n = 1; n <= K.dim(); ++n)
                if (!p.group(n).is_trivial())
                    return false;
            return true;
        });
    });
    return r;
}

/// Groups equal before/after subdivision plus the exact chain identity
/// pi^w_# . Sd^w_# = id, without the generator-coordinate pass.  Together
/// these force Sd_* to be an isomorphism of finitely generated groups.
inline bool light_subdivision_invariance(const ComplexPtr& K, const TheorySelector& t,
                                         const SubdivisionRecord& rec)
{
    ChainComplexData cc_src = theory_chain_complex(*K, t);
    ChainComplexData cc_sub = theory_chain_complex(*rec.result, t);
    if (!profile_from_chain(cc_src, t).same_groups(profile_from_chain(cc_sub, t)))
        return false;
    const bool relative = t.canonicalized().kind != Theory::WT;
    std::map<Simplex, int> empty_index;
    for (int n = 0; n <= K->dim(); ++n) {
        IntMatrix sd = rec.chain_maps[n];
        IntMatrix pi = induced_chain_map(rec.projection, n);
        if (relative) {
            const bool sub_has = n <= cc_sub.dim();
            sd = restrict_to_bases(sd, K->simplices(n), cc_src.basis[n], rec.result->simplices(n),
                                   sub_has ? cc_sub.basis[n] : std::vector<Simplex>{}, cc_src.index[n],
                                   sub_has ? cc_sub.index[n] : empty_index);
            pi = restrict_to_bases(pi, rec.result->simplices(n),
                                   sub_has ? cc_sub.basis[n] : std::vector<Simplex>{}, K->simplices(n),
                                   cc_src.basis[n], sub_has ? cc_sub.index[n] : empty_index,
                                   cc_src.index[n]);
        }
        if (pi * sd != IntMatrix::identity(static_cast<int>(cc_src.basis[n].size())))
            return false;
    }
    return true;
}

/// Full pass for one complex: deep invariance at the base level (both
/// theories), light invariance at the subdivided level (covers Sd^2).
inline bool subdivision_invariance_pass(const WeightedComplex& K)
{
    ComplexPtr k0 = share(K);
    if (!verify_subdivision_invariance(k0, TheorySelector::wt()))
        return false;
    if (!verify_subdivision_invariance(k0, TheorySelector::st()))
        return false;
    SubdivisionRecord rec1 = barycentric_subdivide(k0);
    SubdivisionRecord rec2 = barycentric_subdivide(rec1.result);
    if (!light_subdivision_invariance(rec1.result, TheorySelector::wt(), rec2))
        return false;
    if (!light_subdivision_invariance(rec1.result, TheorySelector::st(), rec2))
        return false;
    return true;
}

inline SuiteResult run_subdivision_suite(const VerifyOptions& opt)
{
    SuiteResult r;
    r.suite = "subdivision";
    auto corpus = subdivision_corpus();
    detail::run_cases(static_cast<int>(corpus.size()), opt.threads, r, [&](int i) {
        return detail::guarded(opt.seed, "corpus " + corpus[i].first,
                               [&]() { return subdivision_invariance_pass(corpus[i].second); });
    });
    detail::run_cases(opt.cases, opt.threads, r, [&](int i) {
        std::uint64_t seed = detail::mix_seed(opt.seed, 1000 + i);
        return detail::guarded(seed, "random case " + std::to_string(i), [&]() {
            RandomComplexSpec spec;
            spec.dim = 1 + static_cast<int>(seed % 2);
            spec.vertices = 5 + static_cast<int>((seed >> 8) % 3);
            spec.maximal = 3 + static_cast<int>((seed >> 16) % 3);
            spec.seed = seed;
            return subdivision_invariance_pass(generate_random(spec));
        });
    });
    return r;
}

/// Coefficient isomorphisms: over F_p with p coprime to every weight, wt and
/// st dimensions agree with the classical homology of the underlying complex
/// and of the pair (K, Sigma K); over Q the ranks agree.
inline bool coefficients_pass(const WeightedComplex& K, int num_primes = 3)
{
    WeightedComplex plain = strip_weights(K);
    WeightedComplex sing = singular_subcomplex(K);
    WeightedComplex sing_plain = sing.empty() ? WeightedComplex() : strip_weights(sing);

    HomologyProfile wt_int = wt_homology(K);
    HomologyProfile st_int = st_homology(K);
    HomologyProfile cl_abs = wt_homology(plain);
    ChainComplexData cc_rel = chain_complex(plain, sing_plain.empty() ? nullptr : &sing_plain);
    HomologyProfile cl_rel = profile_from_chain(cc_rel, TheorySelector::st());

    // Eq-level rank comparison over Q.
    for (int n = 0; n <= K.dim(); ++n) {
        if (wt_int.group(n).rank != cl_abs.group(n).rank)
            return false;
        if (st_int.group(n).rank != cl_rel.group(n).rank)
            return false;
    }

    auto fp_dim = [](const HomologyProfile& integral, int n, const Integer& p) {
        int dim = integral.group(n).rank;
        for (const Integer& d : integral.group(n).torsion)
            if (divides(p, d))
                ++dim;
        for (const Integer& d : integral.group(n - 1).torsion)
            if (divides(p, d))
                ++dim;
        return dim;
    };

    Integer p = 2;
    int used = 0;
    while (used < num_primes) {
        bool coprime = true;
        for (VertexId v : K.vertices())
            if (divides(p, K.vertex_weight(v))) {
                coprime = false;
                break;
            }
        if (coprime) {
            ++used;
            for (int n = 0; n <= K.dim(); ++n) {
                if (fp_dim(wt_int, n, p) != fp_dim(cl_abs, n, p))
                    return false;
                if (fp_dim(st_int, n, p) != fp_dim(cl_rel, n, p))
                    return false;
            }
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    return true;
}

inline SuiteResult run_coefficients_suite(const VerifyOptions& opt)
{
    SuiteResult r;
    r.suite = "coefficients";
    auto corpus = example_corpus();
    detail::run_cases(static_cast<int>(corpus.size()), opt.threads, r, [&](int i) {
        return detail::guarded(opt.seed, "corpus " + corpus[i].first,
                               [&]() { return coefficients_pass(corpus[i].second); });
    });
    detail::run_cases(opt.cases, opt.threads, r, [&](int i) {
        std::uint64_t seed = detail::mix_seed(opt.seed, 3000 + i);
        return detail::guarded(seed, "random case " + std::to_string(i), [&]() {
            RandomComplexSpec spec;
            spec.dim = 1 + static_cast<int>(seed % 3);
            spec.vertices = spec.dim + 4 + static_cast<int>((seed >> 8) % 3);
            spec.maximal = 3 + static_cast<int>((seed >> 16) % 4);
            spec.seed = seed;
            return coefficients_pass(generate_random(spec));
        });
    });
    return r;
}

inline SuiteResult run_euler_suite(const VerifyOptions& opt)
{
    SuiteResult r;
    r.suite = "euler";
    auto corpus = example_corpus();
    detail::run_cases(static_cast<int>(corpus.size()), opt.threads, r, [&](int i) {
        return detail::guarded(opt.seed, "corpus " + corpus[i].first,
                               [&]() { return euler_check(corpus[i].second).ok; });
    });
    detail::run_cases(opt.cases, opt.threads, r, [&](int i) {
        std::uint64_t seed = detail::mix_seed(opt.seed, 4000 + i);
        return detail::guarded(seed, "random case " + std::to_string(i), [&]() {
            RandomComplexSpec spec;
            spec.dim = 1 + static_cast<int>(seed % 3);
            spec.vertices = spec.dim + 4 + static_cast<int>((seed >> 8) % 4);
            spec.maximal = 3 + static_cast<int>((seed >> 16) % 5);
            spec.seed = seed;
            return euler_check(generate_random(spec)).ok;
        });
    });
    return r;
}

inline std::vector<SuiteResult> run_suites(const std::string& which, const VerifyOptions& opt)
{
    std::vector<SuiteResult> out;
    const bool all = (which == "all");
    if (all || which == "simplex")
        out.push_back(run_simplex_suite(opt));
    if (all || which == "subdivision")
        out.push_back(run_subdivision_suite(opt));
    if (all || which == "coefficients")
        out.push_back(run_coefficients_suite(opt));
    if (all || which == "euler")
        out.push_back(run_euler_suite(opt));
    if (out.empty())
        fail(ErrorCode::InvalidSpec, "unknown suite '" + which + "'");
    return out;
}

} // namespace orbihom
