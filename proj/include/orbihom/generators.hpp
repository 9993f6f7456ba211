#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "orbihom/complex.hpp"
#include "orbihom/subdivision.hpp"

namespace orbihom {

/// Families of compact pseudo-orbifolds with isolated cyclic singular
/// points.  Parameters are the singular-point weights, all >= 2.
struct ExampleSpec {
    enum class Family {
        IntervalOneSingular,
        IntervalTwoSingular,
        Disk2,
        Triangle2,
        Teardrop,
        Football,
        SphereN,
        Surface,
    };

    Family family = Family::Teardrop;
    std::vector<Integer> k;
    int genus = 0;
    int crosscaps = 0;
};

namespace detail {

struct RawSurface {
    int vertex_count = 0;
    std::vector<Simplex> triangles;
};

inline RawSurface sphere_raw()
{
    return {4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

/// Minimal 7-vertex torus: triangles (i, i+1, i+3) and (i, i+2, i+3) mod 7.
inline RawSurface torus_raw()
{
    RawSurface s;
    s.vertex_count = 7;
    for (int i = 0; i < 7; ++i) {
        Simplex a{i, (i + 1) % 7, (i + 3) % 7};
        Simplex b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        s.triangles.push_back(a);
        s.triangles.push_back(b);
    }
    return s;
}

/// Minimal 6-vertex projective plane (icosahedron antipodal quotient).
inline RawSurface rp2_raw()
{
    return {6,
            {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
             {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}}};
}

/// Connected sum of closed triangulated surfaces: remove one triangle from
/// each and identify the boundary triangles vertex by vertex.  Vertex links
/// merge path-to-path into cycles, so the result is again a closed surface.
inline RawSurface connected_sum(const RawSurface& A, const RawSurface& B)
{
    const Simplex tA = A.triangles.front();
    const Simplex tB = B.triangles.front();
    std::vector<int> relabel(B.vertex_count, -1);
    for (int j = 0; j < 3; ++j)
        relabel[tB[j]] = tA[j];
    int next = A.vertex_count;
    for (int v = 0; v < B.vertex_count; ++v)
        if (relabel[v] < 0)
            relabel[v] = next++;

    RawSurface out;
    out.vertex_count = next;
    for (std::size_t i = 1; i < A.triangles.size(); ++i)
        out.triangles.push_back(A.triangles[i]);
    for (std::size_t i = 1; i < B.triangles.size(); ++i) {
        Simplex t = B.triangles[i];
        for (int& v : t)
            v = relabel[v];
        std::sort(t.begin(), t.end());
        out.triangles.push_back(t);
    }
    return out;
}

inline void require_weights_ge2(const std::vector<Integer>& k)
{
    for (const Integer& x : k)
        if (x < 2)
            fail(ErrorCode::InvalidSpec, "singular weights must be >= 2");
}

inline std::map<VertexId, Integer> unit_weights(int count)
{
    std::map<VertexId, Integer> w;
    for (int v = 0; v < count; ++v)
        w[v] = 1;
    return w;
}

} // namespace detail

inline WeightedComplex interval_one_singular(const Integer& k = 2)
{
    detail::require_weights_ge2({k});
    return build_complex({{0, 1}, {1, k}}, {{0, 1}});
}

inline WeightedComplex interval_two_singular(const Integer& k1 = 2, const Integer& k2 = 2)
{
    detail::require_weights_ge2({k1, k2});
    return build_complex({{0, k1}, {1, 1}, {2, k2}}, {{0, 1}, {1, 2}});
}

/// 2-disk with two interior-isolated singular points: two triangle fans over
/// a 3-vertex path, one fan per singular apex.
inline WeightedComplex disk2(const Integer& k1, const Integer& k2)
{
    detail::require_weights_ge2({k1, k2});
    std::map<VertexId, Integer> w = {{0, 1}, {1, 1}, {2, 1}, {3, k1}, {4, k2}};
    return build_complex(w, {{0, 1, 3}, {1, 2, 3}, {0, 1, 4}, {1, 2, 4}});
}

/// 2-disk with three singular corner points: the cone over the hexagon
/// v1 u1 v2 u2 v3 u3 from a regular center.
inline WeightedComplex triangle2(const Integer& k1, const Integer& k2, const Integer& k3)
{
    detail::require_weights_ge2({k1, k2, k3});
    std::map<VertexId, Integer> w = {{0, k1}, {1, k2}, {2, k3}, {3, 1}, {4, 1}, {5, 1}, {6, 1}};
    return build_complex(w, {{0, 3, 6}, {1, 3, 6}, {1, 4, 6}, {2, 4, 6}, {2, 5, 6}, {0, 5, 6}});
}

/// Teardrop: double cone over a triangle, singular north pole.
inline WeightedComplex teardrop(const Integer& k)
{
    detail::require_weights_ge2({k});
    std::map<VertexId, Integer> w = {{0, k}, {1, 1}, {2, 1}, {3, 1}, {4, 1}};
    return build_complex(w, {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}});
}

/// Football: double cone over a square equator, two singular poles.
inline WeightedComplex football(const Integer& k1, const Integer& k2)
{
    detail::require_weights_ge2({k1, k2});
    std::map<VertexId, Integer> w = {{0, k1}, {1, k2}, {2, 1}, {3, 1}, {4, 1}, {5, 1}};
    return build_complex(w, {{0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 2, 5},
                             {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5}});
}

/// Sphere with n >= 3 isolated singular points: two fans of hexagon-coned
/// macro-triangles glued along the subdivided equator v1 u1 v2 u2 ... vn un.
/// Singular points never share a simplex, so the triangulation is adapted.
inline WeightedComplex sphere_n(const std::vector<Integer>& k)
{
    const int n = static_cast<int>(k.size());
    if (n < 3)
        fail(ErrorCode::InvalidSpec, "sphere family needs n >= 3 singular points");
    detail::require_weights_ge2(k);

    auto v = [&](int i) { return i - 1; };            // v_1..v_n
    auto u = [&](int i) { return n + i - 1; };        // u_1..u_n
    auto ap = [&](int i) { return 2 * n + (i - 3); }; // a^+_3..a^+_{n-1}
    auto am = [&](int i) { return 2 * n + (n - 3) + (i - 3); };
    auto cp = [&](int i) { return 2 * n + 2 * (n - 3) + (i - 2); }; // c^+_2..c^+_{n-1}
    auto cm = [&](int i) { return 2 * n + 2 * (n - 3) + (n - 2) + (i - 2); };

    const int total = 2 * n + 2 * (n - 3) + 2 * (n - 2);
    std::map<VertexId, Integer> w = detail::unit_weights(total);
    for (int i = 1; i <= n; ++i)
        w[v(i)] = k[i - 1];

    std::vector<Simplex> tris;
    for (int hemi = 0; hemi < 2; ++hemi) {
        for (int i = 2; i <= n - 1; ++i) {
            const int mid_left = (i == 2) ? u(1) : (hemi == 0 ? ap(i) : am(i));
            const int mid_right = (i + 1 == n) ? u(n) : (hemi == 0 ? ap(i + 1) : am(i + 1));
            const int center = (hemi == 0) ? cp(i) : cm(i);
            const std::array<std::array<int, 2>, 6> rim = {{{v(1), mid_left},
                                                            {mid_left, v(i)},
                                                            {v(i), u(i)},
                                                            {u(i), v(i + 1)},
                                                            {v(i + 1), mid_right},
                                                            {mid_right, v(1)}}};
            for (const auto& e : rim) {
                Simplex t{e[0], e[1], center};
                std::sort(t.begin(), t.end());
                tris.push_back(t);
            }
        }
    }
    return build_complex(w, tris);
}

/// Closed surface (genus g orientable, or c crosscaps) with n isolated
/// singular points: connected sums of minimal triangulations, one
/// barycentric subdivision when two marked vertices would be adjacent, then
/// weights installed on the marked vertices.
inline WeightedComplex connected_sum_surface(const ExampleSpec& spec)
{
    if (spec.genus < 0 || spec.crosscaps < 0 || (spec.genus > 0 && spec.crosscaps > 0))
        fail(ErrorCode::InvalidSpec, "surface signature is genus g >= 0 or crosscaps c >= 1, not both");
    detail::require_weights_ge2(spec.k);

    detail::RawSurface base;
    if (spec.genus == 0 && spec.crosscaps == 0) {
        base = detail::sphere_raw();
    } else if (spec.genus > 0) {
        base = detail::torus_raw();
        for (int i = 1; i < spec.genus; ++i)
            base = detail::connected_sum(base, detail::torus_raw());
    } else {
        base = detail::rp2_raw();
        for (int i = 1; i < spec.crosscaps; ++i)
            base = detail::connected_sum(base, detail::rp2_raw());
    }

    const int n = static_cast<int>(spec.k.size());
    WeightedComplex plain = build_complex(detail::unit_weights(base.vertex_count), base.triangles);
    if (n <= 1) {
        std::map<VertexId, Integer> w = detail::unit_weights(base.vertex_count);
        if (n == 1)
            w[0] = spec.k[0];
        return build_complex(w, base.triangles);
    }

    // Two or more marked points: subdivide at least once.  The 0-simplex
    // barycenters keep ids 0..V-1, are pairwise non-adjacent after
    // subdividing, and no flag holds two of them, so every simplex sees at
    // most one singular vertex.  Subdivide again while the marked ids do not
    // all come from the previous round's vertex set.
    WeightedComplex prev = plain;
    WeightedComplex cur = *barycentric_subdivide(share(prev)).result;
    while (static_cast<int>(prev.vertex_count()) < n) {
        prev = cur;
        cur = *barycentric_subdivide(share(prev)).result;
    }

    std::map<VertexId, Integer> w;
    for (VertexId vtx : cur.vertices())
        w[vtx] = 1;
    for (int i = 0; i < n; ++i)
        w[i] = spec.k[i];
    return build_complex(w, cur.maximal_simplices());
}

inline WeightedComplex generate(const ExampleSpec& spec)
{
    using F = ExampleSpec::Family;
    auto arity = [&](std::size_t lo, std::size_t hi, const char* what) {
        if (spec.k.size() < lo || spec.k.size() > hi)
            fail(ErrorCode::InvalidSpec, std::string(what) + ": wrong number of weights");
    };
    switch (spec.family) {
        case F::IntervalOneSingular:
            arity(0, 1, "interval1");
            return interval_one_singular(spec.k.empty() ? Integer(2) : spec.k[0]);
        case F::IntervalTwoSingular:
            arity(0, 2, "interval2");
            if (spec.k.empty())
                return interval_two_singular();
            if (spec.k.size() == 1)
                return interval_two_singular(spec.k[0], spec.k[0]);
            return interval_two_singular(spec.k[0], spec.k[1]);
        case F::Disk2:
            arity(2, 2, "disk");
            return disk2(spec.k[0], spec.k[1]);
        case F::Triangle2:
            arity(3, 3, "triangle");
            return triangle2(spec.k[0], spec.k[1], spec.k[2]);
        case F::Teardrop:
            arity(1, 1, "teardrop");
            return teardrop(spec.k[0]);
        case F::Football:
            arity(2, 2, "football");
            return football(spec.k[0], spec.k[1]);
        case F::SphereN:
            return sphere_n(spec.k);
        case F::Surface:
            return connected_sum_surface(spec);
    }
    fail(ErrorCode::InvalidSpec, "unknown family");
}

// ---------------------------------------------------------------------------
// One-line textual signatures, e.g. "teardrop:5", "sphere:6,12,27,36,108",
// "surface:g=2;k=3,3".
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Integer> parse_int_list(const std::string& text)
{
    std::vector<Integer> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorCode::InvalidSpec, "bad integer '" + tok + "' in weight list");
        out.emplace_back(tok);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

inline ExampleSpec parse_example_spec(const std::string& text)
{
    ExampleSpec spec;
    const std::size_t colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);

    using F = ExampleSpec::Family;
    if (name == "interval1")
        spec.family = F::IntervalOneSingular;
    else if (name == "interval2")
        spec.family = F::IntervalTwoSingular;
    else if (name == "disk")
        spec.family = F::Disk2;
    else if (name == "triangle")
        spec.family = F::Triangle2;
    else if (name == "teardrop")
        spec.family = F::Teardrop;
    else if (name == "football")
        spec.family = F::Football;
    else if (name == "sphere")
        spec.family = F::SphereN;
    else if (name == "surface")
        spec.family = F::Surface;
    else
        fail(ErrorCode::InvalidSpec, "unknown example family '" + name + "'");

    if (spec.family != F::Surface) {
        if (!args.empty())
            spec.k = detail::parse_int_list(args);
        return spec;
    }

    std::size_t pos = 0;
    while (pos < args.size()) {
        std::size_t semi = args.find(';', pos);
        std::string part = args.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (part.rfind("g=", 0) == 0)
            spec.genus = std::stoi(part.substr(2));
        else if (part.rfind("c=", 0) == 0)
            spec.crosscaps = std::stoi(part.substr(2));
        else if (part.rfind("k=", 0) == 0)
            spec.k = detail::parse_int_list(part.substr(2));
        else if (!part.empty())
            fail(ErrorCode::InvalidSpec, "bad surface parameter '" + part + "'");
        if (semi == std::string::npos)
            break;
        pos = semi + 1;
    }
    return spec;
}

inline std::string format_example_spec(const ExampleSpec& spec)
{
    using F = ExampleSpec::Family;
    auto list = [&]() {
        std::string s;
        for (std::size_t i = 0; i < spec.k.size(); ++i) {
            if (i)
                s += ",";
            s += spec.k[i].get_str();
        }
        return s;
    };
    switch (spec.family) {
        case F::IntervalOneSingular: return spec.k.empty() ? "interval1" : "interval1:" + list();
        case F::IntervalTwoSingular: return spec.k.empty() ? "interval2" : "interval2:" + list();
        case F::Disk2:               return "disk:" + list();
        case F::Triangle2:           return "triangle:" + list();
        case F::Teardrop:            return "teardrop:" + list();
        case F::Football:            return "football:" + list();
        case F::SphereN:             return "sphere:" + list();
        case F::Surface: {
            std::string s = "surface:";
            s += (spec.crosscaps > 0) ? "c=" + std::to_string(spec.crosscaps) : "g=" + std::to_string(spec.genus);
            if (!spec.k.empty())
                s += ";k=" + list();
            return s;
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Random complexes for the property suites.  Vertex weights come from one
// divisor chain of a random integer <= 720, so every vertex subset satisfies
// the chain condition and build_complex always validates.
// ---------------------------------------------------------------------------

struct RandomComplexSpec {
    int dim = 2;
    int vertices = 8;
    int maximal = 6;
    bool unit_weights = false;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::vector<Integer> random_divisor_chain(std::mt19937_64& rng, long target)
{
    std::vector<Integer> chain{1};
    long cur = 1;
    while (cur != target) {
        long rem = target / cur;
        std::vector<long> primes;
        long m = rem;
        for (long p = 2; p * p <= m; ++p)
            while (m % p == 0) {
                primes.push_back(p);
                m /= p;
            }
        if (m > 1)
            primes.push_back(m);
        cur *= primes[rng() % primes.size()];
        chain.emplace_back(cur);
    }
    return chain;
}

} // namespace detail

inline WeightedComplex generate_random(const RandomComplexSpec& spec)
{
    if (spec.dim > 5 || spec.dim < 0)
        fail(ErrorCode::InvalidSpec, "random complexes support dim <= 5");
    if (spec.vertices < spec.dim + 1)
        fail(ErrorCode::InvalidSpec, "need at least dim+1 vertices");
    std::mt19937_64 rng(spec.seed);

    std::vector<Integer> chain =
        spec.unit_weights ? std::vector<Integer>{1}
                          : detail::random_divisor_chain(rng, 1 + static_cast<long>(rng() % 720));
    std::map<VertexId, Integer> w;
    for (int v = 0; v < spec.vertices; ++v)
        w[v] = chain[rng() % chain.size()];

    std::vector<Simplex> maximal;
    for (int m = 0; m < spec.maximal; ++m) {
        std::vector<VertexId> pool(spec.vertices);
        for (int v = 0; v < spec.vertices; ++v)
            pool[v] = v;
        Simplex s;
        for (int j = 0; j <= spec.dim; ++j) {
            std::size_t pick = rng() % pool.size();
            s.push_back(pool[pick]);
            pool.erase(pool.begin() + pick);
        }
        std::sort(s.begin(), s.end());
        maximal.push_back(std::move(s));
    }
    return build_complex(w, maximal);
}

/// Single divisibly-weighted simplex (with all faces) for the acyclicity
/// suites; semi-regular mode pins w(v_0) = 1 and a top weight >= 2.
inline WeightedComplex random_dw_simplex(int dim, std::uint64_t seed, bool semi_regular)
{
    std::mt19937_64 rng(seed);
    long target = 2 + static_cast<long>(rng() % 719);
    std::vector<Integer> chain = detail::random_divisor_chain(rng, target);
    std::map<VertexId, Integer> w;
    for (int v = 0; v <= dim; ++v)
        w[v] = chain[rng() % chain.size()];
    if (semi_regular) {
        w[0] = 1;
        w[dim] = chain.back(); // >= 2
    }
    Simplex top(dim + 1);
    for (int v = 0; v <= dim; ++v)
        top[v] = v;
    return build_complex(w, {top});
}

/// Fixed representative instances of every generator family; the corpus the
/// structural suites sweep.
inline std::vector<std::pair<std::string, WeightedComplex>> example_corpus()
{
    std::vector<std::string> names = {
        "interval1", "interval2", "disk:2,4", "disk:3,5", "triangle:2,3,6",
        "teardrop:3", "football:2,4", "sphere:2,3,4", "sphere:6,12,27,36,108",
        "surface:g=1;k=3", "surface:c=1;k=2", "surface:g=2;k=2,4",
    };
    std::vector<std::pair<std::string, WeightedComplex>> out;
    out.reserve(names.size());
    for (const std::string& n : names)
        out.emplace_back(n, generate(parse_example_spec(n)));
    return out;
}

/// Corpus subset small enough to subdivide twice.
inline std::vector<std::pair<std::string, WeightedComplex>> subdivision_corpus()
{
    std::vector<std::string> names = {
        "interval1", "interval2", "disk:2,4", "triangle:2,3,6",
        "teardrop:3", "football:2,4", "sphere:2,3,4",
        "surface:g=1;k=3", "surface:c=1;k=2",
    };
    std::vector<std::pair<std::string, WeightedComplex>> out;
    out.reserve(names.size());
    for (const std::string& n : names)
        out.emplace_back(n, generate(parse_example_spec(n)));
    return out;
}

} // namespace orbihom
