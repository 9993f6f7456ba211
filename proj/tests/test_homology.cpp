#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "orbihom/generators.hpp"
#include "orbihom/homology.hpp"
#include "orbihom/io.hpp"
#include "orbihom/verify.hpp"

using namespace orbihom;

namespace {

HomologyGroup grp(int rank, std::vector<long> torsion = {})
{
    HomologyGroup g;
    g.rank = rank;
    for (long d : torsion)
        g.torsion.emplace_back(d);
    return g;
}

std::vector<Integer> chain_vector(const ChainComplexData& cc, int n,
                                  const std::vector<std::pair<Simplex, long>>& terms)
{
    std::vector<Integer> v(cc.basis_size(n));
    for (const auto& [s, a] : terms)
        v[cc.index[n].at(s)] += a;
    return v;
}

} // namespace

TEST_CASE("wt-homology of divisibly-weighted simplices is that of a point")
{
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        WeightedComplex K = random_dw_simplex(1 + static_cast<int>(seed % 5), seed, false);
        HomologyProfile p = wt_homology(K);
        CHECK(p.group(0) == grp(1));
        for (int n = 1; n <= K.dim(); ++n)
            CHECK(p.group(n).is_trivial());
    }
}

TEST_CASE("st-homology of a semi-regular edge is Z/k")
{
    WeightedComplex K = build_complex({{0, 1}, {1, 7}}, {{0, 1}});
    HomologyProfile p = st_homology(K);
    CHECK(p.group(0) == grp(0, {7}));
    CHECK(p.group(1).is_trivial());
}

TEST_CASE("intervals reproduce the one-dimensional orbifold tables")
{
    HomologyProfile one = st_homology(interval_one_singular(2));
    CHECK(one.group(0) == grp(0, {2}));
    CHECK(one.group(1).is_trivial());

    HomologyProfile two = st_homology(interval_two_singular(2, 2));
    CHECK(two.group(0) == grp(0, {2}));
    CHECK(two.group(1) == grp(1));

    HomologyProfile two_wt = wt_homology(interval_two_singular(2, 2));
    CHECK(two_wt.group(0) == grp(1));
    CHECK(two_wt.group(1).is_trivial());
}

TEST_CASE("teardrop homology")
{
    for (long k : {2L, 5L}) {
        WeightedComplex K = teardrop(k);
        HomologyProfile wt = wt_homology(K);
        CHECK(wt.group(0) == grp(1));
        CHECK(wt.group(1).is_trivial());
        CHECK(wt.group(2) == grp(1));
        HomologyProfile st = st_homology(K);
        CHECK(st.group(0) == grp(0, {k}));
        CHECK(st.group(1).is_trivial());
        CHECK(st.group(2) == grp(1));
    }
}

TEST_CASE("football homology")
{
    WeightedComplex K = football(4, 6);
    HomologyProfile wt = wt_homology(K);
    CHECK(wt.group(0) == grp(1));
    CHECK(wt.group(1) == grp(0, {2}));
    CHECK(wt.group(2) == grp(1));
    HomologyProfile st = st_homology(K);
    CHECK(st.group(0) == grp(0, {2}));
    CHECK(st.group(1) == grp(1, {2}));
    CHECK(st.group(2) == grp(1));
}

TEST_CASE("disk with two singular points")
{
    WeightedComplex K = disk2(4, 6);
    HomologyProfile wt = wt_homology(K);
    CHECK(wt.group(0) == grp(1));
    CHECK(wt.group(1).is_trivial());
    CHECK(wt.group(2).is_trivial());
    HomologyProfile st = st_homology(K);
    CHECK(st.group(0) == grp(0, {2}));
    CHECK(st.group(1) == grp(1));
    CHECK(st.group(2).is_trivial());
}

TEST_CASE("triangle with three singular points")
{
    WeightedComplex K = triangle2(4, 6, 10);
    HomologyProfile st = st_homology(K);
    CHECK(st.group(0) == grp(0, {2}));
    CHECK(st.group(1) == grp(2));
    CHECK(st.group(2).is_trivial());
    CHECK(wt_homology(K).group(0) == grp(1));
}

TEST_CASE("stage 0 is wt and stage infinity is st, exactly")
{
    for (const auto& [name, K] : example_corpus()) {
        INFO(name);
        HomologyProfile stage0 = n_stage_st_homology(K, Integer(0));
        HomologyProfile stageinf = n_stage_st_homology(K, std::nullopt);
        CHECK(stage0.same_groups(wt_homology(K)));
        CHECK(stageinf.same_groups(st_homology(K)));
    }
}

TEST_CASE("intermediate stage is relative to the filtered singular part")
{
    WeightedComplex K = football(2, 4);
    HomologyProfile st3 = n_stage_st_homology(K, Integer(3));
    // stage 3 keeps only the weight-2 pole
    WeightedComplex sub = n_stage_subcomplex(K, Integer(3));
    REQUIRE(sub.vertex_count() == 1);
    REQUIRE(sub.has_vertex(0));
    HomologyProfile direct = profile_from_chain(chain_complex(K, &sub), TheorySelector::st_stage(Integer(3)));
    CHECK(st3.same_groups(direct));
    // relative to one point: h_0 = Z/2 (the weight-2 class), h_2 = Z
    CHECK(st3.group(0) == grp(0, {2}));
    CHECK(st3.group(2) == grp(1));
}

TEST_CASE("disconnected complexes count components in h_0")
{
    WeightedComplex K = build_complex({{0, 1}, {1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 2}},
                                      {{0, 1, 2}, {3, 4}, {4, 5}, {3, 5}});
    HomologyProfile wt = wt_homology(K);
    CHECK(wt.group(0) == grp(2));
    CHECK(wt.group(1) == grp(1)); // the weight-2 circle
    // relative to the singular circle only the triangle component remains
    HomologyProfile st = st_homology(K);
    CHECK(st.group(0) == grp(1));
    CHECK(st.group(1).is_trivial());
}

TEST_CASE("coefficients: rationals keep ranks, primes see matching torsion")
{
    WeightedComplex F = football(4, 6);
    HomologyProfile q = homology_with_coefficients(F, TheorySelector::st(), CoefficientRing::rationals());
    CHECK(q.group(0) == grp(0));
    CHECK(q.group(1) == grp(1));
    CHECK(q.group(2) == grp(1));

    HomologyProfile z = homology_with_coefficients(F, TheorySelector::st(), CoefficientRing::integers());
    CHECK(z.same_groups(st_homology(F)));

    WeightedComplex T = teardrop(6);
    HomologyProfile f2 = homology_with_coefficients(T, TheorySelector::st(), CoefficientRing::prime_field(2));
    CHECK(f2.group(0) == grp(1));
    CHECK(f2.group(1) == grp(1)); // Tor from h_0 = Z/6
    CHECK(f2.group(2) == grp(1));
    HomologyProfile f5 = homology_with_coefficients(T, TheorySelector::st(), CoefficientRing::prime_field(5));
    CHECK(f5.group(0) == grp(0));
    CHECK(f5.group(1) == grp(0));
    CHECK(f5.group(2) == grp(1));
}

TEST_CASE("coefficients: Z/m via tensor and Tor")
{
    WeightedComplex T = teardrop(6);
    HomologyProfile m4 = homology_with_coefficients(T, TheorySelector::st(), CoefficientRing::mod_ring(4));
    CHECK(m4.group(0) == grp(0, {2}));
    CHECK(m4.group(1) == grp(0, {2}));
    CHECK(m4.group(2) == grp(0, {4}));
}

TEST_CASE("coefficient ring validation")
{
    CHECK_THROWS_AS(static_cast<void>(CoefficientRing::prime_field(6)), Error);
    CHECK_THROWS_AS(static_cast<void>(CoefficientRing::mod_ring(1)), Error);
}

TEST_CASE("classical homology of the underlying sphere via the all-ones pipeline")
{
    WeightedComplex K = strip_weights(teardrop(5));
    HomologyProfile p = wt_homology(K);
    CHECK(p.group(0) == grp(1));
    CHECK(p.group(1).is_trivial());
    CHECK(p.group(2) == grp(1));
}

TEST_CASE("coefficient isomorphisms against the all-ones pipeline")
{
    for (std::uint64_t seed : {51u, 52u, 53u, 54u}) {
        RandomComplexSpec spec;
        spec.dim = 1 + static_cast<int>(seed % 3);
        spec.vertices = spec.dim + 5;
        spec.maximal = 4;
        spec.seed = seed;
        CHECK(coefficients_pass(generate_random(spec)));
    }
}

namespace {

/// Fraction-free Gaussian elimination (Bareiss) rank, independent of the
/// Smith-reduction code path.
int bareiss_rank(IntMatrix m)
{
    const int nr = m.rows(), nc = m.cols();
    Integer prev = 1;
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int pivot = -1;
        for (int r = rank; r < nr; ++r)
            if (sgn(m.at(r, col)) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        m.swap_rows(rank, pivot);
        for (int r = rank + 1; r < nr; ++r) {
            for (int c = col + 1; c < nc; ++c)
                m.at(r, c) = (m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c)) / prev;
            m.at(r, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("group ranks agree with an elimination-based rank oracle")
{
    for (std::uint64_t seed : {81u, 82u, 83u, 84u, 85u}) {
        RandomComplexSpec spec;
        spec.dim = 1 + static_cast<int>(seed % 3);
        spec.vertices = spec.dim + 5;
        spec.maximal = 4;
        spec.seed = seed;
        WeightedComplex K = generate_random(spec);
        for (TheorySelector t : {TheorySelector::wt(), TheorySelector::st()}) {
            ChainComplexData cc = theory_chain_complex(K, t);
            HomologyProfile p = profile_from_chain(cc, t);
            for (int n = 0; n <= cc.dim(); ++n) {
                int expect = cc.basis_size(n) - bareiss_rank(cc.boundaries[n]) -
                             bareiss_rank(cc.boundary(n + 1));
                CHECK(p.group(n).rank == expect);
            }
        }
    }
}

TEST_CASE("multiplying by a weight-1 point preserves all profiles")
{
    WeightedComplex point = build_complex({{0, 1}}, {});
    WeightedComplex K = teardrop(3);
    WeightedComplex P = cartesian_product(K, point);
    CHECK(wt_homology(P).same_groups(wt_homology(K)));
    CHECK(st_homology(P).same_groups(st_homology(K)));
}

TEST_CASE("euler relation on the named examples")
{
    EulerCheck t = euler_check(teardrop(3));
    CHECK(t.ok);
    CHECK(t.lhs == 1);

    EulerCheck s = euler_check(strip_weights(teardrop(3)));
    CHECK(s.ok);
    CHECK(s.lhs == 2); // chi of the 2-sphere

    EulerCheck d = euler_check(triangle2(2, 3, 4));
    CHECK(d.ok);
    CHECK(d.lhs == -2);
    CHECK(d.rhs == -2);
}

TEST_CASE("long exact sequence rank bookkeeping vanishes")
{
    for (const auto& [name, K] : example_corpus()) {
        INFO(name);
        CHECK(les_rank_check(K));
    }
    for (std::uint64_t seed : {61u, 62u, 63u}) {
        RandomComplexSpec spec;
        spec.seed = seed;
        CHECK(les_rank_check(generate_random(spec)));
    }
}

TEST_CASE("identity maps induce identity on homology")
{
    ComplexPtr K = share(football(2, 4));
    for (TheorySelector t : {TheorySelector::wt(), TheorySelector::st()}) {
        std::vector<IntMatrix> m = induced_homology_map(identity_map(K), t);
        HomologyBasis hb = compute_homology_basis(theory_chain_complex(*K, t));
        for (int n = 0; n <= K->dim(); ++n)
            CHECK(m[n] == IntMatrix::identity(hb.dims[n].generators.cols()));
    }
}

TEST_CASE("collapsing a circle to a point kills H_1")
{
    ComplexPtr circle = share(build_complex({{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {1, 2}, {0, 2}}));
    ComplexPtr point = share(build_complex({{0, 1}}, {}));
    SimplicialMapData f{circle, point, {{0, 0}, {1, 0}, {2, 0}}, MapKind::WeightPreserving};
    std::vector<IntMatrix> m = induced_homology_map(f, TheorySelector::wt());
    REQUIRE(m.size() == 2);
    CHECK(m[1].rows() == 0); // H_1(point) = 0
    CHECK(m[1].cols() == 1); // H_1(circle) = Z
    CHECK(m[0].at(0, 0) == 1);
}

TEST_CASE("morphisms are rejected on st-homology")
{
    ComplexPtr src = share(build_complex({{0, 6}}, {}));
    ComplexPtr tgt = share(build_complex({{0, 3}}, {}));
    SimplicialMapData f{src, tgt, {{0, 0}}, MapKind::Morphism};
    CHECK_THROWS_WITH_AS(static_cast<void>(induced_homology_map(f, TheorySelector::st())),
                         doctest::Contains("MorphismOnStHomology"), Error);
    // stage 0 is wt, where morphisms act
    CHECK_NOTHROW(static_cast<void>(induced_homology_map(f, TheorySelector::st_stage(Integer(0)))));
}

TEST_CASE("functoriality through a product section and projection")
{
    for (std::uint64_t seed : {71u, 72u}) {
        RandomComplexSpec spec;
        spec.dim = 1 + static_cast<int>(seed % 2);
        spec.vertices = 5;
        spec.maximal = 3;
        spec.seed = seed;
        ComplexPtr K = share(generate_random(spec));
        ComplexPtr edge = share(build_complex({{0, 1}, {1, 1}}, {{0, 1}}));
        ComplexPtr P = share(cartesian_product(*K, *edge));

        std::vector<VertexId> order = vertices_by_weight(*K);
        SimplicialMapData proj{P, K, {}, MapKind::WeightPreserving};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int j = 0; j < 2; ++j)
                proj.vertex_map[static_cast<VertexId>(2 * i + j)] = order[i];
        SimplicialMapData incl{K, P, {}, MapKind::WeightPreserving};
        for (std::size_t i = 0; i < order.size(); ++i)
            incl.vertex_map[order[i]] = static_cast<VertexId>(2 * i);

        for (TheorySelector t : {TheorySelector::wt(), TheorySelector::st()}) {
            std::vector<IntMatrix> f_star = induced_homology_map(incl, t);
            std::vector<IntMatrix> g_star = induced_homology_map(proj, t);
            std::vector<IntMatrix> gf_star = induced_homology_map(compose(proj, incl), t);
            HomologyBasis tgt = compute_homology_basis(theory_chain_complex(*K, t));
            for (int n = 0; n <= K->dim(); ++n) {
                IntMatrix prod = g_star[n] * f_star[n];
                reduce_mod_orders(prod, tgt.dims[n].orders);
                IntMatrix expect = gf_star[n];
                reduce_mod_orders(expect, tgt.dims[n].orders);
                CHECK(prod == expect);
            }
        }
    }
}

TEST_CASE("witness cycles represent the reported generators")
{
    WeightedComplex K = football(4, 6);
    HomologyProfile st = st_homology(K, true);
    REQUIRE(st.has_witnesses);
    REQUIRE(st.witness_chains[1].cols() == 2); // Z + Z/2

    HomologyBasis hb = compute_homology_basis(theory_chain_complex(K, TheorySelector::st()));
    for (int n = 0; n <= K.dim(); ++n)
        for (int j = 0; j < st.witness_chains[n].cols(); ++j) {
            std::vector<Integer> coords = coords_of_cycle(hb, n, st.witness_chains[n].column(j));
            for (int i = 0; i < static_cast<int>(coords.size()); ++i) {
                if (i == j)
                    CHECK(coords[i] == 1);
                else
                    CHECK(sgn(coords[i]) == 0);
            }
        }
}

TEST_CASE("the named football generators are homologous to the computed basis")
{
    // free part: lcm/k1 [v1,u1] - lcm/k2 [v2,u1]; torsion: the equator cycle
    const long k1 = 4, k2 = 6;
    WeightedComplex K = football(k1, k2);
    HomologyBasis hb = compute_homology_basis(theory_chain_complex(K, TheorySelector::st()));
    const DimBasis& db = hb.dims[1];
    REQUIRE(db.orders.size() == 2);
    REQUIRE(db.orders[0] == 2); // Z/gcd first, then the free generator
    REQUIRE(db.orders[1] == 0);

    std::vector<Integer> named = chain_vector(hb.cc, 1, {{{0, 2}, 12 / k1}, {{1, 2}, -12 / k2}});
    std::vector<Integer> coords = coords_of_cycle(hb, 1, named);
    CHECK((coords[1] == 1 || coords[1] == -1)); // generates the Z factor

    std::vector<Integer> equator =
        chain_vector(hb.cc, 1, {{{2, 3}, 1}, {{3, 4}, 1}, {{4, 5}, 1}, {{2, 5}, -1}});
    std::vector<Integer> tc = coords_of_cycle(hb, 1, equator);
    CHECK(tc[0] == 1); // generates the Z/2 torsion factor
    CHECK(sgn(tc[1]) == 0);

    // wt: torsion of H_1 is generated by the same equator cycle
    HomologyBasis wb = compute_homology_basis(theory_chain_complex(K, TheorySelector::wt()));
    std::vector<Integer> equator_abs =
        chain_vector(wb.cc, 1, {{{2, 3}, 1}, {{3, 4}, 1}, {{4, 5}, 1}, {{2, 5}, -1}});
    std::vector<Integer> wc = coords_of_cycle(wb, 1, equator_abs);
    REQUIRE(wb.dims[1].orders == std::vector<Integer>{Integer(2)});
    CHECK(wc[0] == 1);
}

TEST_CASE("the three triangle side cycles generate st h_1")
{
    auto side_cycles = [](const WeightedComplex& K, const HomologyBasis& hb, long k1, long k2, long k3) {
        auto cyc = [&](VertexId va, VertexId vb, VertexId mid, long ka, long kb) {
            long l = std::lcm(ka, kb);
            return chain_vector(hb.cc, 1, {{{std::min(va, mid), std::max(va, mid)}, l / ka},
                                           {{std::min(vb, mid), std::max(vb, mid)}, -l / kb}});
        };
        std::vector<std::vector<Integer>> out;
        out.push_back(coords_of_cycle(hb, 1, cyc(0, 1, 3, k1, k2)));
        out.push_back(coords_of_cycle(hb, 1, cyc(1, 2, 4, k2, k3)));
        out.push_back(coords_of_cycle(hb, 1, cyc(0, 2, 5, k1, k3)));
        return out;
    };

    {
        const long k1 = 4, k2 = 6, k3 = 10;
        WeightedComplex K = triangle2(k1, k2, k3);
        HomologyBasis hb = compute_homology_basis(theory_chain_complex(K, TheorySelector::st()));
        REQUIRE(hb.dims[1].orders == std::vector<Integer>({Integer(0), Integer(0)}));
        auto cycles = side_cycles(K, hb, k1, k2, k3);
        IntMatrix coords(2, 3);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 2; ++i)
                coords.at(i, j) = cycles[j][i];
        // jointly they generate Z^2: both invariant factors are 1
        SmithDecomposition s = smith_normal_form(coords);
        REQUIRE(s.rank == 2);
        CHECK(s.D.at(0, 0) == 1);
        CHECK(s.D.at(1, 1) == 1);
    }

    {
        // when lcm(k1,k2,k3) = lcm(k1,k3), the first two cycles alone form a
        // basis
        const long k1 = 4, k2 = 2, k3 = 6;
        WeightedComplex K = triangle2(k1, k2, k3);
        HomologyBasis hb = compute_homology_basis(theory_chain_complex(K, TheorySelector::st()));
        auto cycles = side_cycles(K, hb, k1, k2, k3);
        Integer det = cycles[0][0] * cycles[1][1] - cycles[0][1] * cycles[1][0];
        CHECK((det == 1 || det == -1));
    }
}
