#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbihom/generators.hpp"
#include "orbihom/subdivision.hpp"
#include "orbihom/verify.hpp"

using namespace orbihom;

TEST_CASE("subdividing an unweighted edge gives the 3-vertex path")
{
    ComplexPtr K = share(build_complex({{0, 1}, {1, 1}}, {{0, 1}}));
    SubdivisionRecord rec = barycentric_subdivide(K);
    CHECK(rec.result->vertex_count() == 3);
    CHECK(rec.result->simplex_count(1) == 2);
    CHECK(rec.barycenter_of.size() == K->simplex_count());
    for (VertexId v : rec.result->vertices())
        CHECK(rec.result->vertex_weight(v) == 1);
}

TEST_CASE("barycenter weights follow the minimum rule")
{
    ComplexPtr semi = share(build_complex({{0, 1}, {1, 6}}, {{0, 1}}));
    SubdivisionRecord rec = barycentric_subdivide(semi);
    // b_{edge} has weight min(1,6) = 1; singular set of Sd is the one old pole
    CHECK(rec.result->vertex_weight(2) == 1);
    WeightedComplex sing = singular_subcomplex(*rec.result);
    CHECK(sing.dim() == 0);
    CHECK(sing.vertex_count() == 1);

    ComplexPtr singular_edge = share(build_complex({{0, 2}, {1, 4}}, {{0, 1}}));
    SubdivisionRecord rec2 = barycentric_subdivide(singular_edge);
    CHECK(rec2.result->vertex_weight(2) == 2);
    for (int d = 0; d <= rec2.result->dim(); ++d)
        for (const Simplex& s : rec2.result->simplices(d))
            CHECK(classify(*rec2.result, s) == SimplexClass::Singular);
}

TEST_CASE("subdivision refuses non-divisibly-weighted complexes")
{
    ComplexPtr general =
        share(build_complex({{0, 2}, {1, 3}}, {{0, 1}}, {{{0, 1}, Integer(6)}}));
    CHECK_THROWS_WITH_AS(static_cast<void>(barycentric_subdivide(general)),
                         doctest::Contains("NotDivisiblyWeighted"), Error);
}

TEST_CASE("vertices subdivide to themselves with coefficient one")
{
    ComplexPtr K = share(teardrop(3));
    SubdivisionRecord rec = barycentric_subdivide(K);
    const IntMatrix& sd0 = sd_chain_map(rec, 0);
    for (int j = 0; j < K->simplex_count(0); ++j) {
        int hits = 0;
        for (int i = 0; i < rec.result->simplex_count(0); ++i)
            if (sgn(sd0.at(i, j)) != 0) {
                ++hits;
                CHECK(sd0.at(i, j) == 1);
                CHECK(rec.barycenter_of[rec.result->simplices(0)[i][0]] == K->simplices(0)[j]);
            }
        CHECK(hits == 1);
    }
}

TEST_CASE("the subdivision chain map of a weighted edge carries the lcm ratios")
{
    // edge (1,k): Sd([v0,v1]) = k [b_{v0}, b_e] - [b_{v1}, b_e]; k = 1 is the
    // classical two-piece subdivision
    for (long k : {1L, 5L}) {
        ComplexPtr K = share(build_complex({{0, 1}, {1, k}}, {{0, 1}}));
        SubdivisionRecord rec = barycentric_subdivide(K);
        const IntMatrix& sd1 = sd_chain_map(rec, 1);
        REQUIRE(sd1.cols() == 1);
        CHECK(sd1.at(rec.result->index_of({0, 2}), 0) == k);
        CHECK(sd1.at(rec.result->index_of({1, 2}), 0) == -1);
    }
}

TEST_CASE("Sd^w is a chain map and pi . Sd is the identity on chains")
{
    auto cases = subdivision_corpus();
    for (const auto& [name, K] : cases) {
        INFO(name);
        ComplexPtr k0 = share(K);
        SubdivisionRecord rec = barycentric_subdivide(k0); // chain-map identity is a hard postcondition
        CHECK(pi_sd_is_identity(rec));
    }
}

TEST_CASE("pi projects barycenters to least vertices in the (weight, id) order")
{
    ComplexPtr K = share(build_complex({{0, 2}, {1, 4}, {2, 1}}, {{0, 1}, {1, 2}}));
    SubdivisionRecord rec = barycentric_subdivide(K);
    const SimplicialMapData& pi = pi_projection(rec);
    CHECK(pi.kind == MapKind::WeightPreserving);
    // barycenter of the (2,4) edge goes to the weight-2 vertex
    for (std::size_t b = 0; b < rec.barycenter_of.size(); ++b) {
        if (rec.barycenter_of[b] == Simplex{0, 1})
            CHECK(pi.vertex_map.at(static_cast<VertexId>(b)) == 0);
        if (rec.barycenter_of[b] == Simplex{1, 2}) // weights (4,1): regular vertex wins
            CHECK(pi.vertex_map.at(static_cast<VertexId>(b)) == 2);
        if (rec.barycenter_of[b] == Simplex{2}) // regular barycenter to itself
            CHECK(pi.vertex_map.at(static_cast<VertexId>(b)) == 2);
    }
}

TEST_CASE("simplex classes transform as the subdivision bullets state")
{
    for (std::uint64_t seed : {5u, 6u, 7u}) {
        RandomComplexSpec spec;
        spec.dim = 1 + static_cast<int>(seed % 2);
        spec.vertices = 6;
        spec.maximal = 3;
        spec.seed = seed;
        ComplexPtr K = share(generate_random(spec));
        SubdivisionRecord rec = barycentric_subdivide(K);
        for (int d = 0; d <= rec.result->dim(); ++d)
            for (const Simplex& flag : rec.result->simplices(d)) {
                // the top flag member determines the source simplex
                const Simplex& top = rec.barycenter_of[flag.back()];
                SimplexClass src = classify(*K, top);
                SimplexClass img = classify(*rec.result, flag);
                if (src == SimplexClass::Regular)
                    CHECK(img == SimplexClass::Regular);
                if (src == SimplexClass::Singular)
                    CHECK(img == SimplexClass::Singular);
                if (src == SimplexClass::SemiRegular)
                    CHECK(img != SimplexClass::Singular);
            }
    }
}

TEST_CASE("the singular subcomplex commutes with subdivision")
{
    for (const auto& [name, K] : subdivision_corpus()) {
        INFO(name);
        WeightedComplex sing = singular_subcomplex(K);
        SubdivisionRecord rec = barycentric_subdivide(share(K));
        WeightedComplex sing_of_sd = singular_subcomplex(*rec.result);
        if (sing.empty()) {
            CHECK(sing_of_sd.empty());
            continue;
        }
        // Sd(Sigma K) consists of the flags all of whose members are singular
        std::size_t count = 0;
        for (int d = 0; d <= rec.result->dim(); ++d)
            for (const Simplex& flag : rec.result->simplices(d)) {
                bool all_singular = true;
                for (VertexId b : flag)
                    all_singular =
                        all_singular && classify(K, rec.barycenter_of[b]) == SimplexClass::Singular;
                if (all_singular) {
                    ++count;
                    CHECK(sing_of_sd.contains(flag));
                }
            }
        CHECK(count == sing_of_sd.simplex_count());
    }
}

TEST_CASE("subdivision invariance holds on the corpus in both theories")
{
    for (const auto& [name, K] : subdivision_corpus()) {
        INFO(name);
        ComplexPtr k0 = share(K);
        CHECK(verify_subdivision_invariance(k0, TheorySelector::wt()));
        CHECK(verify_subdivision_invariance(k0, TheorySelector::st()));
    }
}

TEST_CASE("teardrop groups persist through subdivision")
{
    ComplexPtr K = share(teardrop(4));
    CHECK(verify_subdivision_invariance(K, TheorySelector::st()));
    SubdivisionRecord rec = barycentric_subdivide(K);
    HomologyProfile st = st_homology(*rec.result);
    CHECK(st.group(0).torsion == std::vector<Integer>{Integer(4)});
    CHECK(st.group(1).is_trivial());
    CHECK(st.group(2).rank == 1);
}

TEST_CASE("the all-ones sphere matches classical subdivision invariance")
{
    ComplexPtr sphere = share(strip_weights(teardrop(2)));
    CHECK(verify_subdivision_invariance(sphere, TheorySelector::wt()));
}

TEST_CASE("iterated subdivision still passes")
{
    ComplexPtr K = share(teardrop(3));
    SubdivisionRecord rec = barycentric_subdivide(K);
    CHECK(verify_subdivision_invariance(rec.result, TheorySelector::wt()));
    CHECK(verify_subdivision_invariance(rec.result, TheorySelector::st()));
}

TEST_CASE("random complexes pass the full invariance battery")
{
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        RandomComplexSpec spec;
        spec.dim = 1 + static_cast<int>(seed % 2);
        spec.vertices = 5;
        spec.maximal = 3;
        spec.seed = seed;
        CHECK(subdivision_invariance_pass(generate_random(spec)));
    }
}
