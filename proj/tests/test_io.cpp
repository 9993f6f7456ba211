#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "orbihom/generators.hpp"
#include "orbihom/io.hpp"

using namespace orbihom;

TEST_CASE("reading the documented line types")
{
    std::istringstream in(R"(# a football with poles p and q
vertex p 4
vertex q 6
vertex a 1
vertex b 1
simplex p a b   # hemisphere pieces
simplex q a b
)");
    NamedComplex nc = read_complex(in);
    CHECK(nc.complex.vertex_count() == 4);
    CHECK(nc.ids.at("p") == 0);
    CHECK(nc.ids.at("b") == 3);
    CHECK(nc.complex.weight({0, 2, 3}) == 4);
    CHECK(nc.complex.divisibly_weighted());
}

TEST_CASE("explicit weight lines produce general weighted complexes")
{
    std::istringstream in(R"(
vertex a 2
vertex b 3
simplex a b
weight a b = 6
)");
    NamedComplex nc = read_complex(in);
    CHECK(nc.complex.weight({0, 1}) == 6);
    CHECK(!nc.complex.divisibly_weighted());
}

TEST_CASE("parse errors carry line numbers")
{
    std::istringstream empty("");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_complex(empty)), doctest::Contains("empty"), Error);

    std::istringstream bad("vertex a 1\nsimplex a zz\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_complex(bad)), doctest::Contains("line 2"), Error);

    std::istringstream dup("vertex a 1\nvertex a 2\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_complex(dup)), doctest::Contains("duplicate"), Error);

    std::istringstream junk("frobnicate a b\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_complex(junk)), doctest::Contains("ParseError"), Error);

    std::istringstream badw("vertex a 0\n");
    CHECK_THROWS_AS(static_cast<void>(read_complex(badw)), Error);
}

TEST_CASE("invalid chains are reported from the build, not the parser")
{
    std::istringstream in("vertex a 2\nvertex b 3\nsimplex a b\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_complex(in)), doctest::Contains("NonDivisibleChain"), Error);
}

TEST_CASE("write then read is the identity on the corpus")
{
    for (const auto& [name, K] : example_corpus()) {
        INFO(name);
        std::string text = to_text(K);
        std::istringstream in(text);
        NamedComplex back = read_complex(in);
        CHECK(back.complex == K);
    }
}

TEST_CASE("general weighted complexes survive the round trip via weight lines")
{
    WeightedComplex K = build_complex({{0, 2}, {1, 3}, {2, 1}}, {{0, 1}, {1, 2}},
                                      {{{0, 1}, Integer(12)}});
    std::string text = to_text(K);
    CHECK(text.find("weight v0 v1 = 12") != std::string::npos);
    std::istringstream in(text);
    CHECK(read_complex(in).complex == K);
}

TEST_CASE("group formatting")
{
    HomologyGroup g;
    CHECK(format_group(g) == "0");
    g.rank = 1;
    CHECK(format_group(g) == "Z");
    g.rank = 3;
    g.torsion = {Integer(2), Integer(6)};
    CHECK(format_group(g) == "Z^3 + Z/2 + Z/6");
}

TEST_CASE("chain formatting uses names and signs")
{
    std::vector<Simplex> basis = {{0, 1}, {1, 2}};
    std::vector<std::string> names = {"a", "b", "c"};
    std::vector<Integer> coeffs = {Integer(3), Integer(-1)};
    CHECK(format_chain(coeffs, basis, &names) == "3*[a,b] - 1*[b,c]");
    std::vector<Integer> zero = {Integer(0), Integer(0)};
    CHECK(format_chain(zero, basis, &names) == "0");
}
