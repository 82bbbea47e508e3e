#include "speclab/canonical.hpp"
#include "speclab/error.hpp"
#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace speclab;

TEST_CASE("relabelled cycles share a code")
{
    const Graph a(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Graph b(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_code(a) == canonical_code(b));
    const Graph k3k1(4, {{0, 1}, {1, 2}, {0, 2}});
    const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(canonical_code(k3k1) != canonical_code(p4));
}

TEST_CASE("all labelled graphs on four vertices give eleven codes")
{
    std::set<std::string> codes;
    oracle::for_each_labelled(4, [&](const Graph& g) { codes.insert(canonical_code(g)); });
    CHECK(codes.size() == 11);

    const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<Vertex> perm{0, 1, 2, 3};
    std::set<std::string> p4_codes;
    do {
        p4_codes.insert(canonical_code(relabel(p4, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(p4_codes.size() == 1);
}

TEST_CASE("code partition matches the brute-force canonical form")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        std::map<std::string, std::string> brute_to_code;
        std::set<std::string> codes;
        oracle::for_each_labelled(n, [&](const Graph& g) {
            const std::string code = canonical_code(g);
            const auto [it, fresh] = brute_to_code.emplace(oracle::brute_canonical(g), code);
            REQUIRE(it->second == code);
            codes.insert(code);
        });
        CHECK(codes.size() == brute_to_code.size());
    }
}

TEST_CASE("codes are invariant under random relabelling")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 9;
        const Graph g = oracle::random_graph(n, 0.2 + (trial % 7) / 10.0, rng);
        const std::string code = canonical_code(g);
        CHECK(g6_decode(code).order() == n);
        for (int k = 0; k < 100; ++k)
            REQUIRE(canonical_code(relabel(g, oracle::random_permutation(n, rng))) == code);
    }
}

TEST_CASE("canonical code is itself a relabelling of the input")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 10, 0.5, rng);
        const SmallGraph sg = SmallGraph::from_graph(g);
        const auto form = canonical_form(sg);
        std::vector<Vertex> perm(g.order());
        for (std::size_t k = 0; k < g.order(); ++k)
            perm[form.order[k]] = static_cast<Vertex>(k);
        CHECK(oracle::g6(relabel(g, perm)) == canonical_code(g));
    }
}

TEST_CASE("size limit")
{
    CHECK_THROWS_AS((void)canonical_code(Graph(11)), Error);
    CHECK_NOTHROW((void)canonical_code(Graph(10)));
}
