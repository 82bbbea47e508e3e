#include "speclab/error.hpp"
#include "speclab/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace speclab;

namespace {

Graph complete(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph cycle(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return std::move(b).build();
}

ErrorCode code_of(auto&& f)
{
    try {
        f();
    }
    catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::PreconditionFailed;
}

}  // namespace

TEST_CASE("vertex sets")
{
    VertexSet s(70, {1, 65, 3});
    CHECK(s.size() == 3);
    CHECK(s.contains(65));
    CHECK_FALSE(s.contains(2));
    CHECK(s.members() == std::vector<Vertex>{1, 3, 65});
    CHECK(code_of([&] { s.insert(70); }) == ErrorCode::IndexOutOfRange);
    const auto r = VertexSet::range(70, 2, 5);
    CHECK((s & r).members() == std::vector<Vertex>{3});
    CHECK((s | r).size() == 5);
    CHECK((s - r).members() == std::vector<Vertex>{1, 65});
    CHECK(VertexSet::full(70).size() == 70);
    CHECK(code_of([&] { (void)s.intersects(VertexSet(10)); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("graph basics and invariants")
{
    const Graph k4 = complete(4);
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.degree(2) == 3);
    CHECK_NOTHROW(k4.check_invariants());
    CHECK(code_of([] { return Graph(4097); }) == ErrorCode::SizeLimitExceeded);
    CHECK(code_of([] { return Graph(3, {{1, 1}}); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { return Graph(3, {{0, 3}}); }) == ErrorCode::IndexOutOfRange);
    CHECK(Graph(3, {{0, 1}, {1, 0}}).edge_count() == 1);
    CHECK(code_of([&] { (void)k4.adjacent(0, 9); }) == ErrorCode::IndexOutOfRange);
    CHECK(Graph(4096).order() == 4096);
}

TEST_CASE("contraction")
{
    CHECK(contract_edge(complete(3), 0, 2) == complete(2));
    CHECK(contract_edge(cycle(4), 1, 2) == complete(3));

    // K_{3,2}: a1 a2 a3 = 0 1 2, b1 b2 = 3 4.
    const Graph k32(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const Graph c = contract_edge(k32, 0, 3);
    CHECK(c.order() == 4);
    CHECK(c.edge_count() == 5);
    auto degs = c.degrees();
    std::sort(degs.rbegin(), degs.rend());
    CHECK(degs == std::vector<std::size_t>{3, 3, 2, 2});

    CHECK(code_of([&] { return contract_edge(k32, 0, 1); }) == ErrorCode::NotAnEdge);
    CHECK(code_of([&] { return contract_edge(k32, 2, 2); }) == ErrorCode::NotAnEdge);
    CHECK(code_of([&] { return contract_edge(k32, 0, 7); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("contraction keeps min index and shifts the rest down")
{
    // path 0-1-2-3-4, contract 1-3 is not an edge; contract 2-3.
    const Graph p(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const Graph c = contract_edge(p, 3, 2);
    CHECK(c == Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

TEST_CASE("contraction edge identity on random graphs")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 12, 0.4, rng);
        const auto edges = g.edges();
        if (edges.empty())
            continue;
        const auto [u, v] = edges[trial % edges.size()];
        const Graph c = contract_edge(g, u, v);
        const auto common = (g.neighborhood(u) & g.neighborhood(v)).size();
        CHECK(c.order() == g.order() - 1);
        CHECK(c.edge_count() == g.edge_count() - 1 - common);
        CHECK_NOTHROW(c.check_invariants());
        const Vertex keep = std::min(u, v);
        auto merged = (g.neighborhood(u) | g.neighborhood(v)).members();
        std::size_t want = 0;
        for (Vertex w : merged)
            if (w != u && w != v)
                ++want;
        CHECK(c.degree(keep) == want);
    }
}

TEST_CASE("deletion")
{
    CHECK(delete_vertex(complete(4), 2) == complete(3));
    const Graph p3 = delete_edge(complete(3), 0, 2);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(1) == 2);
    CHECK(code_of([&] { return delete_edge(p3, 0, 2); }) == ErrorCode::NotAnEdge);
    CHECK(code_of([&] { return delete_vertex(p3, 3); }) == ErrorCode::IndexOutOfRange);

    // F_2 = K_1 v 2K_2, centre 0.
    const Graph f2(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
    const Graph rest = delete_vertex(f2, 0);
    CHECK(rest == Graph(4, {{0, 1}, {2, 3}}));

    const Graph shifted = delete_vertex(Graph(4, {{0, 3}, {1, 2}}), 1);
    CHECK(shifted == Graph(3, {{0, 2}}));
}

TEST_CASE("join and union")
{
    const Graph k2(2, {{0, 1}});
    const Graph m4 = disjoint_union(k2, k2);
    CHECK(m4 == Graph(4, {{0, 1}, {2, 3}}));
    const Graph f2 = join(Graph(1), m4);
    CHECK(f2.order() == 5);
    CHECK(f2.edge_count() == 6);
    CHECK(f2.degree(0) == 4);
    const Graph k34 = join(Graph(3), Graph(4));
    CHECK(k34.edge_count() == 12);
    CHECK_FALSE(k34.adjacent(0, 1));
    CHECK(k34.adjacent(0, 3));
    CHECK(code_of([] { return join(Graph(4000), Graph(100)); }) == ErrorCode::SizeLimitExceeded);
    CHECK(code_of([] { return disjoint_union(Graph(4000), Graph(100)); }) == ErrorCode::SizeLimitExceeded);
}

TEST_CASE("induced subgraphs, relabelling, components")
{
    const Graph c5 = cycle(5);
    const Graph p = induced_subgraph(c5, VertexSet(5, {0, 1, 2}));
    CHECK(p == Graph(3, {{0, 1}, {1, 2}}));

    const std::vector<Vertex> perm{2, 0, 1, 4, 3};
    const Graph r = relabel(c5, perm);
    for (auto [u, v] : c5.edges())
        CHECK(r.adjacent(perm[u], perm[v]));
    CHECK(r.edge_count() == 5);
    const std::vector<Vertex> bad{0, 0, 1, 2, 3};
    CHECK(code_of([&] { return relabel(c5, bad); }) == ErrorCode::IndexOutOfRange);

    const Graph two(6, {{0, 3}, {1, 2}, {2, 5}});
    const auto comps = connected_components(two);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].members() == std::vector<Vertex>{0, 3});
    CHECK(comps[1].members() == std::vector<Vertex>{1, 2, 5});
    CHECK(comps[2].members() == std::vector<Vertex>{4});
    CHECK_FALSE(is_connected(two));
    CHECK(is_connected(c5));
    CHECK(is_connected(Graph(1)));

    const Graph k24 = join(Graph(2), Graph(4));
    CHECK(common_neighborhood(k24, VertexSet(6, {0, 1})).members() == std::vector<Vertex>{2, 3, 4, 5});
}

TEST_CASE("add_edges and builder")
{
    const std::vector<Edge> extra{{0, 2}, {1, 2}};
    const Graph g = add_edges(Graph(3, {{0, 1}}), extra);
    CHECK(g == complete(3));
    GraphBuilder b(4);
    const std::vector<Vertex> clique{0, 1, 3};
    b.add_clique(clique).remove_edge(0, 3);
    const Graph h = b.build();
    CHECK(h.edge_count() == 2);
    CHECK(h.adjacent(1, 3));
}
