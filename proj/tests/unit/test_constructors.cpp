#include "speclab/canonical.hpp"
#include "speclab/constructors.hpp"
#include "speclab/error.hpp"
#include "speclab/minor.hpp"
#include "speclab/search.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace speclab;

namespace {

Graph build(std::string_view text) { return construct(FamilySpec::parse(text)).graph; }

std::vector<std::size_t> sorted_degrees(const Graph& g)
{
    auto d = g.degrees();
    std::sort(d.rbegin(), d.rend());
    return d;
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

TEST_CASE("spec text round trip and validation")
{
    const auto spec = FamilySpec::parse("ks-join-independent:s=2,n=8");
    CHECK(spec == ks_join_independent_spec(2, 8));
    CHECK(FamilySpec::parse(spec.to_string()) == spec);
    CHECK(spec.at("n") == 8);
    CHECK(code_of([] { return FamilySpec::parse("nonsense:n=3"); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { return FamilySpec::parse("complete:n=x"); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { return FamilySpec::parse("complete:q=3"); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { return FamilySpec::parse("complete-bipartite:a=3"); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { return build("cycle:n=2"); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { return build("ks-join-independent:s=5,n=5"); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { return build("hstar:s=3"); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { return build("complete:n=5000"); }) == ErrorCode::SizeLimitExceeded);
}

TEST_CASE("small families")
{
    CHECK(build("friendship:s=1") == build("complete:n=3"));
    const Graph q2 = build("intersecting-c4:t=2");
    CHECK(q2.order() == 7);
    CHECK(q2.edge_count() == 8);
    CHECK(q2.degree(0) == 4);
    CHECK(canonical_code(build("kt-join-matching:t=1,n=5")) == canonical_code(build("friendship:s=2")));
    CHECK(build("matching:t=5").edge_count() == 2);
    CHECK(build("path:n=4").edge_count() == 3);
    CHECK(build("cycle:n=6").edge_count() == 6);
    CHECK(build("independent:n=4").edge_count() == 0);
}

TEST_CASE("edge counts and layouts across parameters")
{
    for (int n = 2; n <= 40; ++n) {
        for (int s = 1; s < n && s <= 6; ++s) {
            const auto c = construct(ks_join_independent_spec(s, n));
            CHECK(c.graph.edge_count() == static_cast<std::size_t>(s * (s - 1) / 2 + s * (n - s)));
            CHECK(c.layout.is_partition());
            const auto m = construct(kt_join_matching_spec(s, n));
            CHECK(m.graph.edge_count() == static_cast<std::size_t>(s * (s - 1) / 2 + s * (n - s) + (n - s) / 2));
            CHECK(m.layout.is_partition());
        }
        for (int a = 1; a < n; ++a)
            CHECK(construct(complete_bipartite_spec(a, n - a)).graph.edge_count() ==
                  static_cast<std::size_t>(a * (n - a)));
    }
    for (int s = 1; s <= 8; ++s) {
        const auto f = construct(friendship_spec(s));
        CHECK(f.graph.edge_count() == static_cast<std::size_t>(3 * s));
        CHECK(f.layout.is_partition());
        const auto q = construct(intersecting_c4_spec(s));
        CHECK(q.graph.edge_count() == static_cast<std::size_t>(4 * s));
        CHECK(q.graph.order() == static_cast<std::size_t>(3 * s + 1));
    }
}

TEST_CASE("near regular realisations")
{
    const Graph g2 = near_regular(2);
    CHECK(g2.order() == 3);
    CHECK(sorted_degrees(g2) == std::vector<std::size_t>{1, 1, 0});
    const Graph g4 = near_regular(4);
    CHECK(g4.edge_count() == 10);
    CHECK(sorted_degrees(g4) == std::vector<std::size_t>{3, 3, 3, 3, 3, 3, 2});
    for (int s = 2; s <= 12; s += 2) {
        const Graph g = near_regular(s);
        CHECK(g.order() == static_cast<std::size_t>(2 * s - 1));
        CHECK(g.degree(static_cast<Vertex>(2 * s - 2)) == static_cast<std::size_t>(s - 2));
        for (Vertex v = 0; v + 1 < g.order(); ++v)
            CHECK(g.degree(v) == static_cast<std::size_t>(s - 1));
        CHECK_FALSE(fs_subgraph_witness(g, s).has_value());
    }
    CHECK_THROWS_AS(near_regular(3), Error);
}

TEST_CASE("hstar")
{
    const auto h2 = hstar(2);
    CHECK(h2.graph.order() == 3);
    CHECK(h2.graph.edge_count() == 1);
    CHECK(h2.layout.degenerate);
    CHECK(h2.layout.at("w_0").size() == 1);
    CHECK(h2.layout.at("B_1").size() == 1);
    CHECK(h2.layout.at("A_1").empty());
    CHECK(h2.layout.at("B_2").empty());
    const auto h4 = hstar(4);
    CHECK(h4.graph.order() == 7);
    CHECK(h4.graph.edge_count() == 10);
    CHECK_FALSE(h4.layout.degenerate);
    for (int s : {2, 4, 6, 8}) {
        const auto h = hstar(s);
        CHECK(2 * h.graph.edge_count() == static_cast<std::size_t>(2 * s * s - 3 * s));
        CHECK(h.layout.is_partition());
        CHECK_FALSE(fs_subgraph_witness(h.graph, s).has_value());
    }
}

TEST_CASE("edge-extremal constructions")
{
    const auto big = efgg_extremal(3, 450);
    CHECK(big.graph.edge_count() == 50631);
    CHECK(big.layout.is_partition());
    CHECK(efgg_extremal(1, 8).graph.edge_count() == 16);
    CHECK(efgg_extremal(2, 12).graph.edge_count() == 37);
    for (int s = 1; s <= 4; ++s)
        for (int n = 4 * s; n <= 40; ++n) {
            const auto c = efgg_extremal(s, n);
            CHECK(c.graph.edge_count() == efgg_edge_count(s, static_cast<std::size_t>(n)));
            CHECK_FALSE(fs_subgraph_witness(c.graph, s).has_value());
        }
}

TEST_CASE("spectral-extremal constructions")
{
    CHECK(zlx_extremal(1, 6).graph == build("complete-bipartite:a=3,b=3"));
    CHECK(zlx_extremal(3, 20).graph.edge_count() == 106);
    CHECK(zlx_extremal(2, 12).graph.edge_count() == efgg_extremal(2, 12).graph.edge_count());
    for (int s = 1; s <= 4; ++s)
        for (int n = 4 * s; n <= 30; ++n) {
            const auto c = zlx_extremal(s, n);
            CHECK(c.layout.is_partition());
            CHECK_FALSE(fs_subgraph_witness(c.graph, s).has_value());
        }
}
