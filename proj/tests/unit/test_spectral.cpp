#include "speclab/constructors.hpp"
#include "speclab/error.hpp"
#include "speclab/spectral.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace speclab;

namespace {

Graph build(std::string_view text) { return construct(FamilySpec::parse(text)).graph; }
double rho(const Graph& g) { return spectral_radius(g).rho; }

}  // namespace

TEST_CASE("reference values")
{
    CHECK(rho(build("cycle:n=4")) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(rho(build("complete-bipartite:a=2,b=9")) - std::sqrt(18.0)) <= 1e-9);
    CHECK(std::abs(rho(build("friendship:s=2")) - (1 + std::sqrt(17.0)) / 2) <= 1e-9);
    CHECK(std::abs(rho(build("ks-join-independent:s=2,n=6")) - (1 + std::sqrt(33.0)) / 2) <= 1e-9);
    CHECK(std::abs(rho_closed_form(FamilySpec::parse("kt-join-matching:t=1,n=5")) - (1 + std::sqrt(17.0)) / 2) <= 1e-12);
    CHECK(std::abs(rho_closed_form(FamilySpec::parse("ks-join-independent:s=2,n=6")) - (1 + std::sqrt(33.0)) / 2) <= 1e-12);
    CHECK(rho(Graph(1)) == 0.0);
    CHECK(rho(Graph(5)) == 0.0);
}

TEST_CASE("result contract")
{
    const Graph g = build("kt-join-matching:t=2,n=11");
    const auto r = spectral_radius(g);
    CHECK(r.residual <= 1e-8);
    CHECK(*std::max_element(r.vector.begin(), r.vector.end()) == 1.0);
    CHECK(r.iterations > 0);

    // Disconnected input: the vector lives on the larger component.
    const Graph two = disjoint_union(build("complete:n=4"), build("path:n=3"));
    const auto t = spectral_radius(two);
    CHECK(t.rho == doctest::Approx(3.0).epsilon(1e-10));
    for (Vertex v = 4; v < 7; ++v)
        CHECK(t.vector[v] == 0.0);

    CHECK_THROWS_AS(spectral_radius(Graph(0)), Error);
    try {
        (void)spectral_radius(build("path:n=40"), 1e-14, 2);
        FAIL("expected ConvergenceFailure");
    }
    catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConvergenceFailure);
    }
}

TEST_CASE("agreement with a dense eigensolver")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 40;
        const Graph g = oracle::random_graph(n, 0.05 + (trial % 9) / 10.0, rng);
        const auto r = spectral_radius(g);
        CHECK(std::abs(r.rho - oracle::dense_rho(g)) <= 1e-8);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_connected(3 + trial % 30, 0.1, rng);
        const auto r = spectral_radius(g);
        const auto x = oracle::dense_perron(g);
        for (std::size_t v = 0; v < g.order(); ++v)
            REQUIRE(std::abs(r.vector[v] - x[v]) <= 1e-6);
    }
}

TEST_CASE("bounds and monotonicity")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 3 + trial % 25;
        const Graph g = oracle::random_connected(n, 0.15, rng);
        const double r = rho(g);
        const auto degs = g.degrees();
        const double avg = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
        CHECK(r >= avg - 1e-9);
        CHECK(r <= static_cast<double>(*std::max_element(degs.begin(), degs.end())) + 1e-9);

        std::vector<Edge> missing;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                if (!g.adjacent(i, j))
                    missing.emplace_back(i, j);
        if (missing.empty())
            continue;
        const std::vector<Edge> one{missing[trial % missing.size()]};
        CHECK(rho(add_edges(g, one)) > r + 1e-12);
    }
}

TEST_CASE("closed forms against power iteration")
{
    for (int p = 1; p <= 5; ++p)
        for (int n = p + 1; n <= 200; n += (n < 30 ? 1 : 17)) {
            for (const auto& spec : {ks_join_independent_spec(p, n), kt_join_matching_spec(p, n)}) {
                const double exact = rho_closed_form(spec);
                CHECK(std::abs(rho(construct(spec).graph) - exact) <= 1e-9);
            }
            const auto kab = complete_bipartite_spec(p, n - p);
            CHECK(std::abs(rho_closed_form(kab) - std::sqrt(static_cast<double>(p * (n - p)))) <= 1e-12);
            CHECK(std::abs(rho(construct(kab).graph) - std::sqrt(static_cast<double>(p * (n - p)))) <= 1e-9);
        }
    CHECK(rho_closed_form(complete_spec(7)) == 6.0);
    CHECK(rho_closed_form(FamilySpec::parse("cycle:n=9")) == 2.0);
    CHECK_THROWS_AS(rho_closed_form(friendship_spec(2)), Error);
}

TEST_CASE("quotient matrices")
{
    CHECK(std::abs(quotient_spectral_radius({{1, 4}, {2, 0}}) - (1 + std::sqrt(33.0)) / 2) <= 1e-12);
    CHECK(std::abs(quotient_spectral_radius({{0, 4}, {1, 1}}) - (1 + std::sqrt(17.0)) / 2) <= 1e-12);
    CHECK(std::abs(quotient_spectral_radius({{5}}) - 5.0) <= 1e-12);
    CHECK(std::abs(quotient_spectral_radius({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}) - std::sqrt(2.0)) <= 1e-10);
}

TEST_CASE("minimum Perron entry")
{
    const Graph ks = build("ks-join-independent:s=2,n=10");
    const auto r = spectral_radius(ks);
    const auto audit = verify_perron_bound(ks, r, 1e-8);
    CHECK(audit.satisfied);
    CHECK(std::abs(audit.min_entry - 2.0 / r.rho) <= 1e-9);

    const Graph star = build("complete-bipartite:a=1,b=5");
    const auto sa = verify_perron_bound(star, spectral_radius(star), 1e-9);
    CHECK(sa.satisfied);
    CHECK(std::abs(sa.margin) <= 1e-9);
    CHECK(std::abs(sa.min_entry - 1 / std::sqrt(5.0)) <= 1e-9);

    // K_6 with a 6-edge pendant path hanging off vertex 0.
    GraphBuilder b(12);
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v)
            b.add_edge(u, v);
    b.add_edge(0, 6);
    for (Vertex v = 6; v < 11; ++v)
        b.add_edge(v, v + 1);
    const Graph tail = std::move(b).build();
    const auto ta = verify_perron_bound(tail, spectral_radius(tail), 1e-8);
    CHECK_FALSE(ta.satisfied);
    CHECK(ta.argmin == 11);
    CHECK(std::abs(ta.min_entry - oracle::dense_perron(tail)[11]) <= 1e-7);

    CHECK_THROWS_AS(verify_perron_bound(Graph(3), spectral_radius(Graph(3)), 1e-8), Error);
}
