#include "speclab/canonical.hpp"
#include "speclab/constructors.hpp"
#include "speclab/error.hpp"
#include "speclab/search.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace speclab;

TEST_CASE("constraint text")
{
    const auto c = Constraint::parse("fs-minor-free:s=2");
    CHECK(c.kind == ConstraintKind::FsMinorFree);
    CHECK(c.param == 2);
    CHECK(Constraint::parse("fs-minor:s=2") == c);
    CHECK(Constraint::parse(c.to_string()) == c);
    CHECK(Constraint::parse("qt-subgraph:t=1").kind == ConstraintKind::QtSubgraphFree);
    CHECK_THROWS_AS(Constraint::parse("fs-minor:t=2"), Error);
    CHECK_THROWS_AS(Constraint::parse("fs-minor:s=0"), Error);
    CHECK_THROWS_AS(Constraint::parse("whatever"), Error);
    CHECK(c.predicted(7) == ks_join_independent_spec(2, 7));
    CHECK(Constraint::parse("qt-minor:t=1").predicted(7) == kt_join_matching_spec(1, 7));
}

TEST_CASE("trees: the star wins")
{
    const auto r = extremal_search(8, Constraint::parse("fs-minor:s=1"));
    CHECK(r.enumerated == 11117);
    CHECK(r.feasible == 23);
    CHECK(std::abs(r.best_rho - std::sqrt(7.0)) <= 1e-9);
    REQUIRE(r.maximizers.size() == 1);
    CHECK(r.maximizers[0] == canonical_code(construct(complete_bipartite_spec(1, 7)).graph));
    CHECK(r.match);
    CHECK(r.exhausted_count == 0);
}

TEST_CASE("feasible counts against a direct filter")
{
    for (std::size_t n = 3; n <= 6; ++n) {
        std::set<std::string> f1;
        std::set<std::string> q1;
        oracle::for_each_labelled(n, [&](const Graph& g) {
            if (!oracle::connected(g))
                return;
            if (!oracle::has_cycle(g))
                f1.insert(oracle::brute_canonical(g));
            if (!oracle::has_cycle_at_least(g, 4))
                q1.insert(oracle::brute_canonical(g));
        });
        CHECK(extremal_search(n, Constraint::parse("fs-minor:s=1")).feasible == f1.size());
        CHECK(extremal_search(n, Constraint::parse("qt-minor:t=1")).feasible == q1.size());
    }
}

TEST_CASE("two triangles forbidden at n = 7")
{
    const auto r = extremal_search(7, Constraint::parse("fs-minor:s=2"));
    CHECK(r.predicted_g6 == canonical_code(construct(ks_join_independent_spec(2, 7)).graph));
    CHECK(std::abs(rho_closed_form(ks_join_independent_spec(2, 7)) - (1 + std::sqrt(41.0)) / 2) <= 1e-12);
    CHECK(r.exhausted_count == 0);
    CHECK(r.best_rho >= (1 + std::sqrt(41.0)) / 2 - 1e-9);
    CHECK(r.match == (std::find(r.maximizers.begin(), r.maximizers.end(), r.predicted_g6) != r.maximizers.end()));
}

TEST_CASE("worker count does not change the report")
{
    for (const char* text : {"qt-minor:t=1", "fs-subgraph:s=2", "qt-subgraph:t=1"}) {
        SearchOptions one;
        SearchOptions many;
        many.workers = 4;
        auto a = extremal_search(7, Constraint::parse(text), one);
        auto b = extremal_search(7, Constraint::parse(text), many);
        a.elapsed = b.elapsed = 0;
        CHECK(a.maximizers == b.maximizers);
        CHECK(a.feasible == b.feasible);
        CHECK(a.best_rho == b.best_rho);
        CHECK(a.notes == b.notes);
    }
}

TEST_CASE("predicted extremal graphs at small n")
{
    const auto checks = verify_theorem_small_n(TheoremMode::Fs, 1, 4, 7);
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) {
        CHECK(c.report.match);
        CHECK(c.predicted_free);
        CHECK(c.closed_form_agrees);
    }
    for (const auto& c : verify_theorem_small_n(TheoremMode::Qt, 1, 5, 7)) {
        CHECK(c.predicted_free);
        CHECK(c.closed_form_agrees);
    }
    for (const auto& c : verify_theorem_small_n(TheoremMode::Fs, 2, 6, 7))
        CHECK(c.predicted_free);
    CHECK_THROWS_AS(verify_theorem_small_n(TheoremMode::Fs, 2, 2, 5), Error);
    CHECK_THROWS_AS(extremal_search(10, Constraint::parse("fs-minor:s=1")), Error);
}

TEST_CASE("edge-bound audits")
{
    CHECK(efgg_edge_count(3, 450) == 50631);
    CHECK(efgg_edge_count(2, 12) == 37);
    CHECK(efgg_edge_count(4, 20) == 110);

    const auto a = edge_bound_audit({efgg_spec(3, 450)}, 3, StructureMode::Fs);
    REQUIRE(a.entries.size() == 1);
    CHECK(a.entries[0].edges == 50631);
    CHECK(a.entries[0].expected_edges == std::optional<std::size_t>{50631});
    CHECK(a.all_ok);

    std::vector<FamilySpec> joins;
    for (int n = 10; n <= 50; n += 10)
        joins.push_back(ks_join_independent_spec(2, n));
    const auto lin = edge_bound_audit(joins, 2, StructureMode::Fs);
    CHECK(lin.all_ok);
    REQUIRE(lin.fits.size() == 1);
    CHECK(lin.fits[0].slope == doctest::Approx(2.0));
    CHECK(lin.fits[0].intercept == doctest::Approx(-3.0));

    const auto bip = edge_bound_audit({complete_bipartite_spec(2, 30)}, 2, StructureMode::Fs, 1.0);
    REQUIRE(bip.entries[0].slack.has_value());
    CHECK(*bip.entries[0].slack == doctest::Approx(1.0 * 2 + 2.0 * 32 - 60));
}

TEST_CASE("friendship graph F_3 at n = 7")
{
    CHECK(std::abs(rho_closed_form(kt_join_matching_spec(1, 7)) - 3.0) <= 1e-12);
    const auto r = extremal_search(7, Constraint::parse("qt-minor:t=1"));
    CHECK(r.best_rho >= 3.0 - 1e-9);
    CHECK(r.exhausted_count == 0);
}

TEST_CASE("predicted extremal graphs, subgraph mode")
{
    const auto checks = verify_theorem_small_n(TheoremMode::QtSubgraph, 1, 4, 7);
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) {
        CHECK(c.report.constraint == "qt-subgraph-free:t=1");
        CHECK(c.predicted_free);
        CHECK(c.closed_form_agrees);
    }
}

TEST_CASE("small-n mismatches are reported, not hidden")
{
    const auto checks = verify_theorem_small_n(TheoremMode::Fs, 2, 4, 5);
    REQUIRE(checks.size() == 2);
    // Four vertices cannot hold F_2 at all, so K_4 beats K_2 v I_2.
    CHECK_FALSE(checks[0].report.match);
    CHECK(checks[0].report.maximizers == std::vector<std::string>{canonical_code(construct(complete_spec(4)).graph)});
    CHECK(checks[0].predicted_free);
    CHECK_FALSE(checks[1].report.match);
}

TEST_CASE("connected classes suffice: all labelled graphs give the same best rho")
{
    for (std::size_t n = 3; n <= 6; ++n) {
        double forest = 0.0;
        double no_long_cycle = 0.0;
        double no_bowtie = 0.0;
        const auto bowtie = Constraint::parse("fs-subgraph:s=2");
        oracle::for_each_labelled(n, [&](const Graph& g) {
            const double r = oracle::dense_rho(g);
            if (!oracle::has_cycle(g))
                forest = std::max(forest, r);
            if (!oracle::has_cycle_at_least(g, 4))
                no_long_cycle = std::max(no_long_cycle, r);
            if (contains_pattern(g, bowtie, kDefaultNodeBudget) == MinorStatus::NotFound)
                no_bowtie = std::max(no_bowtie, r);
        });
        CHECK(std::abs(extremal_search(n, Constraint::parse("fs-minor:s=1")).best_rho - forest) <= 1e-9);
        CHECK(std::abs(extremal_search(n, Constraint::parse("qt-minor:t=1")).best_rho - no_long_cycle) <= 1e-9);
        CHECK(std::abs(extremal_search(n, bowtie).best_rho - no_bowtie) <= 1e-9);
    }
}
