#include "speclab/canonical.hpp"
#include "speclab/enumerate.hpp"
#include "speclab/error.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace speclab;

TEST_CASE("class counts against labelled brute force")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<std::string> brute;
        oracle::for_each_labelled(n, [&](const Graph& g) {
            if (oracle::connected(g))
                brute.insert(oracle::brute_canonical(g));
        });
        const auto reps = enumerate_connected(n);
        CHECK(reps.size() == brute.size());
        std::set<std::string> seen;
        for (const auto& g : reps) {
            CHECK(oracle::connected(g));
            seen.insert(oracle::brute_canonical(g));
        }
        CHECK(seen == brute);
    }
}

TEST_CASE("seven-vertex representatives are pairwise non-isomorphic")
{
    const auto reps = enumerate_connected(7);
    std::set<std::string> seen;
    for (const auto& g : reps) {
        CHECK(oracle::connected(g));
        seen.insert(oracle::brute_canonical(g));
    }
    CHECK(seen.size() == reps.size());
    CHECK(reps.size() == 853);
}

TEST_CASE("known counts")
{
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853, 11117};
    const auto levels = connected_levels(8);
    REQUIRE(levels.size() == 8);
    for (std::size_t k = 0; k < levels.size(); ++k)
        CHECK(levels[k].size() == expected[k]);
    std::size_t streamed = 0;
    for_each_connected(8, [&](const CanonicalGraph&) { ++streamed; });
    CHECK(streamed == 11117);
}

TEST_CASE("children are canonical, sorted and distinct")
{
    const auto levels = connected_levels(6);
    for (const auto& parent : levels[5]) {
        const auto kids = augment(parent);
        for (std::size_t i = 0; i < kids.size(); ++i) {
            CHECK(canonical_form(kids[i].graph).code == kids[i].code);
            if (i > 0)
                CHECK(kids[i - 1].code < kids[i].code);
        }
    }
    CHECK(single_vertex().graph.n == 1);
}

TEST_CASE("order limits")
{
    CHECK_THROWS_AS(enumerate_connected(11), Error);
    CHECK_THROWS_AS(enumerate_connected(0), Error);
}
