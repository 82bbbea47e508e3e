#include "speclab/error.hpp"
#include "speclab/graph6.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace speclab;

namespace {

bool malformed(std::string_view text)
{
    try {
        (void)g6_decode(text);
    }
    catch (const Error& e) {
        return e.code() == ErrorCode::MalformedGraph6;
    }
    return false;
}

}  // namespace

TEST_CASE("small known strings")
{
    CHECK(g6_encode(Graph(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
    CHECK(g6_encode(Graph(2)) == "A?");
    CHECK(g6_encode(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == "Cl");
    CHECK(g6_encode(Graph(0)) == "?");
    CHECK(g6_encode(Graph(1)) == "@");
    CHECK(g6_decode("Cl") == Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(g6_decode("?").order() == 0);
}

TEST_CASE("round trip against the reference encoder")
{
    std::mt19937_64 rng(42);
    for (std::size_t n = 1; n <= 62; ++n) {
        for (int k = 0; k < 1000; ++k) {
            const Graph g = oracle::random_graph(n, (k % 10) / 10.0, rng);
            const std::string text = g6_encode(g);
            REQUIRE(text == oracle::g6(g));
            REQUIRE(g6_decode(text) == g);
        }
    }
}

TEST_CASE("long header")
{
    std::mt19937_64 rng(3);
    for (std::size_t n : {63UL, 64UL, 200UL, 1000UL}) {
        const Graph g = oracle::random_graph(n, 0.05, rng);
        const std::string text = g6_encode(g);
        CHECK(text[0] == '~');
        CHECK(text == oracle::g6(g));
        CHECK(g6_decode(text) == g);
    }
}

TEST_CASE("malformed input")
{
    CHECK(malformed(""));
    CHECK(malformed("B"));         // payload missing
    CHECK(malformed("Bww"));       // payload too long
    CHECK(malformed("Bx"));        // padding bits set
    CHECK(malformed("B\x20"));     // byte below '?'
    CHECK(malformed("~"));         // truncated long header
    CHECK(malformed("~??"));
    CHECK(malformed("\x7f"));
    // Oversized order decodes to a size error, not a crash.
    try {
        (void)g6_decode("~?~~");
        FAIL("expected an error");
    }
    catch (const Error& e) {
        CHECK((e.code() == ErrorCode::SizeLimitExceeded || e.code() == ErrorCode::MalformedGraph6));
    }
}
