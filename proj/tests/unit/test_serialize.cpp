#include "speclab/constructors.hpp"
#include "speclab/error.hpp"
#include "speclab/graph6.hpp"
#include "speclab/serialize.hpp"

#include <doctest.h>

using namespace speclab;

TEST_CASE("certificate round trip")
{
    const Graph host = construct(ks_join_independent_spec(3, 10)).graph;
    const auto a = has_fs_minor(host, 2);
    REQUIRE(a.found());
    const Json j = certificate_json(*a.model);
    const MinorModel back = certificate_from_json(Json::parse(j.dump()));
    CHECK(back.host_n == a.model->host_n);
    CHECK(back.pattern == a.model->pattern);
    CHECK(back.branch_sets == a.model->branch_sets);
    CHECK(verify_model(host, back));
    CHECK(to_json(a)["status"] == "Found");
}

TEST_CASE("bad certificates")
{
    CHECK_THROWS_AS(certificate_from_json(Json::parse("[]")), Error);
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"pattern_g6":"Bw","host_n":3})")), Error);
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"pattern_g6":"Bw","host_n":3,"branch_sets":[[0],[1],[5]]})")),
                    Error);
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"pattern_g6":"B","host_n":3,"branch_sets":[]})")), Error);
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"pattern_g6":"Bw","host_n":-1,"branch_sets":[]})")), Error);
}

TEST_CASE("report documents")
{
    SearchReport r;
    r.n = 5;
    r.constraint = "fs-minor-free:s=1";
    r.elapsed = 1.5;
    r.maximizers = {"DFw", "D?{"};
    CHECK(to_json(r, false)["elapsed"] == 0.0);
    CHECK(to_json(r, true)["elapsed"] == 1.5);
    const std::string csv = search_csv({r}, false);
    CHECK(csv.starts_with("n,constraint,"));
    CHECK(csv.find("\"D?{\"") == std::string::npos);
    CHECK(csv.find("DFw D?{") != std::string::npos);

    const auto layout = construct(ks_join_independent_spec(2, 5)).layout;
    const Json lj = to_json(layout);
    CHECK(lj["regions"]["A"] == Json::parse("[0,1]"));
    CHECK(lj["degenerate"] == false);
    CHECK(vertex_set_from_json(Json::parse("[4,1]"), 5).members() == std::vector<Vertex>{1, 4});
    CHECK_THROWS_AS(vertex_set_from_json(Json::parse("[5]"), 5), Error);
    CHECK_THROWS_AS(vertex_set_from_json(Json::parse("{}"), 5), Error);
}
