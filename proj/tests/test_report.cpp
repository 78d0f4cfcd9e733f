#include <doctest.h>

#include "muntzlab/report.hpp"

using namespace muntzlab;

TEST_CASE("spectrum spec files parse and round-trip") {
    json lac = json::parse(R"({"kind":"lacunary","lambda0":1.0,"ratio":2.0,"count":4})");
    auto s = spectrum_from_json(lac);
    CHECK(s.exponents() == std::vector<double>{1, 2, 4, 8});

    json quasi = json::parse(R"({"kind":"quasi","bases":[1.0,1.5],"ratio":3.0,"count":3})");
    auto q = spectrum_from_json(quasi);
    CHECK(q.block_cap() == 2);

    json out = spectrum_to_json(q);
    CHECK(out["attained_q"].get<double>() == doctest::Approx(2.0));
    CHECK(out["block_sizes"].size() == 3);
}

TEST_CASE("spectrum parse errors name the field") {
    try {
        spectrum_from_json(json::parse(R"({"kind":"lacunary","ratio":2.0,"count":4})"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.field() == "lambda0");
    }
    CHECK_THROWS_AS(spectrum_from_json(json::parse(R"({"kind":"geometric"})")), ParseError);
    CHECK_THROWS_AS(spectrum_from_json(json::parse(R"({"kind":"quasi","bases":"x","ratio":2,"count":1})")),
                    ParseError);
}

TEST_CASE("measure spec files parse") {
    CHECK(measure_from_json(json::parse(R"({"kind":"jacobi","alpha":0.5})")).alpha() == 0.5);
    auto c = measure_from_json(json::parse(R"({"kind":"cantor","r":0.25,"depth":12})"));
    CHECK(c.contraction() == 0.25);
    CHECK(c.cantor_depth() == 12);
    auto a = measure_from_json(json::parse(R"({"kind":"atomic","atoms":[[0.5,1.0],[1.0,2.0]]})"));
    CHECK(a.atoms().size() == 2);
    auto t = measure_from_json(json::parse(R"({"kind":"tail","beta":0.5,"C":2.0})"));
    CHECK(t.envelope_beta() == 0.5);

    try {
        measure_from_json(json::parse(R"({"kind":"jacobi"})"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.field() == "alpha");
    }
    // round trips through to_json
    for (const auto& m : {c, a, t}) {
        auto m2 = measure_from_json(measure_to_json(m));
        CHECK(m2.kind() == m.kind());
    }
}

TEST_CASE("problem spec files parse") {
    json j = json::parse(R"({
      "spectrum": {"kind":"lacunary","lambda0":1.0,"ratio":2.0,"count":6},
      "measure": {"kind":"jacobi","alpha":-0.5},
      "p": 2.0, "beta": 0.5, "rhs_alpha": null})");
    auto pr = problem_from_json(j);
    CHECK(pr.p == 2.0);
    CHECK_FALSE(pr.rhs_alpha.has_value());

    j["rhs_alpha"] = 1.5;
    CHECK(problem_from_json(j).rhs_alpha.value() == 1.5);

    j.erase("p");
    CHECK_THROWS_AS(problem_from_json(j), ParseError);
}

TEST_CASE("check report round-trips byte for byte") {
    CheckReport r;
    r.check_name = "decoupling";
    r.input_digests = {{"spectrum", fnv1a_hex("example-bytes")}};
    r.parameters = json{{"p", 2.0}, {"alpha", -0.5}, {"trials", 200}};
    r.results = json{{"lo", 0.7071067811865476}, {"hi", 1.2599210498948732}};
    r.seed = 7;
    r.tool_version = "0.1.0";
    r.wall_time_ms = 12.5;

    std::string text = r.full_string();
    CheckReport parsed = CheckReport::from_json(json::parse(text));
    CHECK(parsed.full_string() == text);
    CHECK(parsed.body_string() == r.body_string());

    // body excludes the wall time
    CheckReport slower = r;
    slower.wall_time_ms = 99.0;
    CHECK(slower.body_string() == r.body_string());
    CHECK(slower.full_string() != r.full_string());
}

TEST_CASE("digest changes with content") {
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
    CHECK(fnv1a_hex("abc") == fnv1a_hex("abc"));
    CHECK(fnv1a_hex("").size() == 16);
}

TEST_CASE("csv schema") {
    std::vector<CsvRow> rows{{"decoupling", "2", "0", "0.75", "trial=3"}};
    std::string text = to_csv(rows);
    CHECK(text == "check,param1,param2,value,witness\ndecoupling,2,0,0.75,trial=3\n");
}
