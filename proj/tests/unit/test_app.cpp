#include "doctest.h"
#include "wittforge_app/fixtures.hpp"
#include "wittforge_app/runner.hpp"

using namespace wittforge;
using namespace wittforge::app;

TEST_CASE("fixture references")
{
    auto ref = parse_fixture_ref("lubin-tate h=4 p=3 level=2");
    CHECK(ref.name == "lubin-tate");
    CHECK(ref.get("h", 0) == 4);
    CHECK(ref.get("f", 1) == 1);
    CHECK_THROWS_AS(parse_fixture_ref("lubin-taet h=4"), UnknownFixture);
    CHECK_THROWS_AS(parse_fixture_ref("lubin-tate h=x"), UnknownFixture);
    CHECK_THROWS_AS(parse_fixture_ref("lubin-tate q=2"), UnknownFixture);
    CHECK_THROWS_AS(build_fixture(parse_fixture_ref("supersingular-e-curve h=3")), UnknownFixture);
    auto names = fixture_names();
    for (const char* n : {"lubin-tate", "supersingular-e-curve", "etale-h", "multiplicative-h"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

TEST_CASE("supersingular descriptor at p = 3, level 1")
{
    auto D = build_fixture(parse_fixture_ref("supersingular-e-curve p=3 level=1"));
    auto j = module_to_json(D);
    CHECK(j["rank"] == 2);
    CHECK(j["twistF"] == 1);
    CHECK(j["twistV"] == -1);
    CHECK(j["level"] == 1);
    CHECK(j["F"] == j["V"]);
    CHECK(j["F"][1][0] == "1");
    CHECK(j["F"][0][1] == "0");  // 3 vanishes at level 1
    CHECK(j["F"][0][0] == "0");
}

TEST_CASE("module and display descriptors round trip")
{
    BaseDVR ram{3, 1, {3, 0, 1}};
    for (const auto* text : {"lubin-tate h=3 p=3 level=2", "lubin-tate h=3 p=2 f=2 level=2", "etale-h h=2 p=5 level=1",
                             "multiplicative-h h=1 p=3 level=3 equal=1", "supersingular-e-curve p=2 f=2 level=2"}) {
        auto D = build_fixture(parse_fixture_ref(text));
        auto j = module_to_json(D);
        auto E = module_from_json(json::parse(j.dump()));
        CHECK(E.ring->same_as(*D.ring));
        CHECK(mat_eq(*D.ring, E.F.A, D.F.A));
        CHECK(mat_eq(*D.ring, E.V.A, D.V.A));
        CHECK(E.scalar == D.scalar);
        CHECK(module_to_json(E) == j);
        CHECK(j.contains("components") == (D.f() > 1));

        if (D.f() > 1 || D.ring->base().kind() != ChainRing::Kind::Mixed) continue;
        auto d = from_dieudonne(D).display;
        auto dj = display_to_json(d);
        auto d2 = display_from_json(json::parse(dj.dump()));
        CHECK(d2.rank_L == d.rank_L);
        CHECK(mat_eq(*d.W, d2.structural, d.structural));
    }
    auto Dr = build_fixture(parse_fixture_ref("lubin-tate h=2 level=3"), ram);
    CHECK(Dr.ring->base().e() == 2);
    CHECK(validate(Dr).ok);
    auto back = module_from_json(module_to_json(Dr));
    CHECK(mat_eq(*Dr.ring, back.V.A, Dr.V.A));
    CHECK_THROWS_AS(build_fixture(parse_fixture_ref("lubin-tate h=2 p=5"), ram), UnknownFixture);
}

TEST_CASE("descriptor schema errors")
{
    CHECK_THROWS_AS(base_from_json(json{{"p", 4}}), SchemaError);
    CHECK_THROWS_AS(base_from_json(json{{"p", 3}, {"eisenstein", {9, 0, 1}}}), SchemaError);
    CHECK_THROWS_AS(base_from_json(json{{"p", 3}, {"e", 1}, {"eisenstein", {3, 0, 1}}}), SchemaError);
    CHECK(base_from_json(json{{"p", 3}, {"e", 2}, {"f", 1}, {"eisenstein", {3, 0, 1}}}).e() == 2);
    CHECK_THROWS_AS(base_from_json(json{{"p", 2}, {"q", 8}, {"f", 2}}), SchemaError);
    BaseDVR b{2, 2, {2, 2, 1}};
    CHECK(base_from_json(base_to_json(b)) == b);
    auto j = module_to_json(build_fixture(parse_fixture_ref("lubin-tate h=2 p=3 level=1")));
    auto bad = j;
    bad["F"][0].erase(1);
    CHECK_THROWS_AS(module_from_json(bad), SchemaError);
    bad = j;
    bad["twistV"] = 1;
    CHECK_THROWS_AS(module_from_json(bad), SchemaError);
    bad = j;
    bad.erase("coeff");
    CHECK_THROWS_AS(module_from_json(bad), SchemaError);
}

TEST_CASE("scenario parsing")
{
    auto empty = parse_scenario(json::parse(R"({"name": "e", "suites": []})"));
    auto r = run_scenario(empty);
    CHECK(r.records.empty());
    CHECK(r.exit_code() == 0);
    CHECK_THROWS_AS(parse_scenario(json::parse(R"({"suites": ["nope"]})")), SchemaError);
    CHECK_THROWS_AS(parse_scenario(json::parse(R"({"colour": 1})")), SchemaError);
    CHECK_THROWS_AS(parse_scenario(json::parse(R"({"objects": [{"id": "a", "fixture": "lubin-tate", "module": {}}]})")),
                    SchemaError);
    CHECK_THROWS_AS(parse_scenario(json::parse(
                        R"({"objects": [{"id": "a", "fixture": "lubin-tate h=2"}], "checks": [{"object": "b", "kind": "validate"}]})")),
                    SchemaError);
    CHECK_THROWS_AS(parse_scenario(json::parse(
                        R"({"objects": [{"id": "a", "fixture": "lubin-tate h=2"}], "checks": [{"object": "a", "kind": "exterior", "r": 3}]})")),
                    SchemaError);
    // multiplicative h=2 has dimension 2: no default formula
    CHECK_THROWS_AS(parse_scenario(json::parse(
                        R"({"objects": [{"id": "m", "fixture": "multiplicative-h h=2"}], "checks": [{"object": "m", "kind": "exterior", "r": 2}]})")),
                    SchemaError);
    CHECK_THROWS_AS(load_scenario(WITTFORGE_SCENARIO_DIR "/bad_schema.json"), UnknownFixture);
}

TEST_CASE("example scenarios")
{
    auto r = run_scenario(load_scenario(WITTFORGE_SCENARIO_DIR "/lubin_tate_h4.json"));
    REQUIRE(r.records.size() == 3);
    CHECK(r.exit_code() == 0);
    const auto& rec = r.records[2];
    CHECK(rec.check_id == "examples.lt4.wedge2");
    CHECK(rec.computed == json{{"height", 6}, {"dimension", 3}, {"order_exponent", 12}});

    auto e = run_scenario(load_scenario(WITTFORGE_SCENARIO_DIR "/elliptic_wedge2.json"));
    REQUIRE(e.records.size() == 1);
    CHECK(e.records[0].computed["height"] == 1);
    CHECK(e.records[0].computed["dimension"] == 1);
    CHECK(e.records[0].pass);

    auto w = run_scenario(load_scenario(WITTFORGE_SCENARIO_DIR "/wrong_expectation.json"));
    CHECK(w.exit_code() == 1);
    auto rb = run_scenario(load_scenario(WITTFORGE_SCENARIO_DIR "/ramified_base.json"));
    CHECK(rb.exit_code() == 0);
    CHECK(rb.records.size() == 5);
}

TEST_CASE("reports are deterministic and sorted")
{
    auto s = parse_scenario(json::parse(R"({"name": "d", "suites": ["multilinear", "witt"], "seed": 5})"));
    auto a = run_scenario(s), b = run_scenario(s);
    CHECK(report_json(a) == report_json(b));
    for (std::size_t i = 1; i < a.records.size(); ++i) CHECK(a.records[i - 1].check_id < a.records[i].check_id);
    auto j = json::parse(report_json(a));
    CHECK(j["summary"]["total"] == a.records.size());
    for (const auto& rec : j["records"]) {
        CHECK(rec["inputs_digest"].get<std::string>().size() == 16);
        CHECK(!rec["paper_ref"].get<std::string>().empty());
    }
    s.seed = 6;
    CHECK(report_json(run_scenario(s)) != report_json(a));
    s.budget_ms = 0;
    CHECK(run_scenario(s).exit_code() == 3);
}
