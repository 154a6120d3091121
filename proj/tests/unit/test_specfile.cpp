#include <doctest.h>

#include "helpers.hpp"

using namespace mwl;

TEST_CASE("builtin specs parse, validate and expose their points") {
    for (const char* id : {"5.1a", "5.1b", "5.2", "5.3"}) {
        const CurveSpec& s = testutil::spec(id);
        CHECK(s.model.has_value());
        CHECK(s.quartic.has_value());
        CHECK(!s.points.empty());
        for (auto& [nm, p] : s.points) CHECK(on_curve(s.curve(), p));
    }
}

TEST_CASE("literal round trips") {
    const CurveSpec& s = testutil::spec51a();
    for (auto& [nm, p] : s.points) {
        Json j = point_json(p);
        Point back = parse_point(s.tower, j);
        CHECK(back == p);
    }
    Json q = bipoly_json(s.quartic->poly);
    CHECK(parse_bipoly(s.tower, q) == s.quartic->poly);
}

TEST_CASE("parse errors carry machine-readable codes") {
    try {
        parse_curve_spec("{ not json");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(errc_exit_code(e.code()) == 2);
    }
    // off-curve point
    Json j = Json::parse(builtin_spec_text("5.1a"));
    j["points"]["Bad"] = Json::object({{"x", Json::array({"1"})}, {"y", Json::array({"1"})}});
    try {
        parse_curve_spec(j.dump());
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
    // unknown generator in an element literal
    Json j2 = Json::parse(builtin_spec_text("5.1a"));
    j2["points"]["Bad"] = Json::object(
        {{"x", Json::array({Json::object({{"nope", "1"}})})}, {"y", Json::array({"0"})}});
    CHECK_THROWS_AS(parse_curve_spec(j2.dump()), Error);
}

TEST_CASE("deterministic command output") {
    const CurveSpec& s = testutil::spec51a();
    std::string once = cmd_fibers(s).dump();
    std::string twice = cmd_fibers(parse_curve_spec(builtin_spec_text("5.1a"))).dump();
    CHECK(once == twice);
}

TEST_CASE("cmd_fibers output shape") {
    Json j = cmd_fibers(testutil::spec51b());
    CHECK(j["sum_ord_delta"] == 12);
    CHECK(j["sum_m_minus_1"] == 5);
    CHECK(j["fibers"].size() == 5);
    CHECK(j["fibers"][0]["type"] == "III");
    CHECK(j["fibers"][1]["type"] == "I2");
    CHECK(j["fibers"][4]["place"] == "inf");
}

TEST_CASE("cmd_mw produces the golden gram and decompositions") {
    Json j = cmd_mw(testutil::spec53(), {"P0", "P1", "P2", "P3"}, {"Q1"});
    CHECK(j["gram"][0] == Json::array({"2", "1", "1", "1"}));
    CHECK(j["heights"]["Q1"] == "2");
    CHECK(j["decompositions"]["Q1"]["coeffs"] == Json::array({"-1", "2", "0", "0"}));
    CHECK(j["decompositions"]["Q1"]["torsion_part"] == "O");
    CHECK(j["torsion_order"]["P1"].is_null());
}

TEST_CASE("cmd_verify failure is reported, not thrown") {
    // build a spec whose 1a arrangement uses concurrent lines
    Json j = Json::parse(builtin_spec_text("5.1a"));
    j["arrangements"]["1a"]["lines"] =
        Json::array({Json::array({Json::array({0, 1, "1"}), Json::array({1, 0, "-1"})}),
                     Json::array({Json::array({0, 1, "1"}), Json::array({1, 0, "-2"})}),
                     Json::array({Json::array({0, 1, "1"}), Json::array({1, 0, "-3"})})});
    CurveSpec s = parse_curve_spec(j.dump());
    CommandResult r = cmd_verify(s, "1a");
    CHECK(!r.ok);
    CHECK(r.output["pass"] == false);
}

TEST_CASE("cmd_reproduce runs every golden check") {
    CommandResult r = cmd_reproduce("5.1b");
    INFO(r.output.dump(1));
    CHECK(r.ok);
    CHECK(r.output["pass"] == true);
    CHECK(r.output["checks"].size() > 10);
    CHECK_THROWS_AS(cmd_reproduce("9.9"), Error);
}
