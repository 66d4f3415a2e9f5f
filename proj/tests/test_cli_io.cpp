#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "plab/errors.hpp"
#include "plab/report.hpp"
#include "plab/suite.hpp"
#include "plab/workspace.hpp"

#include "fixtures.hpp"

using namespace plab;

namespace {

const char* UT2_DOC = R"(# three-dimensional fixture with averaging operator R
algebra UT2 dim 3
c 1 1 1 = -1
c 2 3 2 = -1
c 3 2 2 = -1
c 3 3 3 = -1

map R dim 3
row 1 0 0
row 0 0 0
row 0 0 1

check pre_lie UT2
check averaging UT2 R
derive induced_leibniz UT2 R as L
check leibniz L
)";

} // namespace

TEST_CASE("parsing a minimal document") {
    Workspace ws = parse_workspace("algebra Z2 dim 2\n");
    REQUIRE(ws.algebras.count("Z2") == 1);
    const Algebra& a = ws.algebras.at("Z2");
    CHECK(a.dim == 2);
    CHECK(a.product == Tensor3(2, 2, 2)); // no `c` lines means the zero product
    CHECK(ws.order == std::vector<std::pair<std::string, std::string>>{{"algebra", "Z2"}});
    CHECK(ws.directives.empty());
}

TEST_CASE("parsing an embedded document with maps and directives") {
    Workspace ws = parse_workspace(UT2_DOC);
    REQUIRE(ws.algebras.count("UT2") == 1);
    CHECK(ws.algebras.at("UT2").product == fixtures::ut2().product);
    REQUIRE(ws.maps.count("R") == 1);
    Matrix r{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}};
    CHECK(ws.maps.at("R") == r);
    REQUIRE(ws.directives.size() == 4);
    CHECK(ws.directives[0].op == "pre_lie");
    CHECK(ws.directives[2].derive);
    CHECK(ws.directives[2].out == "L");
    CHECK(ws.directives[3].args == std::vector<std::string>{"L"});
}

TEST_CASE("parsing scalar entries as exact rationals") {
    Workspace ws = parse_workspace(
        "algebra A dim 2\nc 1 1 2 = -3/2\nmap P dim 2\nrow 1/3 0\nrow 0 1\n");
    CHECK(ws.algebras.at("A").product(0, 0, 1) == Rational(-3, 2));
    CHECK(ws.maps.at("P")(0, 0) == Rational(1, 3));
}

TEST_CASE("parse errors carry the offending line number") {
    SUBCASE("structure-constant index out of range") {
        try {
            parse_workspace("algebra A dim 3\nc 1 2 4 = 1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_no == 2);
            CHECK(std::string(e.what()).find("out of range") != std::string::npos);
        }
    }
    SUBCASE("duplicate names") {
        CHECK_THROWS_AS(parse_workspace("algebra A dim 2\nalgebra A dim 2\n"), ParseError);
        CHECK_THROWS_AS(parse_workspace("algebra A dim 2\nmap A dim 2\nrow 1 0\nrow 0 1\n"),
                        ParseError);
    }
    SUBCASE("missing rows detected at end of input") {
        CHECK_THROWS_AS(parse_workspace("map P dim 2\nrow 1 0\n"), ParseError);
    }
    SUBCASE("too many rows") {
        CHECK_THROWS_AS(parse_workspace("map P dim 1\nrow 1\nrow 2\n"), ParseError);
    }
    SUBCASE("row width mismatch") {
        CHECK_THROWS_AS(parse_workspace("map P dim 2\nrow 1 0 0\n"), ParseError);
    }
    SUBCASE("unknown directives and objects") {
        CHECK_THROWS_AS(parse_workspace("frobnicate X\n"), ParseError);
        CHECK_THROWS_AS(parse_workspace("map P from NOPE dim 2\nrow 1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_workspace("rho G 1\n"), ParseError);
    }
}

TEST_CASE("print/parse roundtrip is the identity on canonical form") {
    Workspace ws = parse_workspace(UT2_DOC);
    std::string canon = print_workspace(ws);
    Workspace back = parse_workspace(canon);
    CHECK(back.order == ws.order);
    CHECK(back.algebras.at("UT2").product == ws.algebras.at("UT2").product);
    CHECK(back.maps.at("R") == ws.maps.at("R"));
    REQUIRE(back.directives.size() == ws.directives.size());
    for (size_t i = 0; i < ws.directives.size(); ++i) {
        CHECK(back.directives[i].op == ws.directives[i].op);
        CHECK(back.directives[i].args == ws.directives[i].args);
        CHECK(back.directives[i].out == ws.directives[i].out);
    }
    // Canonical form is a fixed point of printing.
    CHECK(print_workspace(back) == canon);
}

TEST_CASE("print/parse roundtrip covers coalgebras, forms, rtensors and reps") {
    std::string doc =
        "algebra A dim 2\n"
        "c 1 1 2 = 1\n"
        "coalgebra D dim 2\n"
        "d 2 1 1 = 1/2\n"
        "form W on A\n"
        "row 0 1\n"
        "row -1 0\n"
        "rtensor r on A\n"
        "row 1 0\n"
        "row 0 0\n"
        "rep V of A dim 1\n"
        "rho V 1\n"
        "row 0\n"
        "rho V 2\n"
        "row 1\n"
        "phi V 1\n"
        "row 0\n"
        "phi V 2\n"
        "row 0\n";
    Workspace ws = parse_workspace(doc);
    std::string canon = print_workspace(ws);
    Workspace back = parse_workspace(canon);
    CHECK(back.coalgebras.at("D").coproduct == ws.coalgebras.at("D").coproduct);
    CHECK(back.forms.at("W").matrix == ws.forms.at("W").matrix);
    CHECK(back.rtensors.at("r").coeff == ws.rtensors.at("r").coeff);
    CHECK(back.reps.at("V").rho == ws.reps.at("V").rho);
    CHECK(back.reps.at("V").phi == ws.reps.at("V").phi);
    CHECK(print_workspace(back) == canon);
}

TEST_CASE("running a suite of checks") {
    Workspace ws = parse_workspace(UT2_DOC);
    Report rep = run_suite(ws, ws.directives);
    REQUIRE(rep.records.size() == 4);
    CHECK(rep.pass());
    CHECK(rep.records[0].op == "pre_lie");
    CHECK(rep.records[2].out == "L");
    // The derive registered the induced bracket under its declared name.
    CHECK(ws.algebras.count("L") == 1);
    // The induced Leibniz bracket of this fixture is the zero bracket.
    CHECK(ws.algebras.at("L").product == Tensor3(3, 3, 3));
}

TEST_CASE("suite failures are recorded, not thrown") {
    Workspace ws = parse_workspace(
        "algebra B dim 2\nc 1 2 1 = 1\ncheck pre_lie B\n");
    Report rep = run_suite(ws, ws.directives);
    REQUIRE(rep.records.size() == 1);
    CHECK(!rep.pass());
    bool found_witness = false;
    for (const auto& item : rep.records[0].report.items)
        if (!item.pass && item.witness.has_value()) found_witness = true;
    CHECK(found_witness);
}

TEST_CASE("suite errors for bad references") {
    Workspace ws = parse_workspace("algebra A dim 2\ncheck pre_lie NOPE\n");
    CHECK_THROWS_AS(run_suite(ws, ws.directives), UnknownObject);

    Workspace ws2 = parse_workspace("algebra A dim 2\n");
    CheckDescriptor cd;
    cd.op = "no_such_check";
    cd.args = {"A"};
    CHECK_THROWS_AS(run_suite(ws2, {cd}), UnknownCheck);
    CHECK_THROWS_AS(check_category("no_such_check"), UnknownCheck);
}

TEST_CASE("presets filter checks by category and keep derives") {
    Workspace ws = parse_workspace(UT2_DOC);
    auto all = preset_suite(ws, "all");
    CHECK(all.size() == 4);

    // The pre-Lie/Lie/Leibniz checks live in the "preLie" preset.
    auto pl = preset_suite(ws, "preLie");
    REQUIRE(pl.size() == 3); // pre_lie, the derive, leibniz
    CHECK(pl[0].op == "pre_lie");
    CHECK(pl[1].derive);
    CHECK(pl[2].op == "leibniz");

    // The cybe preset keeps only the derive here.
    auto cy = preset_suite(ws, "cybe");
    REQUIRE(cy.size() == 1);
    CHECK(cy[0].derive);

    CHECK(check_category("averaging") == "averaging");
    CHECK(check_category("s_equation") == "cybe");
    CHECK(check_category("rb") == "rota-baxter");
    CHECK(check_category("avg_bialgebra") == "bialgebra");

    CHECK_THROWS_AS(preset_suite(ws, "no-such-preset"), UnknownCheck);
}

TEST_CASE("text report format") {
    Workspace ws = parse_workspace(UT2_DOC);
    Report rep = run_suite(ws, ws.directives);
    std::string text = emit_report(rep, "text");
    CHECK(text.find("[PASS] pre_lie UT2") != std::string::npos);
    CHECK(text.find("as L") != std::string::npos);
    CHECK(text.find("all checks passed") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);

    Workspace bad = parse_workspace(
        "algebra B dim 2\nc 1 2 1 = 1\ncheck pre_lie B\n");
    std::string bad_text = emit_report(run_suite(bad, bad.directives), "text");
    CHECK(bad_text.find("[FAIL] pre_lie B") != std::string::npos);
    CHECK(bad_text.find("some checks FAILED") != std::string::npos);
}

TEST_CASE("json report format") {
    SUBCASE("empty report") {
        Report rep;
        std::string js = emit_report(rep, "json");
        auto doc = nlohmann::json::parse(js);
        CHECK(doc["format"] == "plab-report-v1");
        CHECK(doc["status"] == "pass");
        CHECK(doc["records"].is_array());
        CHECK(doc["records"].empty());
    }
    SUBCASE("failing check carries a witness with string-valued entries") {
        Workspace ws = parse_workspace(
            "algebra B dim 2\nc 1 2 1 = 1\ncheck pre_lie B\n");
        Report rep = run_suite(ws, ws.directives);
        std::string js = emit_report(rep, "json");
        auto doc = nlohmann::json::parse(js);
        CHECK(doc["status"] == "fail");
        REQUIRE(doc["records"].size() == 1);
        CHECK(doc["records"][0]["op"] == "pre_lie");
        CHECK(doc["records"][0]["status"] == "fail");
        bool saw_witness = false;
        for (const auto& item : doc["records"][0]["items"]) {
            if (item["status"] == "fail") {
                REQUIRE(item.contains("witness"));
                CHECK(item["witness"]["lhs"].is_string());
                CHECK(item["witness"]["rhs"].is_string());
                saw_witness = true;
            }
        }
        CHECK(saw_witness);
        // No native numbers anywhere: serializing back and forth is stable.
        CHECK(nlohmann::ordered_json::parse(js).dump(2) + "\n" == js);
    }
    SUBCASE("byte-stable across emissions") {
        Workspace ws = parse_workspace(UT2_DOC);
        Report rep = run_suite(ws, ws.directives);
        CHECK(emit_report(rep, "json") == emit_report(rep, "json"));
        CHECK(emit_report(rep, "text") == emit_report(rep, "text"));
    }
}
