#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "modrange/instance_io.hpp"

using namespace modrange;
using nlohmann::json;

namespace {

json sample_instance() {
    return json::parse(R"({
        "characters": ["a", "b"],
        "dims": [2, 1],
        "operators": {
            "T": [
                [[[0,0],[1,0]], [[0,0],[0,0]]],
                [[[2,0]]]
            ]
        }
    })");
}

}  // namespace

TEST_CASE("parse a well-formed instance") {
    const InstanceDocument doc = parse_instance(sample_instance());
    CHECK(doc.characters == std::vector<std::string>{"a", "b"});
    CHECK(doc.dims == std::vector<int>{2, 1});
    REQUIRE(doc.operators.count("T") == 1);

    const ModuleOperator& T = doc.operators.at("T");
    CHECK(T.blocks[0](0, 1) == Complex{1, 0});
    CHECK(T.blocks[0](1, 1) == Complex{0, 0});
    CHECK(T.blocks[1](0, 0) == Complex{2, 0});
    CHECK(doc.shape().dims == std::vector<int>{2, 1});
    CHECK_FALSE(doc.cx.has_value());
}

TEST_CASE("characters may be omitted; defaults are positional") {
    json j = sample_instance();
    j.erase("characters");
    const InstanceDocument doc = parse_instance(j);
    CHECK(doc.characters.size() == 2);
}

TEST_CASE("diagnostics carry field paths") {
    auto expect_error = [](json j, const std::string& fragment) {
        try {
            parse_instance(j);
            FAIL_CHECK("expected ParseError containing '" << fragment << "'");
        } catch (const ParseError& e) {
            CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos,
                          "diagnostic was: " << e.what());
        }
    };

    json bad_dims = sample_instance();
    bad_dims["dims"] = {2, 0};
    expect_error(bad_dims, "dims[1]");

    json bad_block = sample_instance();
    bad_block["operators"]["T"][0] = json::array({json::array({json::array({0, 0})})});
    expect_error(bad_block, "operators.T[0]");

    json bad_complex = sample_instance();
    bad_complex["operators"]["T"][1][0][0] = json::array({1, 2, 3});
    expect_error(bad_complex, "operators.T[1]");

    json mismatched = sample_instance();
    mismatched["characters"] = {"a"};
    expect_error(mismatched, "characters");

    expect_error(json::array(), "");

    json bad_operators = sample_instance();
    bad_operators["operators"] = 5;
    expect_error(bad_operators, "operators");
}

TEST_CASE("round trip through serialize_instance") {
    const InstanceDocument doc = parse_instance(sample_instance());
    const InstanceDocument again = parse_instance(serialize_instance(doc));
    CHECK(again.characters == doc.characters);
    CHECK(again.dims == doc.dims);
    const auto& a = doc.operators.at("T");
    const auto& b = again.operators.at("T");
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        CHECK((a.blocks[i] - b.blocks[i]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("load_instance reads files and reports missing ones") {
    const std::string path = "instance_io_test.json";
    {
        std::ofstream out(path);
        out << sample_instance().dump();
    }
    const InstanceDocument doc = load_instance(path);
    CHECK(doc.dims == std::vector<int>{2, 1});
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_instance("does_not_exist.json"), ParseError);

    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_instance(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("cx section parsing and symbol builders") {
    json j = sample_instance();
    j["cx"] = {{"kind", "interval"}, {"m", 101}, {"symbol", "identity"}};
    const InstanceDocument doc = parse_instance(j);
    REQUIRE(doc.cx.has_value());
    CHECK(doc.cx->kind == SpaceKind::Interval);
    CHECK(doc.cx->m == 101);

    const MultiplicationOperator M = build_symbol_operator(*doc.cx);
    CHECK(M.symbol.size() == 101);
    CHECK(M.symbol.back() == Complex{1, 0});

    // polynomial symbol: g(x) = 1 + 2x
    json jp = sample_instance();
    jp["cx"] = {{"kind", "interval"},
                {"m", 3},
                {"symbol", {{"poly", {{1, 0}, {2, 0}}}}}};
    const MultiplicationOperator P = build_symbol_operator(*parse_instance(jp).cx);
    CHECK(P.symbol[0] == Complex{1, 0});
    CHECK(P.symbol[1] == Complex{2, 0});
    CHECK(P.symbol[2] == Complex{3, 0});

    // table symbol on a custom space
    json jt = sample_instance();
    jt["cx"] = {{"kind", "custom"},
                {"points", {0.0, 1.0}},
                {"symbol", {{"table", {{0, 1}, {5, 0}}}}}};
    const MultiplicationOperator Tb = build_symbol_operator(*parse_instance(jt).cx);
    CHECK(Tb.symbol[0] == Complex{0, 1});
    CHECK(Tb.symbol[1] == Complex{5, 0});

    // exp-i-theta on the circle
    json jc = sample_instance();
    jc["cx"] = {{"kind", "circle"}, {"m", 4}, {"symbol", "exp-i-theta"}};
    const MultiplicationOperator C = build_symbol_operator(*parse_instance(jc).cx);
    CHECK(std::abs(C.symbol[1] - Complex{0, 1}) <= 1e-15);

    // bad section: unknown kind and wrong table length
    json jb = sample_instance();
    jb["cx"] = {{"kind", "sphere"}, {"m", 4}, {"symbol", "identity"}};
    CHECK_THROWS_AS(parse_instance(jb), ParseError);

    json jl = sample_instance();
    jl["cx"] = {{"kind", "interval"}, {"m", 3}, {"symbol", {{"table", {{1, 0}}}}}};
    CHECK_THROWS_AS(build_symbol_operator(*parse_instance(jl).cx), ParseError);
}

TEST_CASE("json building blocks") {
    CHECK(complex_to_json(Complex{1.5, -2.0}) == json::array({1.5, -2.0}));
    CHECK(complex_from_json(json::array({3, 4}), "x") == Complex{3, 4});
    CHECK_THROWS_AS(complex_from_json(json::array({3}), "x"), ParseError);

    const InstanceDocument doc = parse_instance(sample_instance());
    const SupWitness w = module_norm(doc.operators.at("T"));
    const json jw = witness_to_json(w);
    CHECK(jw["value"].get<double>() == doctest::Approx(2.0));
    CHECK(jw["character"].get<std::size_t>() == 1);
    CHECK(jw.contains("vector"));

    const CheckResult r = check_equivalence(doc.operators.at("T"));
    const json jr = check_result_to_json(r);
    CHECK(jr["name"] == "equivalence_radius_norm");
    CHECK(jr["passed"].get<bool>());
    CHECK(jr["metrics"].contains("ratio"));
}
