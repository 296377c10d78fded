#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include "qgp/fixtures.hpp"
#include "qgp/json_io.hpp"

using namespace qgp;

namespace {

AlgPtr<Rat> lam() {
    static AlgPtr<Rat> a = std::make_shared<BoundQuiverAlgebra<Rat>>(fixtures::lambda<Rat>());
    return a;
}
AlgPtr<Rat> gam() {
    static AlgPtr<Rat> a = std::make_shared<BoundQuiverAlgebra<Rat>>(fixtures::gamma<Rat>());
    return a;
}

}  // namespace

TEST_CASE("paths serialize in written order") {
    const Quiver& q = lam()->quiver;
    Path ba{0, {0, 1}};  // apply a then b, written b.a
    json j = path_to_json(q, ba);
    CHECK(j == json::array({"b", "a"}));
    CHECK(path_from_json(q, j) == ba);
}

TEST_CASE("algebra round-trips through json") {
    for (const AlgPtr<Rat>& alg : {lam(), gam()}) {
        json j = algebra_to_json(*alg);
        auto back = algebra_from_json<Rat>(j);
        CHECK(same_algebra(back, alg));
        // serialization is deterministic
        CHECK(j.dump(2) == algebra_to_json(*back).dump(2));
    }
}

TEST_CASE("algebra json fields match the documented layout") {
    json j = algebra_to_json(*lam());
    CHECK(j["field"] == "Q");
    CHECK(j["vertices"] == json::array({"1", "2"}));
    REQUIRE(j["arrows"].size() == 2);
    CHECK(j["arrows"][0]["name"] == "a");
    CHECK(j["arrows"][0]["from"] == "1");
    CHECK(j["arrows"][0]["to"] == "2");
    REQUIRE(j["relations"].size() == 1);
    REQUIRE(j["relations"][0].size() == 1);
    CHECK(j["relations"][0][0]["coeff"] == "1");
    CHECK(j["relations"][0][0]["path"] == json::array({"b", "a", "b", "a"}));
}

TEST_CASE("module round-trips through json") {
    auto v = cyclic_module(lam(), Path{0, {0, 1}});
    json j = module_to_json(v);
    CHECK(j["dims"]["1"] == 1);
    CHECK(j["dims"]["2"] == 1);
    auto back = module_from_json<Rat>(j, lam());
    CHECK(is_isomorphic(back, v).yes());

    auto w = fixtures::gamma_w<Rat>(gam());
    CHECK(is_isomorphic(module_from_json<Rat>(module_to_json(w), gam()), w).yes());
}

TEST_CASE("rational scalars accept fractions") {
    json j = json::parse(R"([["1/2", "0"], ["-3", "2/4"]])");
    auto m = matrix_from_json<Rat>(j, 2, 2);
    CHECK(m(0, 0) == Rat(1, 2));
    CHECK(m(1, 1) == Rat(1, 2));
    CHECK(m(1, 0) == Rat(-3));
    CHECK(matrix_to_json(m)[1][1] == "1/2");
}

TEST_CASE("bimodule round-trips through json") {
    auto x = regular_bimodule(lam());
    json j = bimodule_to_json(x);
    auto back = bimodule_from_json<Rat>(j, lam(), lam());
    CHECK(back.total_dim() == x.total_dim());
    CHECK(is_isomorphic(forget_left(back), forget_left(x)).yes());
    auto op = opposite(lam());
    CHECK(is_isomorphic(forget_right(back, op), forget_right(x, op)).yes());
}

TEST_CASE("malformed input raises parse errors") {
    const Quiver& q = lam()->quiver;
    CHECK_THROWS_AS(path_from_json(q, json::array()), ParseError);
    CHECK_THROWS_AS(path_from_json(q, json::array({"zz"})), ParseError);
    // a.a does not compose on the two-vertex quiver
    CHECK_THROWS_AS(path_from_json(q, json::array({"a", "a"})), ParseError);

    CHECK_THROWS_AS(matrix_from_json<Rat>(json::parse("[[\"1\"]]"), 2, 1), ParseError);
    CHECK_THROWS_AS(matrix_from_json<Rat>(json::parse("[[\"x\"]]"), 1, 1), ParseError);

    json bad = module_to_json(cyclic_module(lam(), Path{0, {0, 1}}));
    bad["maps"].erase("a");
    CHECK_THROWS_AS(module_from_json<Rat>(bad, lam()), ParseError);

    json badalg = algebra_to_json(*lam());
    badalg["arrows"][0]["from"] = "9";
    CHECK_THROWS_AS(algebra_from_json<Rat>(badalg), ParseError);
}
