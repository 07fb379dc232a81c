#include <doctest.h>

#include "affhecke/json_io.hpp"
#include "oracles.hpp"

using namespace affhecke;

TEST_SUITE("json") {
  TEST_CASE("Laurent polynomials") {
    const LaurentPoly p = LaurentPoly(2, -1) - LaurentPoly(1, 3);
    CHECK(to_json(p).dump() == R"({"-1":2,"3":-1})");
    CHECK(laurent_from_json(to_json(p)) == p);
    CHECK(laurent_from_json(Json(5)) == LaurentPoly(5));
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"x":1})")), std::invalid_argument);
  }

  TEST_CASE("Hecke elements and words") {
    oracle::Setup s("B2");
    const BraidWord w = parse_braid_word("T1 theta(1,-1) T2^-1", 2);
    CHECK(to_json(w).dump() == R"([{"T":1,"e":1},{"theta":[1,-1]},{"T":2,"e":-1}])");
    CHECK(braid_from_json(to_json(w), 2) == w);
    const HeckeElt h = s.H.eval_word(w);
    CHECK(hecke_from_json(s.H, to_json(s.H, h)) == h);
    const AffWeylElt a{s.W.longest(), Weight{2, -1}};
    CHECK(aff_from_json(s.G, to_json(s.G, a)) == a);
    CHECK_THROWS_AS(braid_from_json(Json::parse(R"([{"T":3}])"), 2), std::invalid_argument);
    CHECK_THROWS_AS(aff_from_json(s.G, Json::parse(R"({"fin":[1]})")), std::invalid_argument);
  }

  TEST_CASE("polynomials") {
    const Json j = Json::parse(R"({"n":2,"terms":[{"m":[1,0],"c":"1/2"},{"m":[0,2],"c":-3}]})");
    const QPoly p = qpoly_from_json(j);
    CHECK(p.to_string({"x", "y"}) == "-3*y^2 + 1/2*x");
    CHECK(qpoly_from_json(to_json(p)) == p);
    CHECK(qpolys_from_json(Json::parse(R"({"generators":[{"n":1,"terms":[{"m":[1],"c":1}]}]})")).size() == 1);
    CHECK_THROWS_AS(qpoly_from_json(Json::parse(R"({"n":2,"terms":[{"m":[1],"c":1}]})")), std::invalid_argument);
    CHECK_THROWS_AS(qpoly_from_json(Json::parse(R"({"n":1,"terms":[{"m":[1],"c":"1/0"}]})")), std::invalid_argument);
  }

  TEST_CASE("Cartan matrices") {
    const IntMatrix m = cartan_from_json(Json::parse("[[2,-1],[-3,2]]"));
    CHECK(RootDatum::from_cartan(m).type_string() == "G2");
    CHECK_THROWS_AS(cartan_from_json(Json::parse("[[2,-1]]")), std::invalid_argument);
  }

  TEST_CASE("reports are deterministic") {
    oracle::Setup s("A2");
    const auto rep = verify_reduced_word_convolution(s.H, s.W.longest());
    CHECK(to_json(rep, s.H).dump() == to_json(rep, s.H).dump());
    CHECK(to_json(rep, s.H)["words"].size() == 2);
  }
}
