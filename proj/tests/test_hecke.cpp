#include <doctest.h>

#include "affhecke/errors.hpp"
#include "oracles.hpp"

using namespace affhecke;

namespace {

std::vector<AffWeylElt> sample(const oracle::Setup& s, int radius) {
  std::vector<AffWeylElt> out;
  for (std::size_t i = 0; i < s.W.size(); ++i)
    for (const auto& x : weight_box(s.R().rank(), radius)) out.push_back({s.W.element(i), x});
  return out;
}

}  // namespace

TEST_SUITE("braidwords") {
  TEST_CASE("text round trip") {
    const BraidWord w = parse_braid_word("T1 T2^-1 theta(1,0)", 2);
    REQUIRE(w.size() == 3);
    CHECK(w.letters[0] == BraidToken::T(0, 1));
    CHECK(w.letters[1] == BraidToken::T(1, -1));
    CHECK(w.letters[2] == BraidToken::theta(Weight{1, 0}));
    CHECK(parse_braid_word(w.to_string(), 2) == w);
    CHECK(BraidWord{}.to_string() == "1");
    CHECK(parse_braid_word("1", 2).empty());
    CHECK_THROWS_AS(parse_braid_word("T3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid_word("theta(1)", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid_word("T1^2", 2), std::invalid_argument);
  }

  TEST_CASE("braid orders") {
    CHECK(braid_order(RootDatum::from_type("A2"), 0, 1) == 3);
    CHECK(braid_order(RootDatum::from_type("B2"), 0, 1) == 4);
    CHECK(braid_order(RootDatum::from_type("G2"), 0, 1) == 6);
    CHECK(braid_order(RootDatum::from_type("A1xA1"), 0, 1) == 2);
  }

  TEST_CASE("lifts project back") {
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
      oracle::Setup s(t);
      for (const auto& a : sample(s, 2)) CHECK(project_to_Waff(s.G, lift_Tw(s.G, a)) == a);
      for (std::size_t i = 0; i < s.W.size(); ++i)
        CHECK(static_cast<int>(lift_finite(s.W, s.W.element(i)).size()) == s.W.length(s.W.element(i)));
      for (const auto& x : weight_box(s.R().rank(), 2))
        CHECK(project_to_Waff(s.G, bernstein_theta(s.G, x)) == s.G.translation(x));
    }
  }

  TEST_CASE("relation instances") {
    const RootDatum R = RootDatum::from_type("A2");
    std::set<RelationTag> tags;
    for (const auto& r : relation_instances(R, 1)) tags.insert(r.tag);
    CHECK(tags.size() == 4);
    // every instance relates words with the same image in W_aff
    oracle::Setup s("A2");
    for (const auto& r : relation_instances(R, 2)) CHECK(project_to_Waff(s.G, r.lhs) == project_to_Waff(s.G, r.rhs));
  }
}

TEST_SUITE("hecke") {
  TEST_CASE("quadratic relation and inverses") {
    for (const char* t : {"A1", "A2", "A3", "B2", "G2"}) {
      CAPTURE(std::string(t));
      oracle::Setup s(t);
      for (std::size_t g = 0; g < s.G.num_generators(); ++g) {
        const HeckeElt T = s.H.T_gen(g);
        const HeckeElt a = T + LaurentPoly::v_inv() * s.H.one();
        const HeckeElt b = T - LaurentPoly::v() * s.H.one();
        CHECK(s.H.mul(a, b).is_zero());
        CHECK(s.H.mul(s.H.inv_T_gen(g), T) == s.H.one());
        CHECK(s.H.left_mul_inv_gen(g, T) == s.H.one());
      }
    }
  }

  TEST_CASE("v = 1 recovers the group algebra") {
    oracle::Setup s("B2");
    const auto elts = sample(s, 1);
    for (std::size_t i = 0; i < elts.size(); i += 3)
      for (std::size_t j = 0; j < elts.size(); j += 5) {
        const auto p = s.H.specialize_v1(s.H.mul(s.H.basis(elts[i]), s.H.basis(elts[j])));
        CHECK(p == std::map<AffWeylElt, std::int64_t>{{s.G.compose(elts[i], elts[j]), 1}});
      }
  }

  TEST_CASE("length-additive products") {
    oracle::Setup s("A2");
    for (const auto& a : sample(s, 1))
      for (const auto& b : sample(s, 1))
        if (s.G.length(s.G.compose(a, b)) == s.G.length(a) + s.G.length(b))
          CHECK(s.H.mul(s.H.basis(a), s.H.basis(b)) == s.H.basis(s.G.compose(a, b)));
  }

  TEST_CASE("associativity") {
    oracle::Setup s("G2");
    const auto elts = sample(s, 1);
    for (std::size_t i = 0; i < elts.size(); i += 11)
      for (std::size_t j = 3; j < elts.size(); j += 13)
        for (std::size_t k = 5; k < elts.size(); k += 17) {
          const HeckeElt a = s.H.basis(elts[i]), b = s.H.basis(elts[j]), c = s.H.basis(elts[k]);
          CHECK(s.H.mul(s.H.mul(a, b), c) == s.H.mul(a, s.H.mul(b, c)));
        }
  }

  TEST_CASE("theta elements") {
    for (const char* t : {"A2", "B2", "G2"}) {
      oracle::Setup s(t);
      for (const auto& x : weight_box(2, 2)) {
        if (x.is_dominant()) CHECK(s.H.theta(x) == s.H.basis(s.G.translation(x)));
        CHECK(s.H.mul(s.H.theta(x), s.H.theta(-x)) == s.H.one());
        for (const auto& y : weight_box(2, 1)) CHECK(s.H.mul(s.H.theta(x), s.H.theta(y)) == s.H.theta(x + y));
      }
    }
  }

  TEST_CASE("Bernstein commutation relation") {
    // (theta_x T_s - T_s theta_{s x})(1 - theta_{-a}) = (v - v^-1)(theta_x - theta_{s x})
    for (const char* t : {"A2", "B2", "G2"}) {
      CAPTURE(std::string(t));
      oracle::Setup s(t);
      const IntMatrix& A = s.R().cartan();
      for (std::size_t i = 0; i < 2; ++i) {
        const Weight alpha = oracle::simple_root(A, i);
        for (const auto& x : weight_box(2, 2)) {
          const Weight sx = oracle::reflect(A, i, x);
          const HeckeElt lhs = s.H.mul(s.H.mul(s.H.theta(x), s.H.T_gen(i)) - s.H.mul(s.H.T_gen(i), s.H.theta(sx)),
                                       s.H.one() - s.H.theta(-alpha));
          const HeckeElt rhs = LaurentPoly::v_minus_v_inv() * (s.H.theta(x) - s.H.theta(sx));
          CHECK(lhs == rhs);
        }
      }
    }
  }

  TEST_CASE("relations hold in the algebra") {
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
      CAPTURE(std::string(t));
      oracle::Setup s(t);
      for (const auto& r : relation_instances(s.R(), 1)) {
        CAPTURE(r.description);
        CHECK(s.H.eval_word(r.lhs) == s.H.eval_word(r.rhs));
        CHECK(s.H.mul(s.H.eval_word(r.lhs), s.H.eval_word(r.lhs.inverse())) == s.H.one());
      }
    }
  }

  TEST_CASE("standard bases round trip") {
    for (const char* t : {"A1", "A2", "B2"}) {
      oracle::Setup s(t);
      for (const auto& x : weight_box(s.R().rank(), 1))
        for (std::size_t i = 0; i < s.W.size(); ++i)
          for (Side from : {Side::Left, Side::Right})
            for (Side to : {Side::Left, Side::Right}) {
              const HeckeElt h = s.H.standard_element(s.W.element(i), x, from);
              const StdCoords c = s.H.to_standard_basis(h, to, 4);
              CHECK(s.H.from_standard_basis(c, to) == h);
              if (from == to) CHECK(c == StdCoords{{{s.W.element(i), x}, LaurentPoly(1)}});
            }
    }
  }

  TEST_CASE("conversion window") {
    oracle::Setup s("A1");
    const HeckeElt h = s.H.standard_element(s.W.identity(), Weight{2}, Side::Left);
    CHECK_THROWS_AS(s.H.to_standard_basis(h, Side::Right, 1), WindowError);
  }

  TEST_CASE("formatting and mixing") {
    oracle::Setup s("A1");
    CHECK(s.H.to_string(s.H.mul(s.H.T_gen(0), s.H.T_gen(0))) == "(1)T[e] + (v-v^-1)T[s1]");
    oracle::Setup u("A2");
    CHECK_THROWS_AS(s.H.one() + u.H.one(), std::invalid_argument);
  }
}
