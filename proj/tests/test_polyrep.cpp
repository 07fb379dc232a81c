#include <doctest.h>

#include "affhecke/polyrep.hpp"
#include "oracles.hpp"

using namespace affhecke;

namespace {

CharFunc reflect(const IntMatrix& A, std::size_t i, const CharFunc& f) {
  CharFunc r;
  for (const auto& [x, c] : f.terms()) r.add(oracle::reflect(A, i, x), c);
  return r;
}

}  // namespace

TEST_SUITE("polyrep") {
  TEST_CASE("Demazure-Lusztig formula") {
    // (1 - e^{-a}) (T_s f - v s(f)) = (v - v^-1)(f - s(f))
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
      CAPTURE(std::string(t));
      const RootDatum R = RootDatum::from_type(t);
      const IntMatrix& A = R.cartan();
      for (std::size_t i = 0; i < R.rank(); ++i) {
        const Weight alpha = oracle::simple_root(A, i);
        for (const auto& x : weight_box(R.rank(), 3)) {
          const CharFunc f = CharFunc::monomial(x);
          const CharFunc g = dl_T(R, i, f) - LaurentPoly::v() * reflect(A, i, f);
          CHECK(g - theta_mult(-alpha, g) == LaurentPoly::v_minus_v_inv() * (f - reflect(A, i, f)));
        }
      }
    }
  }

  TEST_CASE("quadratic relation on operators") {
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
      oracle::Setup s(t);
      for (const auto& x : weight_box(s.R().rank(), 2)) {
        const CharFunc f = CharFunc::monomial(x, LaurentPoly(3, 1) - LaurentPoly(1));
        for (std::size_t i = 0; i < s.R().rank(); ++i) {
          const CharFunc Tf = dl_T(s.R(), i, f);
          CHECK(dl_T(s.R(), i, Tf) == LaurentPoly::v_minus_v_inv() * Tf + f);
          CHECK(dl_T_inv(s.R(), i, Tf) == f);
        }
        for (std::size_t g = 0; g < s.G.num_generators(); ++g) {
          const CharFunc Tf = act(s.H, s.H.T_gen(g), f);
          CHECK(act(s.H, s.H.T_gen(g), Tf) == LaurentPoly::v_minus_v_inv() * Tf + f);
        }
      }
    }
  }

  TEST_CASE("module structure matches the algebra") {
    oracle::Setup s("A2");
    for (const auto& r : relation_instances(s.R(), 1))
      for (const auto& mu : weight_box(2, 1)) {
        const CharFunc e = CharFunc::monomial(mu);
        CHECK(act(s.H, s.H.eval_word(r.lhs), e) == act(s.R(), r.lhs, e));
      }
    const HeckeElt a = s.H.mul(s.H.T_gen(2), s.H.theta(Weight{1, -1}));
    const HeckeElt b = s.H.T_gen(0) + s.H.theta(Weight{0, 1});
    for (const auto& mu : weight_box(2, 1)) {
      const CharFunc e = CharFunc::monomial(mu);
      CHECK(act(s.H, s.H.mul(a, b), e) == act(s.H, a, act(s.H, b, e)));
    }
  }

  TEST_CASE("presentation verification") {
    for (const char* t : {"A1", "A2", "A1xA1"}) {
      const PresentationReport rep = verify_presentation(RootDatum::from_type(t), 1, 2);
      CHECK(rep.all_passed());
      CHECK(rep.failures() == 0);
      CHECK(rep.monomials > 0);
      CHECK_FALSE(rep.checks.empty());
    }
  }

  TEST_CASE("leading terms") {
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
      CAPTURE(std::string(t));
      const RootDatum R = RootDatum::from_type(t);
      const IntMatrix& A = R.cartan();
      for (const auto& lambda : weight_box(R.rank(), 3))
        for (std::size_t i = 0; i < R.rank(); ++i) {
          const int k = lambda[i];
          const LeadingTerm lit = dl_leading_term(R, i, lambda, LeadingMode::Literal);
          const LeadingTerm lem = dl_leading_term(R, i, lambda, LeadingMode::Lemma);
          CHECK(lit.pairing == k);
          CHECK(lit.single_monomial == (k <= 0));
          CHECK(lem.single_monomial);
          CHECK(lem.inverse_used == (k > 0));
          CHECK(lem.target == oracle::reflect(A, i, lambda));
          CHECK(lem.coefficient == (k < 0 ? LaurentPoly::v_inv() : LaurentPoly::v()));
          for (const auto* lt : {&lit, &lem}) {
            CHECK(lt->support_in_conv);
            const CharFunc img = lt->inverse_used ? dl_T_inv(R, i, CharFunc::monomial(lambda)) : dl_T(R, i, CharFunc::monomial(lambda));
            for (const auto& [mu, c] : img.terms()) CHECK(oracle::in_conv(A, lambda, mu));
          }
        }
    }
  }

  TEST_CASE("formatting") {
    CHECK(CharFunc{}.to_string() == "0");
    CHECK(CharFunc::monomial(Weight{1, 0}).to_string() == "(1)e^(1,0)");
  }
}
