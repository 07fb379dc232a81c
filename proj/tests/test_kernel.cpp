#include <doctest.h>

#include "affhecke/kernel.hpp"
#include "affhecke/linalg.hpp"
#include "oracles.hpp"

using namespace affhecke;

TEST_SUITE("kernelcalc") {
  TEST_CASE("simple and longest classes") {
    oracle::Setup a1("A1");
    CHECK(a1.H.to_string(kernel_class(a1.H, a1.W.simple(0)).value) == "(-v)T[s1]");
    CHECK(kernel_class(a1.H, a1.W.identity()).value == a1.H.one());
    oracle::Setup a2("A2");
    const WeylElt w = a2.W.from_word(parse_word("s1s2s1", 2));
    CHECK(kernel_class(a2.H, w).value == LaurentPoly(-1, 3) * a2.H.basis(w));
    const WeylElt u = a2.W.from_word(parse_word("s1s2", 2));
    CHECK(kernel_class(a2.H, u).value == LaurentPoly(1, 2) * a2.H.basis(a2.W.inverse(u)));
  }

  TEST_CASE("twists multiply on the matching side") {
    oracle::Setup s("B2");
    const Weight x{1, -1}, y{0, 2};
    const WeylElt w = s.W.from_word(parse_word("s1s2", 2));
    const HeckeElt core = kernel_class(s.H, w).value;
    CHECK(kernel_class(s.H, w, x, y).value == s.H.mul(s.H.mul(s.H.theta(x), core), s.H.theta(y)));
  }

  TEST_CASE("reduced-word convolution") {
    for (const char* t : {"A2", "A3", "B2", "G2"}) {
      CAPTURE(std::string(t));
      oracle::Setup s(t);
      Conventions direct;
      direct.order = ConvolutionOrder::Direct;
      for (std::size_t i = 0; i < s.W.size(); ++i) {
        const auto rep = verify_reduced_word_convolution(s.H, s.W.element(i));
        CHECK(rep.all_passed());
        CHECK(rep.words.size() == s.W.reduced_words(s.W.element(i)).size());
        CHECK(verify_reduced_word_convolution(s.H, s.W.element(i), direct).all_passed());
      }
    }
  }

  TEST_CASE("inverse kernel") {
    // O_{Z_s}<1> * O_{Z_s}(-rho, rho - a)<1> is the unit
    for (const char* t : {"A2", "B2", "G2"}) {
      oracle::Setup s(t);
      const Conventions c;
      for (std::size_t i = 0; i < 2; ++i) {
        const Weight alpha = oracle::simple_root(s.R().cartan(), i);
        const auto k = kernel_class(s.H, s.W.simple(i), -s.R().rho(), s.R().rho() - alpha);
        CHECK(k.value == LaurentPoly(-1, 1) * s.H.inv_T_gen(i));
        const HeckeElt unit = c.shift(2) * convolve(s.H, kernel_class(s.H, s.W.simple(i)), k, c);
        CHECK(unit == s.H.one());
      }
    }
  }

  TEST_CASE("Borel-Moore dictionary") {
    WeylGroup W(RootDatum::from_type("A2"));
    const Conventions ex;
    Conventions direct;
    direct.order = ConvolutionOrder::Direct;
    const WeylElt a = W.simple(0), b = W.simple(1);
    CHECK(bm_compose(W, bm_class(a), bm_class(b), ex) == bm_class(W.mul(b, a)));
    CHECK(bm_compose(W, bm_class(a), bm_class(b), direct) == bm_class(W.mul(a, b)));
    CHECK(bm_compose(W, bm_class(a), bm_class(a), ex) == bm_class(W.identity()));
  }

  TEST_CASE("twisted families are independent") {
    oracle::Setup s("A2");
    for (Side side : {Side::Left, Side::Right}) {
      const auto fam = twisted_family(s.H, side, 2);
      CHECK(fam.size() == 6 * 25);
      const RankResult r = rank_over_Qv(fam);
      CHECK(r.independent());
    }
    auto fam = twisted_family(s.H, Side::Left, 1);
    fam.push_back(fam[3] + LaurentPoly::v() * fam[7]);
    const RankResult r = rank_over_Qv(fam);
    CHECK_FALSE(r.independent());
    CHECK(r.rank_lower_bound == fam.size() - 1);
  }

  TEST_CASE("conventions are described") {
    const auto d = Conventions{}.describe();
    CHECK(d.at("shift") == "<j> -> v^-j");
    CHECK(d.count("convolution"));
    CHECK(d.count("eigenvalues"));
    CHECK(Conventions{}.shift(1) == LaurentPoly::v_inv());
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("exact rank") {
    auto row = [](std::initializer_list<long> v) {
      SparseRow r;
      std::size_t i = 0;
      for (long x : v) {
        if (x != 0) r[i] = x;
        ++i;
      }
      return r;
    };
    CHECK(exact_rank({row({1, 2, 3}), row({2, 4, 6}), row({0, 1, 1})}) == 2);
    CHECK(exact_rank({row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})}) == 3);
    CHECK(exact_rank({row({0, 0, 0})}) == 0);
    SparseRow half;
    half[0] = mpq_class(1, 2);
    half[2] = mpq_class(-1, 3);
    SparseRow scaled;
    scaled[0] = 3;
    scaled[2] = -2;
    CHECK(exact_rank({half, scaled}) == 1);
    RankAccumulator acc;
    CHECK(acc.add(row({1, 1})));
    CHECK_FALSE(acc.add(row({2, 2})));
    CHECK(acc.reduce(row({1, 2})).size() == 1);
  }
}
