#include <doctest.h>

#include "affhecke/errors.hpp"
#include "oracles.hpp"

using namespace affhecke;

namespace {

std::vector<Weight> orbit_oracle(const IntMatrix& A, const Weight& x) {
  std::set<Weight> seen{x};
  std::queue<Weight> q;
  q.push(x);
  while (!q.empty()) {
    const Weight y = q.front();
    q.pop();
    for (std::size_t i = 0; i < A.size(); ++i) {
      const Weight z = oracle::reflect(A, i, y);
      if (seen.insert(z).second) q.push(z);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

TEST_SUITE("rootdata") {
  TEST_CASE("Cartan matrices in Bourbaki numbering") {
    const auto A2 = RootDatum::from_type("A2").cartan();
    CHECK(A2(0, 1) == -1);
    CHECK(A2(1, 0) == -1);
    // B2: alpha1 long, so <alpha1, alpha2^vee> = -2
    const auto B2 = RootDatum::from_type("B2").cartan();
    CHECK(B2(1, 0) == -2);
    CHECK(B2(0, 1) == -1);
    // G2: alpha1 short, so <alpha2, alpha1^vee> = -3
    const auto G2 = RootDatum::from_type("G2").cartan();
    CHECK(G2(0, 1) == -3);
    CHECK(G2(1, 0) == -1);
    CHECK(RootDatum::from_cartan(cartan_matrix('C', 3)) == RootDatum::from_type("C3"));
  }

  TEST_CASE("positive roots agree with closure under reflections") {
    for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4", "A1xA1", "A1xG2"}) {
      CAPTURE(std::string(t));
      const RootDatum R = RootDatum::from_type(t);
      const auto expected = oracle::positive_roots(R.cartan());
      const std::set<Weight> actual(R.positive_roots().begin(), R.positive_roots().end());
      CHECK(actual == expected);
      Weight sum(R.rank());
      for (std::size_t k = 0; k < R.positive_roots().size(); ++k) {
        CHECK(R.pairing(R.positive_roots()[k], R.positive_coroots()[k]) == 2);
        sum += R.positive_roots()[k];
      }
      CHECK(sum == 2 * R.rho());
    }
  }

  TEST_CASE("fundamental group orders") {
    const std::map<std::string, long> det{{"A1", 2}, {"A2", 3}, {"A3", 4}, {"B2", 2}, {"G2", 1}, {"C3", 2},
                                          {"D4", 4}, {"F4", 1}, {"A1xA2", 6}};
    for (const auto& [t, d] : det) CHECK(RootDatum::from_type(t).fundamental_group_order() == d);
  }

  TEST_CASE("highest short root carries the highest coroot") {
    for (const char* t : {"A3", "B2", "B3", "C3", "G2", "F4"}) {
      CAPTURE(std::string(t));
      const RootDatum R = RootDatum::from_type(t);
      auto height = [](const Weight& c) {
        int h = 0;
        for (int v : c.coords()) h += v;
        return h;
      };
      int best = 0;
      for (const auto& c : R.positive_coroots()) best = std::max(best, height(c));
      CHECK(height(R.positive_coroots()[R.components()[0].highest_short_root]) == best);
    }
  }

  TEST_CASE("root lattice membership") {
    for (const char* t : {"A2", "B2", "G2", "A3"}) {
      const RootDatum R = RootDatum::from_type(t);
      for (const auto& x : weight_box(R.rank(), 2)) CHECK(R.in_root_lattice(x) == oracle::in_root_lattice(R.cartan(), x));
    }
  }

  TEST_CASE("convex hulls against the dominance criterion") {
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
      CAPTURE(std::string(t));
      const RootDatum R = RootDatum::from_type(t);
      const IntMatrix& A = R.cartan();
      for (const auto& lambda : weight_box(R.rank(), 2)) {
        const auto orbit = orbit_oracle(A, lambda);
        CHECK(R.orbit(lambda) == orbit);
        int bound = 0;
        for (const auto& y : orbit)
          for (int c : y.coords()) bound = std::max(bound, std::abs(c));
        std::vector<Weight> conv, conv0;
        for (const auto& mu : weight_box(R.rank(), bound)) {
          if (!oracle::in_conv(A, lambda, mu)) continue;
          conv.push_back(mu);
          if (!oracle::in_orbit(A, lambda, mu)) conv0.push_back(mu);
        }
        std::sort(conv.begin(), conv.end());
        std::sort(conv0.begin(), conv0.end());
        const auto [c, c0] = R.conv_hull_weights(lambda);
        CHECK(c == conv);
        CHECK(c0 == conv0);
      }
    }
  }

  TEST_CASE("invalid input is rejected") {
    for (const char* t : {"Z9", "", "A0", "B1", "E9", "A2x", "A2B2"}) CHECK_THROWS_AS(RootDatum::from_type(t), std::invalid_argument);
    IntMatrix bad(2);
    bad(0, 0) = 2;
    bad(1, 1) = 2;
    bad(0, 1) = 1;
    CHECK_THROWS_AS(RootDatum::from_cartan(bad), std::invalid_argument);
  }
}

TEST_SUITE("weylgroups") {
  TEST_CASE("group orders and longest elements") {
    const std::map<std::string, std::size_t> order{{"A1", 2},  {"A2", 6},   {"A3", 24},   {"B2", 8},
                                                   {"G2", 12}, {"B3", 48}, {"D4", 192}, {"F4", 1152}};
    for (const auto& [t, n] : order) {
      CAPTURE(std::string(t));
      WeylGroup W(RootDatum::from_type(t));
      CHECK(W.size() == n);
      CHECK(W.length(W.longest()) == static_cast<int>(W.datum().positive_roots().size()));
      CHECK(W.mul(W.longest(), W.longest()) == W.identity());
    }
  }

  TEST_CASE("length counts roots sent to negative roots") {
    for (const char* t : {"A2", "B2", "G2", "A3", "B3"}) {
      CAPTURE(std::string(t));
      WeylGroup W(RootDatum::from_type(t));
      const IntMatrix& A = W.datum().cartan();
      const auto roots = oracle::positive_roots(A);
      for (std::size_t i = 0; i < W.size(); ++i) {
        const WeylElt w = W.element(i);
        int neg = 0;
        for (const auto& r : roots) neg += roots.count(W.apply(w, r)) == 0;
        CHECK(W.length(w) == neg);
        CHECK(W.mul(w, W.inverse(w)) == W.identity());
        CHECK(W.dot_action(w, -W.datum().rho()) == -W.datum().rho());
      }
    }
  }

  TEST_CASE("type A against permutations") {
    WeylGroup W(RootDatum::from_type("A3"));
    std::vector<std::vector<int>> perm;
    for (std::size_t i = 0; i < W.size(); ++i) {
      perm.push_back(oracle::permutation(W.reduced_word(W.element(i)), 3));
      CHECK(W.length(W.element(i)) == oracle::inversions(perm.back()));
    }
    for (std::size_t i = 0; i < W.size(); ++i)
      for (std::size_t j = 0; j < W.size(); ++j)
        CHECK(W.bruhat_leq(W.element(i), W.element(j)) == oracle::bruhat_leq_perm(perm[i], perm[j]));
  }

  TEST_CASE("Bruhat order against subwords") {
    for (const char* t : {"B2", "G2"}) {
      WeylGroup W(RootDatum::from_type(t));
      for (std::size_t j = 0; j < W.size(); ++j) {
        const WeylElt w = W.element(j);
        const Word word = W.reduced_word(w);
        std::set<WeylElt> below;
        for (unsigned mask = 0; mask < (1u << word.size()); ++mask) {
          Word sub;
          for (std::size_t k = 0; k < word.size(); ++k)
            if (mask >> k & 1u) sub.push_back(word[k]);
          below.insert(W.from_word(sub));
        }
        for (std::size_t i = 0; i < W.size(); ++i) CHECK(W.bruhat_leq(W.element(i), w) == (below.count(W.element(i)) > 0));
      }
    }
  }

  TEST_CASE("reduced words") {
    const std::map<std::string, std::size_t> count{{"A2", 2}, {"A3", 16}, {"B2", 2}, {"G2", 2}};
    for (const auto& [t, n] : count) {
      WeylGroup W(RootDatum::from_type(t));
      const auto words = W.reduced_words(W.longest());
      CHECK(words.size() == n);
      for (const auto& w : words) {
        CHECK(W.from_word(w) == W.longest());
        CHECK(static_cast<int>(w.size()) == W.length(W.longest()));
      }
    }
  }

  TEST_CASE("word parsing") {
    CHECK(parse_word("s1s2s1", 2) == Word{0, 1, 0});
    CHECK(parse_word("s1 s2 s1", 2) == Word{0, 1, 0});
    CHECK(parse_word("e", 2).empty());
    CHECK(parse_word("", 2).empty());
    CHECK(format_word(Word{0, 1}) == "s1s2");
    CHECK_THROWS_AS(parse_word("s4", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x1", 3), std::invalid_argument);
  }

  TEST_CASE("element bound") {
    CHECK_THROWS_AS(WeylGroup(RootDatum::from_type("A5"), 100), SizeError);
  }

  TEST_CASE("affine length equals Cayley distance") {
    const std::map<std::string, std::vector<int>> exponents{
        {"A1", {1}}, {"A2", {1, 2}}, {"B2", {1, 3}}, {"G2", {1, 5}}, {"A1xA1", {1, 1}}};
    for (const auto& [t, ex] : exponents) {
      CAPTURE(std::string(t));
      oracle::Setup s(t.c_str());
      const auto dist = oracle::cayley_distances(s.G, 8);
      std::vector<long> counts(9, 0);
      for (const auto& [a, d] : dist) {
        CHECK(s.G.length(a) == d);
        CHECK(s.G.in_coxeter_part(a));
        ++counts[static_cast<std::size_t>(d)];
      }
      CHECK(counts == oracle::bott_series(ex, 8));
    }
  }

  TEST_CASE("length-zero elements") {
    const std::map<std::string, std::size_t> order{{"A1", 2}, {"A2", 3}, {"G2", 1}, {"B2", 2}, {"A3", 4}, {"A1xA1", 4}};
    for (const auto& [t, n] : order) {
      oracle::Setup s(t.c_str());
      const auto omega = s.G.omega_elements();
      CHECK(omega.size() == n);
      for (const auto& a : omega) {
        CHECK(s.G.length(a) == 0);
        // distinct classes in X / ZR
        for (const auto& b : omega)
          if (!(a == b)) CHECK_FALSE(s.R().in_root_lattice(a.trans - b.trans));
      }
    }
  }

  TEST_CASE("affine group law and decompositions") {
    for (const char* t : {"A2", "B2", "G2"}) {
      oracle::Setup s(t);
      for (std::size_t g = 0; g < s.G.num_generators(); ++g) {
        CHECK(s.G.length(s.G.generator(g)) == 1);
        CHECK(s.G.compose(s.G.generator(g), s.G.generator(g)) == s.G.identity());
      }
      std::vector<AffWeylElt> sample;
      for (std::size_t i = 0; i < s.W.size(); ++i)
        for (const auto& x : weight_box(2, 1)) sample.push_back({s.W.element(i), x});
      for (std::size_t i = 0; i < sample.size(); i += 5)
        for (std::size_t j = 0; j < sample.size(); j += 7) {
          const auto& a = sample[i];
          const auto& b = sample[j];
          const auto& c = sample[(i + j) % sample.size()];
          CHECK(s.G.compose(s.G.compose(a, b), c) == s.G.compose(a, s.G.compose(b, c)));
        }
      for (const auto& a : sample) {
        CHECK(s.G.compose(a, s.G.inverse(a)) == s.G.identity());
        CHECK(s.G.length(s.G.inverse(a)) == s.G.length(a));
        const auto d = s.G.decompose(a);
        AffWeylElt c = s.G.identity();
        for (std::size_t g : d.gens) c = s.G.compose(c, s.G.generator(g));
        CHECK(s.G.compose(c, d.omega) == a);
        CHECK(static_cast<int>(d.gens.size()) == s.G.length(a));
      }
    }
  }
}
