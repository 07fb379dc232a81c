// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the budget.  Exit status 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "affhecke/kernel.hpp"
#include "affhecke/kl.hpp"
#include "affhecke/koszul.hpp"
#include "affhecke/polyrep.hpp"
#include "oracles.hpp"

using namespace affhecke;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

bool run(int id, const char* name, double budget, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = o.ok && secs < budget;
  std::printf("%s  %d. %s: %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs, budget);
  std::fflush(stdout);
  return ok;
}

const char* const kTypes[] = {"A1", "A2", "A3", "B2", "G2"};

Outcome presentation() {
  Outcome o;
  std::size_t instances = 0;
  for (const char* t : kTypes) {
    const int radius = std::string(t) == "G2" ? 1 : 2;
    const PresentationReport rep = verify_presentation(RootDatum::from_type(t), radius, 3);
    instances += rep.checks.size();
    if (!rep.all_passed()) {
      o.ok = false;
      o.detail += std::string(t) + " has " + std::to_string(rep.failures()) + " failing instances; ";
    }
  }
  o.detail += std::to_string(instances) + " relation instances checked on radius-3 monomials";
  return o;
}

Outcome quadratic() {
  Outcome o;
  std::size_t gens = 0;
  for (const char* t : kTypes) {
    oracle::Setup s(t);
    for (std::size_t g = 0; g < s.G.num_generators(); ++g, ++gens) {
      const HeckeElt T = s.H.T_gen(g);
      const HeckeElt q = s.H.mul(T + LaurentPoly::v_inv() * s.H.one(), T - LaurentPoly::v() * s.H.one());
      bool ok = q.is_zero();
      for (const auto& x : weight_box(s.R().rank(), 3)) {
        const CharFunc f = CharFunc::monomial(x);
        auto apply = [&](const CharFunc& h) { return g < s.R().rank() ? dl_T(s.R(), g, h) : act(s.H, T, h); };
        const CharFunc Tf = apply(f);
        // (T + v^-1)(T - v) f = T^2 f - (v - v^-1) T f - f
        ok = ok && (apply(Tf) - LaurentPoly::v_minus_v_inv() * Tf - f).is_zero();
      }
      if (!ok) {
        o.ok = false;
        o.detail += std::string(t) + " generator " + std::to_string(g) + " fails; ";
      }
    }
  }
  o.detail += std::to_string(gens) + " generators of S_aff, operator and algebra identities";
  return o;
}

Outcome matsumoto() {
  Outcome o;
  std::size_t words = 0;
  for (const char* t : {"A3", "B2"}) {
    oracle::Setup s(t);
    for (std::size_t i = 0; i < s.W.size(); ++i) {
      const WeylElt w = s.W.element(i);
      for (const Word& word : s.W.reduced_words(w)) {
        HeckeElt p = s.H.one();
        for (std::size_t k : word) p = s.H.mul(p, s.H.T_gen(k));
        o.ok = o.ok && p == s.H.basis(w);
        ++words;
      }
      o.ok = o.ok && verify_reduced_word_convolution(s.H, w).all_passed();
    }
  }
  o.detail = std::to_string(words) + " reduced words over W(A3) and W(B2); convolution checks " +
             std::string(o.ok ? "agree" : "disagree");
  return o;
}

Outcome headline() {
  WeylGroup W(RootDatum::from_type("A3"));
  const WeylElt y = W.from_word(parse_word("s2", 3));
  const WeylElt w = W.from_word(parse_word("s2s1s3s2", 3));
  const KLTable a(W, KLAlgorithm::MuRecursion), b(W, KLAlgorithm::RPolynomial);
  const std::string pa = kl_to_string(a.P(y, w)), pb = kl_to_string(b.P(y, w));
  const Multiplicity m = component_multiplicity(a, y, w);
  return {pa == "1+q" && pb == "1+q" && m.value == 2,
          "P_{s2,s2s1s3s2} = " + pa + " (recursion), " + pb + " (R-polynomials); multiplicity " + std::to_string(m.value)};
}

Outcome kl_sanity() {
  Outcome o;
  std::size_t pairs = 0;
  for (const char* t : {"A2", "A1xA1", "A3", "B2"}) {
    WeylGroup W(RootDatum::from_type(t));
    const KLTable a(W, KLAlgorithm::MuRecursion), b(W, KLAlgorithm::RPolynomial);
    const bool all_one = std::string(t) == "A2" || std::string(t) == "A1xA1";
    for (std::size_t i = 0; i < W.size(); ++i)
      for (std::size_t j = 0; j < W.size(); ++j) {
        const WeylElt y = W.element(i), w = W.element(j);
        const KLPoly& p = a.P(y, w);
        bool ok = p == b.P(y, w);
        if (W.bruhat_leq(y, w)) {
          ++pairs;
          ok = ok && !p.empty() && p[0] == 1;
          if (y != w) ok = ok && 2 * static_cast<int>(p.size() - 1) <= W.length(w) - W.length(y) - 1;
          if (all_one) ok = ok && p == KLPoly{1};
        }
        if (!ok) {
          o.ok = false;
          o.detail += std::string(t) + " pair (" + W.label(y) + ", " + W.label(w) + ") fails; ";
        }
      }
  }
  o.detail += std::to_string(pairs) + " Bruhat pairs, algorithms agree entrywise";
  return o;
}

Outcome leading_terms() {
  Outcome o;
  std::size_t cases = 0, literal_failures = 0, literal_positive = 0;
  for (const char* t : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    const RootDatum R = RootDatum::from_type(t);
    for (const auto& lambda : weight_box(R.rank(), 3))
      for (std::size_t i = 0; i < R.rank(); ++i) {
        ++cases;
        const LeadingTerm lem = dl_leading_term(R, i, lambda, LeadingMode::Lemma);
        const LeadingTerm lit = dl_leading_term(R, i, lambda, LeadingMode::Literal);
        const bool target_ok = lem.target == R.reflect(i, lambda) &&
                               (lem.pairing != 0 || lem.coefficient == LaurentPoly::v());
        if (!(lem.support_in_conv && lit.support_in_conv && lem.single_monomial && target_ok)) o.ok = false;
        if (!lit.single_monomial) {
          ++literal_failures;
          literal_positive += lit.pairing > 0;
        }
      }
  }
  o.detail = std::to_string(cases) + " cases; support in conv always; single leading monomial with the twisted kernel "
             "(T_s for <l,a^v> <= 0, T_s^-1 for > 0); T_s alone fails on " +
             std::to_string(literal_failures) + " cases, " + std::to_string(literal_positive) + " of them with <l,a^v> > 0";
  return o;
}

Outcome standard_bases() {
  Outcome o;
  oracle::Setup s("A2");
  std::size_t round_trips = 0;
  for (Side side : {Side::Left, Side::Right}) {
    const auto fam = twisted_family(s.H, side, 2);
    const RankResult r = rank_over_Qv(fam);
    o.ok = o.ok && r.independent();
    o.detail += std::string(side == Side::Left ? "left" : "right") + " family rank " + std::to_string(r.rank_lower_bound) +
                "/" + std::to_string(r.size) + "; ";
    for (const auto& h : fam)
      for (Side to : {Side::Left, Side::Right}) {
        o.ok = o.ok && s.H.from_standard_basis(s.H.to_standard_basis(h, to, 8), to) == h;
        ++round_trips;
      }
  }
  o.detail += std::to_string(round_trips) + " round trips";
  return o;
}

Outcome koszul() {
  Outcome o;
  const QPoly x = QPoly::variable(2, 0), y = QPoly::variable(2, 1), z = QPoly::variable(1, 0);
  const KoszulReport reg = koszul_homology({x, y}, 4);
  const KoszulReport rep = koszul_homology({z, z}, 3);
  const auto chart = sl2_steinberg_chart();
  const KoszulReport sl2 = koszul_homology(chart, 6);
  const HilbertReport hs = hilbert_series_check(chart, 6);
  const bool ok_reg = reg.higher_vanish() && reg.h0() == std::vector<std::size_t>{1, 0, 0, 0, 0};
  const bool ok_rep = !rep.higher_vanish() && rep.dim(1, 1) == 1;
  o.ok = ok_reg && ok_rep && sl2.higher_vanish() && hs.matches();
  o.detail = std::string("(x,y) ") + (ok_reg ? "regular" : "WRONG") + ", (x,x) " + (ok_rep ? "non-regular" : "WRONG") +
             ", sl2 chart H_>0 " + (sl2.higher_vanish() ? "= 0" : "!= 0") + " through degree 6, Hilbert series " +
             (hs.matches() ? "matches" : "differs");
  return o;
}

Outcome lengths() {
  Outcome o;
  std::size_t elements = 0;
  for (const char* t : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    oracle::Setup s(t);
    for (const auto& [a, d] : oracle::cayley_distances(s.G, 8)) {
      ++elements;
      if (s.G.length(a) != d) o.ok = false;
    }
    const auto omega = s.G.omega_elements();
    for (const auto& a : omega) o.ok = o.ok && s.G.length(a) == 0;
    o.ok = o.ok && static_cast<long>(omega.size()) == s.R().fundamental_group_order();
    o.detail += std::string(t) + " |Omega|=" + std::to_string(omega.size()) + " ";
  }
  o.detail += "; " + std::to_string(elements) + " elements of length <= 8 match Cayley distance";
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "Presentation verification", 60, presentation);
  ok &= run(2, "Quadratic relation", 5, quadratic);
  ok &= run(3, "Reduced words and convolution", 10, matsumoto);
  ok &= run(4, "KL headline number", 5, headline);
  ok &= run(5, "KL sanity suite", 30, kl_sanity);
  ok &= run(6, "Demazure-Lusztig leading terms", 10, leading_terms);
  ok &= run(7, "Standard bases", 30, standard_bases);
  ok &= run(8, "Koszul desk-scale geometry", 300, koszul);
  ok &= run(9, "Length formula", 60, lengths);
  return ok ? 0 : 1;
}
