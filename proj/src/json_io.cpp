#include "affhecke/json_io.hpp"

#include <stdexcept>

namespace affhecke {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("JSON input: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Json word_json(const Word& w) {
  Json a = Json::array();
  for (std::size_t s : w) a.push_back(s + 1);
  return a;
}

Word word_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) bad("a word must be an array of reflection indices");
  Word w;
  for (const auto& e : j) {
    const int s = as_int(e, "reflection index");
    if (s < 1 || static_cast<std::size_t>(s) > rank) bad("reflection index out of range");
    w.push_back(static_cast<std::size_t>(s - 1));
  }
  return w;
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json o = Json::object();
  for (const auto& [e, c] : p.terms()) o[std::to_string(e)] = c;
  return o;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (j.is_number_integer()) return LaurentPoly(j.get<std::int64_t>());
  if (!j.is_object()) bad("a coefficient must be an object {exponent: integer}");
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(k, &used);
      if (used != k.size()) bad("bad exponent \"" + k + "\"");
    } catch (const std::logic_error&) {
      bad("bad exponent \"" + k + "\"");
    }
    if (!v.is_number_integer()) bad("coefficients must be integers");
    p += LaurentPoly(v.get<std::int64_t>(), e);
  }
  return p;
}

Json to_json(const Weight& x) { return x.to_vector(); }

Weight weight_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank) bad("a weight must be an array of " + std::to_string(rank) + " integers");
  Weight x(rank);
  for (std::size_t i = 0; i < rank; ++i) x[i] = as_int(j[i], "weight coordinate");
  return x;
}

Json to_json(const AffineWeylGroup& G, const AffWeylElt& a) {
  return Json{{"fin", word_json(G.finite().reduced_word(a.fin))}, {"trans", to_json(a.trans)}};
}

AffWeylElt aff_from_json(const AffineWeylGroup& G, const Json& j) {
  const Word w = word_from_json(field(j, "fin"), G.rank());
  return {G.finite().from_word(w), weight_from_json(field(j, "trans"), G.rank())};
}

Json to_json(const BraidWord& w) {
  Json a = Json::array();
  for (const auto& t : w.letters) {
    if (t.kind == BraidToken::Kind::T) a.push_back(Json{{"T", t.s + 1}, {"e", t.exponent}});
    else a.push_back(Json{{"theta", to_json(t.x)}});
  }
  return a;
}

BraidWord braid_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) bad("a braid word must be an array of tokens");
  BraidWord w;
  for (const auto& t : j) {
    if (t.is_object() && t.contains("theta")) {
      w.letters.push_back(BraidToken::theta(weight_from_json(t.at("theta"), rank)));
      continue;
    }
    const int s = as_int(field(t, "T"), "T index");
    const int e = t.contains("e") ? as_int(t.at("e"), "T exponent") : 1;
    if (s < 1 || static_cast<std::size_t>(s) > rank) bad("T index out of range");
    if (e != 1 && e != -1) bad("T exponent must be 1 or -1");
    w.letters.push_back(BraidToken::T(static_cast<std::size_t>(s - 1), e));
  }
  return w;
}

Json to_json(const HeckeAlgebra& H, const HeckeElt& h) {
  Json terms = Json::array();
  for (const auto& [a, c] : H.sorted_terms(h)) terms.push_back(Json{{"w", to_json(H.group(), a)}, {"c", to_json(c)}});
  return Json{{"terms", terms}};
}

HeckeElt hecke_from_json(const HeckeAlgebra& H, const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  HeckeElt h = H.zero();
  for (const auto& t : terms) h.add(aff_from_json(H.group(), field(t, "w")), laurent_from_json(field(t, "c")));
  return h;
}

Json to_json(const WeylGroup& W, const StdCoords& c) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : c)
    terms.push_back(Json{{"w", word_json(W.reduced_word(key.first))}, {"x", to_json(key.second)}, {"c", to_json(coeff)}});
  return Json{{"terms", terms}};
}

Json to_json(const CharFunc& f) {
  Json terms = Json::array();
  for (const auto& [x, c] : f.terms()) terms.push_back(Json{{"x", to_json(x)}, {"c", to_json(c)}});
  return Json{{"terms", terms}};
}

Json to_json(const QPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"m", m}, {"c", c.get_str()}});
  return Json{{"n", p.nvars()}, {"weights", p.weights()}, {"terms", terms}};
}

QPoly qpoly_from_json(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_unsigned() || n.get<std::size_t>() == 0 || n.get<std::size_t>() > 64)
    bad("\"n\" must be a positive variable count");
  const std::size_t nv = n.get<std::size_t>();
  std::vector<int> weights;
  if (j.contains("weights")) {
    if (!j.at("weights").is_array()) bad("\"weights\" must be an array");
    for (const auto& w : j.at("weights")) weights.push_back(as_int(w, "weight"));
  }
  QPoly p = [&] {
    try {
      return QPoly(nv, weights);
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }();
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  for (const auto& t : terms) {
    const Json& m = field(t, "m");
    if (!m.is_array() || m.size() != nv) bad("monomial exponent vector of the wrong length");
    QPoly::Monomial mono;
    for (const auto& e : m) {
      const int k = as_int(e, "exponent");
      if (k < 0) bad("negative exponent");
      mono.push_back(k);
    }
    const Json& c = field(t, "c");
    mpq_class q;
    if (c.is_number_integer()) {
      q = mpq_class(c.get<long>());
    } else if (c.is_string()) {
      if (q.set_str(c.get<std::string>(), 10) != 0) bad("bad rational \"" + c.get<std::string>() + "\"");
      if (q.get_den() == 0) bad("zero denominator");
      q.canonicalize();
    } else {
      bad("coefficients must be integers or \"p/q\" strings");
    }
    p.add_term(mono, q);
  }
  return p;
}

std::vector<QPoly> qpolys_from_json(const Json& j) {
  const Json& arr = j.is_object() ? field(j, "generators") : j;
  if (!arr.is_array()) bad("expected an array of polynomials");
  std::vector<QPoly> out;
  for (const auto& p : arr) out.push_back(qpoly_from_json(p));
  return out;
}

Json to_json(const KoszulReport& r) {
  Json table = Json::array();
  for (const auto& [key, dim] : r.homology) table.push_back(Json{{"i", key.first}, {"d", key.second}, {"dim", dim}});
  Json o{{"nvars", r.nvars},
         {"generator_degrees", r.generator_degrees},
         {"max_degree", r.max_degree},
         {"homogeneous", r.homogeneous},
         {"higher_homology_vanishes", r.higher_vanish()},
         {"H0", r.h0()},
         {"homology", table}};
  if (!r.caveat.empty()) o["caveat"] = r.caveat;
  return o;
}

Json to_json(const PresentationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json o{{"relation", to_string(c.tag)}, {"instance", c.description}, {"passed", c.passed}};
    if (!c.passed && c.mu) {
      o["counterexample"] = Json{{"mu", to_json(*c.mu)}, {"lhs", to_json(c.lhs_image)}, {"rhs", to_json(c.rhs_image)}};
    }
    checks.push_back(std::move(o));
  }
  return Json{{"type", r.type},
              {"relation_radius", r.relation_radius},
              {"monomial_radius", r.monomial_radius},
              {"monomials", r.monomials},
              {"instances", r.checks.size()},
              {"failures", r.failures()},
              {"all_passed", r.all_passed()},
              {"checks", checks}};
}

Json to_json(const Conventions& c) {
  Json o = Json::object();
  for (const auto& [k, v] : c.describe()) o[k] = v;
  return o;
}

Json to_json(const KernelClass& k, const HeckeAlgebra& H, const Conventions& c) {
  return Json{{"w", word_json(H.finite().reduced_word(k.w))},
              {"twist", Json::array({to_json(k.twist_left), to_json(k.twist_right)})},
              {"conventions", to_json(c)},
              {"value", to_json(H, k.value)}};
}

Json to_json(const ConvolutionReport& r, const HeckeAlgebra& H) {
  Json words = Json::array();
  for (const auto& w : r.words)
    words.push_back(Json{{"word", word_json(w.word)},
                         {"convolution_matches", w.convolution_matches},
                         {"product_matches", w.product_matches}});
  return Json{{"w", word_json(H.finite().reduced_word(r.w))},
              {"expected", to_json(H, r.expected)},
              {"all_passed", r.all_passed()},
              {"words", words}};
}

Json to_json(const KLTable& T) {
  Json rows = Json::array();
  for (const auto& row : kl_rows(T))
    rows.push_back(Json{{"y", row.y_word}, {"w", row.w_word}, {"P", kl_to_string(row.poly)}, {"P(1)", kl_at_one(row.poly)}});
  return rows;
}

IntMatrix cartan_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("a Cartan matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  if (n > kMaxRank) bad("Cartan matrix too large");
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) bad("Cartan matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = as_int(j[i][k], "Cartan entry");
  }
  return m;
}

}  // namespace affhecke
