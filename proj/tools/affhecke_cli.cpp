#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <queue>
#include <sstream>

#include "affhecke/errors.hpp"
#include "affhecke/json_io.hpp"

using namespace affhecke;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kInputError = 2, kResourceBound = 3, kNotReduced = 4 };

struct Options {
  std::string type = "A2";
  std::string cartan_file;
  std::string format = "json";
  int shift_sign = -1;
  std::string order = "exchanged";
};

/// Owns the group objects; they reference each other, so the struct is
/// built in place and never moved.
struct Context {
  WeylGroup W;
  AffineWeylGroup G;
  HeckeAlgebra H;
  explicit Context(RootDatum R) : W(std::move(R)), G(W), H(G) {}
  const RootDatum& R() const { return W.datum(); }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return Json::parse(in);
}

RootDatum load_datum(const Options& o) {
  if (!o.cartan_file.empty()) return RootDatum::from_cartan(cartan_from_json(read_json_file(o.cartan_file)));
  return RootDatum::from_type(o.type);
}

Conventions conventions(const Options& o) {
  Conventions c;
  c.shift_sign = o.shift_sign;
  c.order = o.order == "direct" ? ConvolutionOrder::Direct : ConvolutionOrder::Exchanged;
  return c;
}

void print_header_text(const Options& o, const std::string& command, const std::string& type) {
  std::cout << "# command: " << command << "\n# type: " << type << "\n";
  for (const auto& [k, v] : conventions(o).describe()) std::cout << "# " << k << ": " << v << "\n";
}

/// Writes the result in the requested format.  `text` is used for both text
/// and csv output unless `csv` is given.
void emit(const Options& o, const std::string& command, const std::string& type, const Json& body,
          const std::string& text, const std::string& csv = {}) {
  if (o.format == "json") {
    Json out{{"command", command}, {"type", type}, {"conventions", to_json(conventions(o))}};
    for (const auto& [k, v] : body.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
    return;
  }
  print_header_text(o, command, type);
  std::cout << (o.format == "csv" && !csv.empty() ? csv : text);
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

HeckeElt parse_element(const Context& c, const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') return hecke_from_json(c.H, Json::parse(text));
  return c.H.eval_word(parse_braid_word(text, c.R().rank()));
}

bool has_g2(const RootDatum& R) {
  for (const auto& comp : R.components())
    if (comp.letter == 'G') return true;
  return false;
}

int cmd_relations(const Options& o, int radius, int monomial_radius) {
  const RootDatum R = load_datum(o);
  if (radius < 0) radius = has_g2(R) ? 1 : 2;
  const PresentationReport rep = verify_presentation(R, radius, monomial_radius);
  std::ostringstream t;
  t << "instances: " << rep.checks.size() << "\nmonomials: " << rep.monomials << "\nfailures: " << rep.failures()
    << "\n";
  for (const auto& chk : rep.checks)
    if (!chk.passed) t << "FAIL (" << to_string(chk.tag) << ") " << chk.description << "\n";
  emit(o, "relations", R.type_string(), to_json(rep), t.str());
  return rep.all_passed() ? kPass : kCheckFailed;
}

int cmd_kl(const Options& o, const std::vector<std::string>& pair, const std::string& algo_name) {
  Context c(load_datum(o));
  const KLAlgorithm algo = algo_name == "r" ? KLAlgorithm::RPolynomial : KLAlgorithm::MuRecursion;
  const std::string type = c.R().type_string();
  if (pair.empty()) {
    const KLTable T(c.W, algo);
    std::ostringstream t;
    for (const auto& row : kl_rows(T)) t << "P[" << row.y_word << ", " << row.w_word << "] = " << kl_to_string(row.poly) << "\n";
    emit(o, "kl", type, Json{{"algorithm", algo_name}, {"pairs", T.pair_count()}, {"table", to_json(T)}}, t.str(),
         kl_csv(T));
    return kPass;
  }
  const WeylElt y = c.W.from_word(parse_word(pair[0], c.R().rank()));
  const WeylElt w = c.W.from_word(parse_word(pair[1], c.R().rank()));
  // Both algorithms, restricted to the interval below w.
  const KLTable T(c.W, KLAlgorithm::MuRecursion, w);
  const KLTable U(c.W, KLAlgorithm::RPolynomial, w);
  const KLPoly& p = T.P(y, w);
  const bool agree = p == U.P(y, w);
  const Multiplicity m = component_multiplicity(T, y, w);
  Json body{{"y", c.W.label(y)},
            {"w", c.W.label(w)},
            {"P", kl_to_string(p)},
            {"P(1)", kl_at_one(p)},
            {"algorithms_agree", agree},
            {"multiplicity", Json{{"value", m.value}, {"comparable", m.comparable}, {"exact", m.exact}, {"provenance", m.provenance}}}};
  std::ostringstream t;
  t << "P[" << c.W.label(y) << ", " << c.W.label(w) << "] = " << kl_to_string(p) << "\nP(1) = " << kl_at_one(p)
    << "\nalgorithms agree: " << (agree ? "yes" : "no") << "\n";
  emit(o, "kl", type, body, t.str());
  return agree ? kPass : kCheckFailed;
}

int cmd_kernel(const Options& o, const std::vector<std::string>& word_parts, const std::vector<int>& xs,
               const std::vector<int>& ys) {
  Context c(load_datum(o));
  const std::size_t r = c.R().rank();
  const Word word = parse_word(join(word_parts), r);
  const WeylElt w = c.W.from_word(word);
  if (static_cast<std::size_t>(c.W.length(w)) != word.size()) {
    std::cerr << "error: " << format_word(word) << " is not reduced; shorter equivalent: " << c.W.label(w) << "\n";
    return kNotReduced;
  }
  auto weight = [&](const std::vector<int>& v) {
    if (v.empty()) return Weight(r);
    if (v.size() != r) throw std::invalid_argument("twist must have " + std::to_string(r) + " coordinates");
    return Weight(std::span<const int>(v));
  };
  const Conventions conv = conventions(o);
  const KernelClass k = kernel_class(c.H, w, weight(xs), weight(ys));
  const ConvolutionReport rep = verify_reduced_word_convolution(c.H, w, conv);
  Json body = to_json(k, c.H, conv);
  body.erase("conventions");
  body["class"] = c.H.to_string(k.value);
  body["verification"] = to_json(rep, c.H);
  std::ostringstream t;
  t << "class: " << c.H.to_string(k.value) << "\nreduced words: " << rep.words.size()
    << "\nall words agree: " << (rep.all_passed() ? "yes" : "no") << "\n";
  emit(o, "kernel", c.R().type_string(), body, t.str());
  return rep.all_passed() ? kPass : kCheckFailed;
}

int cmd_hecke_mul(const Options& o, const std::string& a_text, const std::string& b_text) {
  Context c(load_datum(o));
  const HeckeElt a = parse_element(c, a_text);
  const HeckeElt b = parse_element(c, b_text);
  const HeckeElt p = c.H.mul(a, b);
  emit(o, "hecke-mul", c.R().type_string(), Json{{"product", to_json(c.H, p)}, {"text", c.H.to_string(p)}},
       c.H.to_string(p) + "\n");
  return kPass;
}

int cmd_basis(const Options& o, const std::string& text, const std::string& side_name, int radius) {
  Context c(load_datum(o));
  const Side side = side_name == "right" ? Side::Right : Side::Left;
  const HeckeElt h = parse_element(c, text);
  const StdCoords coords = c.H.to_standard_basis(h, side, radius);
  const bool round_trip = c.H.from_standard_basis(coords, side) == h;
  std::ostringstream t;
  for (const auto& [key, coeff] : coords) {
    const std::string w = c.W.label(key.first);
    const std::string th = "theta" + key.second.to_string();
    t << "(" << coeff.to_string() << ") " << (side == Side::Left ? "T[" + w + "] " + th : th + " T[" + w + "]") << "\n";
  }
  t << "round trip: " << (round_trip ? "yes" : "no") << "\n";
  emit(o, "basis", c.R().type_string(),
       Json{{"side", side == Side::Left ? "T_w theta_x" : "theta_x T_w"},
            {"radius", radius},
            {"coordinates", to_json(c.W, coords)},
            {"round_trip", round_trip}},
       t.str());
  return round_trip ? kPass : kCheckFailed;
}

int cmd_koszul(const Options& o, const std::string& input, int max_degree) {
  std::vector<QPoly> gens;
  std::vector<std::string> names;
  if (input == "sl2-steinberg") {
    gens = sl2_steinberg_chart();
    names = sl2_chart_names();
  } else {
    gens = qpolys_from_json(read_json_file(input));
  }
  const KoszulReport rep = koszul_homology(gens, max_degree);
  Json body = to_json(rep);
  Json eqs = Json::array();
  for (const auto& g : gens) eqs.push_back(g.to_string(names));
  body["generators"] = eqs;
  bool ok = rep.higher_vanish();
  std::ostringstream t;
  for (const auto& e : eqs) t << "f = " << e.get<std::string>() << "\n";
  for (int i = 0; i <= static_cast<int>(gens.size()); ++i) {
    t << "H" << i << ":";
    for (int d = 0; d <= max_degree; ++d) t << " " << rep.dim(i, d);
    t << "\n";
  }
  if (rep.homogeneous) {
    const HilbertReport hs = hilbert_series_check(gens, max_degree);
    body["hilbert"] = Json{{"expected", hs.expected}, {"actual", hs.actual}, {"matches", hs.matches()}};
    t << "hilbert series matches: " << (hs.matches() ? "yes" : "no") << "\n";
    ok = ok && hs.matches();
  } else {
    t << "caveat: " << rep.caveat << "\n";
  }
  t << "higher homology vanishes: " << (rep.higher_vanish() ? "yes" : "no") << "\n";
  emit(o, "koszul", input, body, t.str());
  return ok ? kPass : kCheckFailed;
}

int cmd_omega(const Options& o) {
  Context c(load_datum(o));
  const auto omega = c.G.omega_elements();
  const long expected = c.R().fundamental_group_order();
  bool ok = static_cast<long>(omega.size()) == expected;
  Json elts = Json::array();
  std::ostringstream t;
  for (const auto& a : omega) {
    const int len = c.G.length(a);
    ok = ok && len == 0;
    elts.push_back(Json{{"element", to_json(c.G, a)}, {"length", len}});
    t << c.G.to_string(a) << "  length " << len << "\n";
  }
  t << "|Omega| = " << omega.size() << ", |X/ZR| = " << expected << "\n";
  emit(o, "omega", c.R().type_string(), Json{{"order", omega.size()}, {"expected", expected}, {"ok", ok}, {"elements", elts}},
       t.str());
  return ok ? kPass : kCheckFailed;
}

int cmd_lengths(const Options& o, int max_length) {
  Context c(load_datum(o));
  const std::size_t bound = WeylGroup::default_bound();
  // Cayley graph of the Coxeter part, explored breadth first.
  std::map<AffWeylElt, int> dist{{c.G.identity(), 0}};
  std::queue<AffWeylElt> frontier;
  frontier.push(c.G.identity());
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_length) + 1, 0);
  std::size_t mismatches = 0;
  while (!frontier.empty()) {
    const AffWeylElt a = frontier.front();
    frontier.pop();
    const int d = dist.at(a);
    ++counts[static_cast<std::size_t>(d)];
    if (c.G.length(a) != d) ++mismatches;
    if (d == max_length) continue;
    for (std::size_t g = 0; g < c.G.num_generators(); ++g) {
      const AffWeylElt b = c.G.compose(a, c.G.generator(g));
      if (dist.emplace(b, d + 1).second) {
        if (dist.size() > bound) throw SizeError("length enumeration exceeds the element bound");
        frontier.push(b);
      }
    }
  }
  std::ostringstream t;
  for (std::size_t l = 0; l < counts.size(); ++l) t << "length " << l << ": " << counts[l] << "\n";
  t << "mismatches: " << mismatches << "\n";
  emit(o, "lengths", c.R().type_string(),
       Json{{"max_length", max_length}, {"counts", counts}, {"elements", dist.size()}, {"mismatches", mismatches}},
       t.str());
  return mismatches == 0 ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Hecke algebra, braid group and Kazhdan-Lusztig computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--type", o.type, "root datum, e.g. A2, B2, G2, A1xA1")->capture_default_str();
  app.add_option("--cartan", o.cartan_file, "JSON file with a Cartan matrix (overrides --type)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text", "csv"}))->capture_default_str();
  app.add_option("--shift-sign", o.shift_sign, "<j> acts as v^(sign*j)")->check(CLI::IsMember({-1, 1}))->capture_default_str();
  app.add_option("--convolution", o.order, "convolution order")->check(CLI::IsMember({"exchanged", "direct"}))->capture_default_str();

  int radius = -1, monomial_radius = 3;
  auto* relations = app.add_subcommand("relations", "verify the Bernstein presentation in the polynomial representation");
  relations->add_option("--radius", radius, "relation weight radius (default 2, 1 with a G2 factor)");
  relations->add_option("--monomial-radius", monomial_radius, "radius of the test monomials")->capture_default_str();

  std::vector<std::string> pair;
  std::string algo = "mu";
  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials of the finite Weyl group");
  kl->add_option("--pair", pair, "y w, e.g. s2 s2s1s3s2")->expected(2);
  kl->add_option("--algorithm", algo, "mu (recursion) or r (R-polynomials)")->check(CLI::IsMember({"mu", "r"}))->capture_default_str();

  std::vector<std::string> word;
  std::vector<int> twist_x, twist_y;
  auto* kernel = app.add_subcommand("kernel", "Hecke class of the kernel of a reduced word");
  kernel->add_option("word", word, "reduced word, e.g. \"s1 s2 s1\" (empty for the diagonal)");
  kernel->add_option("--x", twist_x, "left twist weight")->delimiter(',');
  kernel->add_option("--y", twist_y, "right twist weight")->delimiter(',');

  std::string elt_a, elt_b;
  auto* mul = app.add_subcommand("hecke-mul", "product of two Hecke elements (Bernstein words or JSON)");
  mul->add_option("a", elt_a)->required();
  mul->add_option("b", elt_b)->required();

  std::string elt, side = "left";
  int basis_radius = 2;
  auto* basis = app.add_subcommand("basis", "coordinates in a standard basis T_w theta_x or theta_x T_w");
  basis->add_option("element", elt, "Bernstein word or HeckeElt JSON")->required();
  basis->add_option("--side", side, "left: T_w theta_x, right: theta_x T_w")->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  basis->add_option("--radius", basis_radius, "window for theta_x")->capture_default_str();

  std::string kinput = "sl2-steinberg";
  int max_degree = 6;
  auto* koszul = app.add_subcommand("koszul", "Koszul homology of a polynomial sequence");
  koszul->add_option("input", kinput, "JSON file or sl2-steinberg")->capture_default_str();
  koszul->add_option("--max-degree", max_degree)->capture_default_str();

  auto* omega = app.add_subcommand("omega", "length-zero elements of the extended affine Weyl group");

  int max_length = 8;
  auto* lengths = app.add_subcommand("lengths", "length formula against Cayley graph distance");
  lengths->add_option("--max-length", max_length)->check(CLI::Range(0, 64))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*relations) return cmd_relations(o, radius, monomial_radius);
    if (*kl) return cmd_kl(o, pair, algo);
    if (*kernel) return cmd_kernel(o, word, twist_x, twist_y);
    if (*mul) return cmd_hecke_mul(o, elt_a, elt_b);
    if (*basis) return cmd_basis(o, elt, side, basis_radius);
    if (*koszul) return cmd_koszul(o, kinput, max_degree);
    if (*omega) return cmd_omega(o);
    if (*lengths) return cmd_lengths(o, max_length);
  } catch (const SizeError& e) {
    std::cerr << "error: resource bound: " << e.what() << "\n";
    return kResourceBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
