#include "affhecke/braid.hpp"

#include <cctype>
#include <stdexcept>

namespace affhecke {

BraidWord BraidWord::inverse() const {
  BraidWord r;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    BraidToken t = *it;
    if (t.kind == BraidToken::Kind::T) t.exponent = -t.exponent;
    else t.x = -t.x;
    r.letters.push_back(t);
  }
  return r;
}

std::string BraidWord::to_string() const {
  if (letters.empty()) return "1";
  std::string s;
  for (const auto& t : letters) {
    if (!s.empty()) s += " ";
    if (t.kind == BraidToken::Kind::T) {
      s += "T" + std::to_string(t.s + 1);
      if (t.exponent != 1) s += "^" + std::to_string(t.exponent);
    } else {
      s += "theta" + t.x.to_string();
    }
  }
  return s;
}

BraidWord parse_braid_word(std::string_view text, std::size_t rank) {
  BraidWord w;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse braid word '" + std::string(text) + "': " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
      ++pos;
  };
  auto read_int = [&]() -> long {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected an integer");
    return std::stol(std::string(text.substr(start, pos - start)));
  };
  skip();
  if (text.substr(pos) == "1") return w;
  while (pos < text.size()) {
    if (text[pos] == 'T') {
      ++pos;
      long s = read_int();
      if (s < 1 || static_cast<std::size_t>(s) > rank) fail("generator index out of range");
      int e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        long ee = read_int();
        if (ee != 1 && ee != -1) fail("exponent must be 1 or -1");
        e = static_cast<int>(ee);
      }
      w.letters.push_back(BraidToken::T(static_cast<std::size_t>(s - 1), e));
    } else if (text.substr(pos, 5) == "theta") {
      pos += 5;
      if (pos >= text.size() || (text[pos] != '(' && text[pos] != '['))
        fail("expected '(' after theta");
      const char close = text[pos] == '(' ? ')' : ']';
      ++pos;
      std::vector<int> coords;
      while (true) {
        skip();
        coords.push_back(static_cast<int>(read_int()));
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == close) {
          ++pos;
          break;
        }
        fail("unterminated weight");
      }
      if (coords.size() != rank) fail("weight has the wrong number of coordinates");
      w.letters.push_back(BraidToken::theta(Weight(std::span<const int>(coords))));
    } else {
      fail("unexpected character");
    }
    skip();
  }
  return w;
}

BraidWord lift_finite(const WeylGroup& W, WeylElt w) {
  BraidWord out;
  for (std::size_t i : W.reduced_word(w)) out.letters.push_back(BraidToken::T(i));
  return out;
}

BraidWord lift_Tw(const AffineWeylGroup& G, const AffWeylElt& a) {
  const WeylGroup& W = G.finite();
  auto dec = G.decompose(a);
  BraidWord out;
  for (std::size_t g : dec.gens) {
    if (!G.is_affine_generator(g)) {
      out.letters.push_back(BraidToken::T(g));
      continue;
    }
    // t_phi = s_0 s_phi with lengths adding, and T_{t_phi} = theta_phi.
    const std::size_t c = G.generator_component(g);
    out.letters.push_back(BraidToken::theta(G.affine_root(c)));
    out *= lift_finite(W, G.highest_reflection(c)).inverse();
  }
  out *= lift_finite(W, dec.omega.fin);
  if (!dec.omega.trans.is_zero()) out.letters.push_back(BraidToken::theta(dec.omega.trans));
  return out;
}

BraidWord bernstein_theta(const AffineWeylGroup& G, const Weight& x) {
  if (x.is_dominant()) return lift_Tw(G, G.translation(x));
  Weight y(x.rank()), z(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i) {
    y[i] = x[i] > 0 ? x[i] : 0;
    z[i] = x[i] < 0 ? -x[i] : 0;
  }
  BraidWord out = lift_Tw(G, G.translation(y));
  out *= lift_Tw(G, G.translation(z)).inverse();
  return out;
}

AffWeylElt project_to_Waff(const AffineWeylGroup& G, const BraidWord& w) {
  AffWeylElt cur = G.identity();
  for (const auto& t : w.letters) {
    if (t.kind == BraidToken::Kind::T) {
      if (t.s >= G.rank()) throw std::invalid_argument("braid letter index out of range");
      cur = G.compose(cur, G.generator(t.s));
    } else {
      if (t.x.rank() != G.rank()) throw std::invalid_argument("theta weight has wrong rank");
      cur = G.compose(cur, G.translation(t.x));
    }
  }
  return cur;
}

int braid_order(const RootDatum& R, std::size_t i, std::size_t j) {
  if (i == j) return 1;
  switch (R.cartan()(i, j) * R.cartan()(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::logic_error("Cartan product outside {0,1,2,3}");
  }
}

std::string to_string(RelationTag tag) {
  switch (tag) {
    case RelationTag::I: return "i";
    case RelationTag::II: return "ii";
    case RelationTag::III: return "iii";
    case RelationTag::IV: return "iv";
  }
  return "?";
}

std::vector<RelationInstance> relation_instances(const RootDatum& R, int radius) {
  if (radius < 1) throw std::invalid_argument("relation_instances: radius must be >= 1");
  const std::size_t n = R.rank();
  std::vector<RelationInstance> out;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int m = braid_order(R, i, j);
      RelationInstance inst;
      inst.tag = RelationTag::I;
      for (int k = 0; k < m; ++k) {
        inst.lhs.letters.push_back(BraidToken::T(k % 2 == 0 ? i : j));
        inst.rhs.letters.push_back(BraidToken::T(k % 2 == 0 ? j : i));
      }
      inst.description = "braid(s" + std::to_string(i + 1) + ",s" + std::to_string(j + 1) +
                         ",m=" + std::to_string(m) + ")";
      out.push_back(std::move(inst));
    }

  const auto box = weight_box(n, radius);
  for (const auto& x : box)
    for (const auto& y : box) {
      RelationInstance inst;
      inst.tag = RelationTag::II;
      inst.lhs.letters = {BraidToken::theta(x), BraidToken::theta(y)};
      inst.rhs.letters = {BraidToken::theta(x + y)};
      inst.description = "theta" + x.to_string() + " theta" + y.to_string();
      out.push_back(std::move(inst));
    }

  for (std::size_t i = 0; i < n; ++i)
    for (const auto& x : box) {
      if (x[i] == 0) {
        RelationInstance inst;
        inst.tag = RelationTag::III;
        inst.lhs.letters = {BraidToken::T(i), BraidToken::theta(x)};
        inst.rhs.letters = {BraidToken::theta(x), BraidToken::T(i)};
        inst.description = "s" + std::to_string(i + 1) + " fixes " + x.to_string();
        out.push_back(std::move(inst));
      } else if (x[i] == 1) {
        RelationInstance inst;
        inst.tag = RelationTag::IV;
        inst.lhs.letters = {BraidToken::theta(x)};
        inst.rhs.letters = {BraidToken::T(i), BraidToken::theta(x - R.simple_roots()[i]),
                            BraidToken::T(i)};
        inst.description = "s" + std::to_string(i + 1) + " sends " + x.to_string() + " to x-a";
        out.push_back(std::move(inst));
      }
    }
  return out;
}

}  // namespace affhecke
