#include "affhecke/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace affhecke {

LaurentPoly HeckeElt::coeff(const AffWeylElt& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(const AffWeylElt& a, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void HeckeElt::check(const HeckeElt& o) const {
  if (datum_ != o.datum_) throw std::invalid_argument("Hecke elements over different root data");
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  check(o);
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  check(o);
  for (const auto& [a, c] : o.terms_) add(a, -c);
  return *this;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt r(datum_);
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
  return r;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h) {
  HeckeElt r(h.datum_);
  if (c.is_zero()) return r;
  for (const auto& [a, x] : h.terms_) r.terms_.emplace(a, c * x);
  return r;
}

HeckeAlgebra::HeckeAlgebra(const AffineWeylGroup& G)
    : G_(&G), fingerprint_(G.datum().fingerprint()) {}

void HeckeAlgebra::check(const HeckeElt& h) const {
  if (h.datum() != fingerprint_)
    throw std::invalid_argument("Hecke element does not belong to this algebra");
}

HeckeElt HeckeAlgebra::basis(const AffWeylElt& a) const {
  if (a.trans.rank() != datum().rank()) throw std::invalid_argument("element of the wrong rank");
  HeckeElt h(fingerprint_);
  h.add(a, 1);
  return h;
}

const AffineWeylGroup::Decomposition& HeckeAlgebra::decomposition(const AffWeylElt& a) const {
  {
    std::lock_guard lock(mutex_);
    auto it = decompositions_.find(a);
    if (it != decompositions_.end()) return it->second;
  }
  auto d = G_->decompose(a);
  std::lock_guard lock(mutex_);
  return decompositions_.try_emplace(a, std::move(d)).first->second;
}

HeckeElt HeckeAlgebra::left_mul_gen(std::size_t g, const HeckeElt& h) const {
  check(h);
  const AffWeylElt& s = G_->generator(g);
  const LaurentPoly q = LaurentPoly::v_minus_v_inv();
  HeckeElt r(fingerprint_);
  for (const auto& [a, c] : h.terms()) {
    AffWeylElt sa = G_->compose(s, a);
    r.add(sa, c);
    if (G_->length(sa) < G_->length(a)) r.add(a, q * c);
  }
  return r;
}

HeckeElt HeckeAlgebra::left_mul_inv_gen(std::size_t g, const HeckeElt& h) const {
  return left_mul_gen(g, h) - LaurentPoly::v_minus_v_inv() * h;
}

HeckeElt HeckeAlgebra::inv_T_gen(std::size_t g) const { return left_mul_inv_gen(g, one()); }

HeckeElt HeckeAlgebra::T_inverse(const AffWeylElt& a) const {
  // T_a = T_{g_1} ... T_{g_k} T_omega, so T_a^{-1} = T_{omega^{-1}} T_{g_k}^{-1} ... T_{g_1}^{-1}.
  const auto& d = decomposition(a);
  HeckeElt h = one();
  for (std::size_t g : d.gens) h = left_mul_inv_gen(g, h);
  const AffWeylElt om_inv = G_->inverse(d.omega);
  HeckeElt r(fingerprint_);
  for (const auto& [b, c] : h.terms()) r.add(G_->compose(om_inv, b), c);
  return r;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  check(a);
  check(b);
  HeckeElt out(fingerprint_);
  for (const auto& [x, cx] : a.terms()) {
    const auto& d = decomposition(x);
    HeckeElt h(fingerprint_);
    for (const auto& [y, cy] : b.terms()) h.add(G_->compose(d.omega, y), cy);
    for (auto it = d.gens.rbegin(); it != d.gens.rend(); ++it) h = left_mul_gen(*it, h);
    out += cx * h;
  }
  return out;
}

HeckeElt HeckeAlgebra::theta(const Weight& x) const {
  if (x.rank() != datum().rank()) throw std::invalid_argument("theta: weight of the wrong rank");
  {
    std::lock_guard lock(mutex_);
    auto it = thetas_.find(x);
    if (it != thetas_.end()) return it->second;
  }
  HeckeElt r;
  if (x.is_dominant()) {
    r = basis(G_->translation(x));
  } else {
    Weight y(x.rank()), z(x.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) {
      y[i] = std::max(x[i], 0);
      z[i] = std::max(-x[i], 0);
    }
    r = mul(basis(G_->translation(y)), T_inverse(G_->translation(z)));
  }
  std::lock_guard lock(mutex_);
  return thetas_.try_emplace(x, std::move(r)).first->second;
}

HeckeElt HeckeAlgebra::eval_word(const BraidWord& w) const {
  HeckeElt h = one();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->kind == BraidToken::Kind::T) {
      if (it->s >= datum().rank()) throw std::invalid_argument("braid letter index out of range");
      h = it->exponent > 0 ? left_mul_gen(it->s, h) : left_mul_inv_gen(it->s, h);
    } else {
      h = mul(theta(it->x), h);
    }
  }
  return h;
}

HeckeElt HeckeAlgebra::standard_element(WeylElt w, const Weight& x, Side side) const {
  return side == Side::Left ? mul(basis(w), theta(x)) : mul(theta(x), basis(w));
}

std::vector<std::pair<Weight, int>> dl_quotient(const RootDatum& R, std::size_t i, const Weight& x) {
  const Weight& a = R.simple_roots()[i];
  const int k = x[i];
  std::vector<std::pair<Weight, int>> out;
  if (k > 0) {
    Weight y = x;
    for (int j = 0; j < k; ++j, y -= a) out.emplace_back(y, 1);
  } else if (k < 0) {
    Weight y = x;
    for (int j = 0; j < -k; ++j) {
      y += a;
      out.emplace_back(y, -1);
    }
  }
  return out;
}

namespace {

// Sum of T_w theta_x (Left) or theta_x T_w (Right) with finite w.
using Ordered = std::map<std::pair<WeylElt, Weight>, LaurentPoly>;

void add_to(Ordered& f, WeylElt w, const Weight& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.try_emplace({w, x}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) f.erase(it);
}

}  // namespace

StdCoords HeckeAlgebra::to_standard_basis(const HeckeElt& h, Side side, int radius) const {
  check(h);
  const WeylGroup& W = finite();
  const RootDatum& R = datum();
  const LaurentPoly q = LaurentPoly::v_minus_v_inv();

  // Finite Hecke product T_w T_s (Left) or T_s T_w (Right).
  auto finite_step = [&](Ordered& out, WeylElt w, std::size_t s, const Weight& x, const LaurentPoly& c) {
    WeylElt ws = side == Side::Left ? W.right_mul(w, s) : W.left_mul(s, w);
    add_to(out, ws, x, c);
    if (W.length(ws) < W.length(w)) add_to(out, w, x, q * c);
  };
  // Left: F * T_s^{e}, using theta_x T_s = T_s theta_{sx} + (v - v^{-1}) quot(x).
  // Right: T_s^{e} * F, using T_s theta_x = theta_{sx} T_s + (v - v^{-1}) quot(x).
  auto apply_T = [&](const Ordered& f, std::size_t s, int e) {
    Ordered out;
    for (const auto& [key, c] : f) {
      const auto& [w, x] = key;
      finite_step(out, w, s, R.reflect(s, x), c);
      for (const auto& [y, m] : dl_quotient(R, s, x)) add_to(out, w, y, q * c * LaurentPoly(m));
      if (e < 0) add_to(out, w, x, -(q * c));
    }
    return out;
  };

  StdCoords result;
  for (const auto& [a, c] : h.terms()) {
    const BraidWord word = lift_Tw(*G_, a);
    Ordered f;
    f.emplace(std::pair{W.identity(), Weight(R.rank())}, LaurentPoly(1));
    auto step = [&](const BraidToken& t) {
      if (t.kind == BraidToken::Kind::T) {
        f = apply_T(f, t.s, t.exponent);
      } else {
        Ordered g;
        for (const auto& [key, cc] : f) add_to(g, key.first, key.second + t.x, cc);
        f = std::move(g);
      }
    };
    if (side == Side::Left)
      for (const auto& t : word.letters) step(t);
    else
      for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) step(*it);
    for (const auto& [key, cc] : f) {
      auto [it, inserted] = result.try_emplace(key, c * cc);
      if (!inserted) {
        it->second += c * cc;
        if (it->second.is_zero()) result.erase(it);
      }
    }
  }
  for (const auto& [key, cc] : result)
    for (std::size_t i = 0; i < R.rank(); ++i)
      if (key.second[i] > radius || key.second[i] < -radius)
        throw WindowError("standard basis coordinate theta" + key.second.to_string() +
                          " lies outside the radius-" + std::to_string(radius) + " window");
  return result;
}

HeckeElt HeckeAlgebra::from_standard_basis(const StdCoords& c, Side side) const {
  HeckeElt h = zero();
  for (const auto& [key, coeff] : c) h += coeff * standard_element(key.first, key.second, side);
  return h;
}

std::map<AffWeylElt, std::int64_t> HeckeAlgebra::specialize_v1(const HeckeElt& h) const {
  check(h);
  std::map<AffWeylElt, std::int64_t> out;
  for (const auto& [a, c] : h.terms()) {
    std::int64_t x = c.at_one();
    if (x != 0) out[a] = x;
  }
  return out;
}

std::vector<std::pair<AffWeylElt, LaurentPoly>> HeckeAlgebra::sorted_terms(const HeckeElt& h) const {
  std::vector<std::pair<AffWeylElt, LaurentPoly>> v(h.terms().begin(), h.terms().end());
  std::stable_sort(v.begin(), v.end(), [&](const auto& p, const auto& q) {
    return G_->length(p.first) < G_->length(q.first);
  });
  return v;
}

std::string HeckeAlgebra::to_string(const HeckeElt& h) const {
  if (h.is_zero()) return "0";
  std::string s;
  for (const auto& [a, c] : sorted_terms(h)) {
    if (!s.empty()) s += " + ";
    std::string label = a.trans.is_zero() ? finite().label(a.fin) : G_->to_string(a);
    s += "(" + c.to_string() + ")T[" + label + "]";
  }
  return s;
}

}  // namespace affhecke
