#include "affhecke/polyrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace affhecke {

CharFunc CharFunc::monomial(const Weight& x, const LaurentPoly& c) {
  CharFunc f;
  f.add(x, c);
  return f;
}

LaurentPoly CharFunc::coeff(const Weight& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void CharFunc::add(const Weight& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CharFunc& CharFunc::operator+=(const CharFunc& o) {
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

CharFunc& CharFunc::operator-=(const CharFunc& o) {
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

CharFunc operator*(const LaurentPoly& c, const CharFunc& f) {
  CharFunc r;
  if (c.is_zero()) return r;
  for (const auto& [x, a] : f.terms_) r.terms_.emplace(x, c * a);
  return r;
}

std::string CharFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [x, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")e^" + x.to_string();
  }
  return s;
}

CharFunc dl_T(const RootDatum& R, std::size_t i, const CharFunc& f) {
  if (i >= R.rank()) throw std::invalid_argument("dl_T: simple reflection out of range");
  const LaurentPoly q = LaurentPoly::v_minus_v_inv();
  CharFunc r;
  for (const auto& [x, c] : f.terms()) {
    r.add(R.reflect(i, x), LaurentPoly::v() * c);
    const LaurentPoly qc = q * c;
    for (const auto& [y, m] : dl_quotient(R, i, x)) r.add(y, m > 0 ? qc : -qc);
  }
  return r;
}

CharFunc dl_T_inv(const RootDatum& R, std::size_t i, const CharFunc& f) {
  return dl_T(R, i, f) - LaurentPoly::v_minus_v_inv() * f;
}

CharFunc theta_mult(const Weight& x, const CharFunc& f) {
  CharFunc r;
  for (const auto& [y, c] : f.terms()) r.add(x + y, c);
  return r;
}

CharFunc act(const RootDatum& R, const BraidWord& w, const CharFunc& f) {
  CharFunc r = f;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->kind == BraidToken::Kind::T)
      r = it->exponent > 0 ? dl_T(R, it->s, r) : dl_T_inv(R, it->s, r);
    else
      r = theta_mult(it->x, r);
  }
  return r;
}

CharFunc act(const HeckeAlgebra& H, const HeckeElt& h, const CharFunc& f) {
  CharFunc r;
  for (const auto& [a, c] : h.terms()) r += c * act(H.datum(), lift_Tw(H.group(), a), f);
  return r;
}

bool PresentationReport::all_passed() const { return failures() == 0; }

std::size_t PresentationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

PresentationReport verify_presentation(const RootDatum& R, int relation_radius, int monomial_radius) {
  if (monomial_radius < 0) throw std::invalid_argument("verify_presentation: negative monomial radius");
  PresentationReport rep;
  rep.type = R.type_string();
  rep.relation_radius = relation_radius;
  rep.monomial_radius = monomial_radius;
  const auto mus = weight_box(R.rank(), monomial_radius);
  rep.monomials = mus.size();
  for (const auto& inst : relation_instances(R, relation_radius)) {
    RelationCheck chk;
    chk.tag = inst.tag;
    chk.description = inst.description;
    for (const auto& mu : mus) {
      const CharFunc e = CharFunc::monomial(mu);
      CharFunc l = act(R, inst.lhs, e), r = act(R, inst.rhs, e);
      if (!(l == r)) {
        chk.passed = false;
        chk.mu = mu;
        chk.lhs_image = std::move(l);
        chk.rhs_image = std::move(r);
        break;
      }
    }
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

LeadingTerm dl_leading_term(const RootDatum& R, std::size_t i, const Weight& lambda, LeadingMode mode) {
  LeadingTerm lt;
  lt.lambda = lambda;
  lt.s = i;
  lt.pairing = lambda[i];
  lt.inverse_used = mode == LeadingMode::Lemma && lt.pairing > 0;
  lt.target = R.reflect(i, lambda);

  const CharFunc e = CharFunc::monomial(lambda);
  const CharFunc img = lt.inverse_used ? dl_T_inv(R, i, e) : dl_T(R, i, e);
  const auto [conv, conv0] = R.conv_hull_weights(lambda);
  lt.support_in_conv = std::all_of(img.terms().begin(), img.terms().end(), [&](const auto& t) {
    return std::binary_search(conv.begin(), conv.end(), t.first);
  });
  for (const auto& [x, c] : img.terms())
    if (!std::binary_search(conv0.begin(), conv0.end(), x)) lt.residue.add(x, c);
  const auto& res = lt.residue.terms();
  lt.single_monomial = res.size() == 1 && res.begin()->first == lt.target && res.begin()->second.is_monomial();
  lt.coefficient = lt.residue.coeff(lt.target);
  return lt;
}

}  // namespace affhecke
