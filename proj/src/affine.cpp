#include "affhecke/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace affhecke {

AffineWeylGroup::AffineWeylGroup(const WeylGroup& finite) : finite_(&finite) {
  const RootDatum& R = datum();
  for (std::size_t i = 0; i < R.rank(); ++i) gens_.push_back(from_finite(finite.simple(i)));
  for (std::size_t c = 0; c < R.components().size(); ++c) {
    const std::size_t k = R.components()[c].highest_short_root;
    auto s_theta = finite.from_rho_image(R.reflect_root(k, R.rho()));
    if (!s_theta) throw std::logic_error("reflection in the highest short root not found in W");
    theta_reflections_.push_back(*s_theta);
    // s_0 = t_phi s_phi = s_phi t_{-phi}: the affine wall <x, phi^vee> = 1
    // with phi^vee the highest coroot.
    gens_.push_back({*s_theta, -R.positive_roots()[k]});
  }
}

AffWeylElt AffineWeylGroup::compose(const AffWeylElt& a, const AffWeylElt& b) const {
  const WeylGroup& W = *finite_;
  return {W.mul(a.fin, b.fin), W.apply(W.inverse(b.fin), a.trans) + b.trans};
}

AffWeylElt AffineWeylGroup::inverse(const AffWeylElt& a) const {
  // (w t_x)^{-1} = t_{-x} w^{-1} = w^{-1} t_{-w(x)}
  const WeylGroup& W = *finite_;
  return {W.inverse(a.fin), -W.apply(a.fin, a.trans)};
}

int AffineWeylGroup::length(const AffWeylElt& a) const {
  const auto& coroots = datum().positive_coroots();
  long len = 0;
  for (std::size_t k = 0; k < coroots.size(); ++k) {
    long p = a.trans.dot(coroots[k]);
    len += finite_->inverts(a.fin, k) ? std::labs(p + 1) : std::labs(p);
  }
  return static_cast<int>(len);
}

AffineWeylGroup::Decomposition AffineWeylGroup::decompose(const AffWeylElt& a) const {
  Decomposition d;
  AffWeylElt cur = a;
  int len = length(cur);
  while (len > 0) {
    bool found = false;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      AffWeylElt next = compose(gens_[g], cur);
      int l = length(next);
      if (l < len) {
        d.gens.push_back(g);
        cur = next;
        len = l;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no descent found for an element of positive length");
  }
  d.omega = cur;
  return d;
}

std::vector<AffWeylElt> AffineWeylGroup::omega_elements() const {
  const RootDatum& R = datum();
  const std::size_t n = R.rank();
  std::vector<AffWeylElt> out;
  // A length-zero element w t_x needs <x, a^vee> in {0, -1} for every
  // positive root, with w inverting exactly the roots where it is -1.
  const std::size_t combos = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < combos; ++mask) {
    Weight x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i & 1u) ? -1 : 0;
    bool admissible = true;
    for (const auto& cv : R.positive_coroots()) {
      long p = x.dot(cv);
      if (p != 0 && p != -1) {
        admissible = false;
        break;
      }
    }
    if (!admissible) continue;
    for (std::size_t w = 0; w < finite_->size(); ++w) {
      AffWeylElt cand{finite_->element(w), x};
      if (length(cand) == 0) {
        out.push_back(cand);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string AffineWeylGroup::to_string(const AffWeylElt& a) const {
  return finite_->label(a.fin) + "*t" + a.trans.to_string();
}

}  // namespace affhecke
