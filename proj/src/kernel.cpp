#include "affhecke/kernel.hpp"

#include <algorithm>

#include "affhecke/linalg.hpp"

namespace affhecke {

std::map<std::string, std::string> Conventions::describe() const {
  return {
      {"eigenvalues", "(T_s + v^-1)(T_s - v) = 0"},
      {"shift", shift_sign < 0 ? "<j> -> v^-j" : "<j> -> v^j"},
      {"convolution", order == ConvolutionOrder::Exchanged ? "exchanged: [A*B] = [B][A]"
                                                           : "direct: [A*B] = [A][B]"},
      {"kernel", "[O_{Z_w}(x,y)] = theta_x (-v)^l(w) T_{w^-1} theta_y"},
      {"semidirect", "w t_x with (w1,x1)(w2,x2) = (w1 w2, w2^-1(x1) + x2)"},
      {"affine_reflection", "s0 = t_phi s_phi, phi^vee the highest coroot"},
  };
}

KernelClass kernel_class(const HeckeAlgebra& H, WeylElt w, const Weight& x, const Weight& y) {
  const WeylGroup& W = H.finite();
  HeckeElt core = neg_v_power(W.length(w)) * H.basis(W.inverse(w));
  HeckeElt value = core;
  if (!x.is_zero()) value = H.mul(H.theta(x), value);
  if (!y.is_zero()) value = H.mul(value, H.theta(y));
  return {w, x, y, std::move(value)};
}

KernelClass kernel_class(const HeckeAlgebra& H, WeylElt w) {
  const Weight zero(H.datum().rank());
  return kernel_class(H, w, zero, zero);
}

HeckeElt convolve(const HeckeAlgebra& H, const HeckeElt& a, const HeckeElt& b, const Conventions& conv) {
  return conv.order == ConvolutionOrder::Exchanged ? H.mul(b, a) : H.mul(a, b);
}

HeckeElt convolve(const HeckeAlgebra& H, const KernelClass& a, const KernelClass& b,
                  const Conventions& conv) {
  return convolve(H, a.value, b.value, conv);
}

bool ConvolutionReport::all_passed() const {
  return std::all_of(words.begin(), words.end(),
                     [](const auto& c) { return c.convolution_matches && c.product_matches; });
}

ConvolutionReport verify_reduced_word_convolution(const HeckeAlgebra& H, WeylElt w,
                                                  const Conventions& conv) {
  const WeylGroup& W = H.finite();
  ConvolutionReport rep;
  rep.w = w;
  rep.expected = kernel_class(H, w).value;
  // Under the direct order the iterated convolution gives the class of Z_{w^{-1}}.
  const HeckeElt conv_target =
      conv.order == ConvolutionOrder::Exchanged ? rep.expected : kernel_class(H, W.inverse(w)).value;
  const HeckeElt product_target = kernel_class(H, W.inverse(w)).value;
  for (const Word& word : W.reduced_words(w)) {
    WordCheck chk;
    chk.word = word;
    HeckeElt acc = H.one();
    HeckeElt prod = H.one();
    for (std::size_t s : word) {
      acc = convolve(H, acc, kernel_class(H, W.simple(s)).value, conv);
      prod = H.mul(prod, H.T_gen(s));
    }
    chk.convolution_matches = acc == conv_target;
    chk.product_matches = neg_v_power(static_cast<int>(word.size())) * prod == product_target;
    rep.words.push_back(std::move(chk));
  }
  return rep;
}

GroupAlgebraElt bm_class(WeylElt w) { return {{w, 1}}; }

GroupAlgebraElt bm_compose(const WeylGroup& W, const GroupAlgebraElt& a, const GroupAlgebraElt& b,
                           const Conventions& conv) {
  const bool exchanged = conv.order == ConvolutionOrder::Exchanged;
  GroupAlgebraElt out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      const WeylElt p = exchanged ? W.mul(y, x) : W.mul(x, y);
      auto& slot = out[p];
      slot += cx * cy;
      if (slot == 0) out.erase(p);
    }
  return out;
}

std::vector<HeckeElt> twisted_family(const HeckeAlgebra& H, Side side, int radius) {
  const WeylGroup& W = H.finite();
  const Weight zero(H.datum().rank());
  std::vector<HeckeElt> out;
  for (std::size_t i = 0; i < W.size(); ++i) {
    const WeylElt wi = W.inverse(W.element(i));
    for (const auto& x : weight_box(H.datum().rank(), radius))
      out.push_back(side == Side::Right ? kernel_class(H, wi, x, zero).value
                                        : kernel_class(H, wi, zero, x).value);
  }
  return out;
}

RankResult rank_over_Qv(const std::vector<HeckeElt>& family) {
  RankResult res;
  res.size = family.size();
  std::map<AffWeylElt, std::size_t> columns;
  for (const auto& h : family)
    for (const auto& [a, c] : h.terms()) columns.emplace(a, columns.size());
  for (long t : {2L, 3L, 5L, 7L}) {
    RankAccumulator acc;
    for (const auto& h : family) {
      SparseRow row;
      for (const auto& [a, c] : h.terms()) {
        mpq_class val = 0;
        for (const auto& [e, k] : c.terms()) {
          mpz_class p;
          mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(e < 0 ? -e : e));
          if (e >= 0) {
            val += mpq_class(p * k);
          } else {
            mpq_class frac(mpz_class(k), p);
            frac.canonicalize();
            val += frac;
          }
        }
        if (val != 0) row.emplace(columns.at(a), val);
      }
      acc.add(std::move(row));
    }
    if (acc.rank() > res.rank_lower_bound) {
      res.rank_lower_bound = acc.rank();
      res.specialised_at = t;
    }
    if (res.independent()) break;
  }
  return res;
}

}  // namespace affhecke
