#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "affhecke/weyl.hpp"

namespace affhecke {

/// The element fin * t_trans of the extended affine Weyl group W ⋉ X.
///
/// Conventions: t_x t_y = t_{x+y}, w t_x w^{-1} = t_{w(x)}, hence
/// (w1, x1)(w2, x2) = (w1 w2, w2^{-1}(x1) + x2).
struct AffWeylElt {
  WeylElt fin;
  Weight trans;
  friend auto operator<=>(const AffWeylElt&, const AffWeylElt&) = default;
  friend bool operator==(const AffWeylElt&, const AffWeylElt&) = default;
};

/// Extended affine Weyl group W_aff = W ⋉ X together with the Coxeter
/// generators S_aff of W_aff^Cox = W ⋉ ZR.
///
/// Generators are numbered 0..rank-1 for the finite simple reflections and
/// rank + c for the affine reflection s_0 = t_phi s_phi of simple factor c,
/// where phi^vee is the highest coroot (phi is the highest short root).  The referenced WeylGroup must outlive
/// this object.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(const WeylGroup& finite);

  const WeylGroup& finite() const { return *finite_; }
  const RootDatum& datum() const { return finite_->datum(); }
  std::size_t rank() const { return datum().rank(); }

  AffWeylElt identity() const { return {finite_->identity(), Weight(rank())}; }
  AffWeylElt translation(const Weight& x) const { return {finite_->identity(), x}; }
  AffWeylElt from_finite(WeylElt w) const { return {w, Weight(rank())}; }

  AffWeylElt compose(const AffWeylElt& a, const AffWeylElt& b) const;
  AffWeylElt inverse(const AffWeylElt& a) const;

  /// Iwahori-Matsumoto length
  ///   sum_{a>0, w(a)>0} |<x, a^vee>| + sum_{a>0, w(a)<0} |<x, a^vee> + 1|.
  int length(const AffWeylElt& a) const;

  std::size_t num_generators() const { return gens_.size(); }
  const AffWeylElt& generator(std::size_t g) const { return gens_[g]; }
  bool is_affine_generator(std::size_t g) const { return g >= rank(); }
  /// Simple factor an affine generator belongs to.
  std::size_t generator_component(std::size_t g) const { return g - rank(); }
  /// The root phi of simple factor c used by s_0 (weight coordinates).
  const Weight& affine_root(std::size_t c) const {
    return datum().positive_roots()[datum().components()[c].highest_short_root];
  }
  /// The finite Weyl element s_phi for factor c.
  WeylElt highest_reflection(std::size_t c) const { return theta_reflections_[c]; }

  /// a = s_{g_1} ... s_{g_k} * omega with k = length(a) and length(omega) = 0.
  struct Decomposition {
    std::vector<std::size_t> gens;
    AffWeylElt omega;
  };
  Decomposition decompose(const AffWeylElt& a) const;

  /// One length-zero element per class of X / ZR, sorted.
  std::vector<AffWeylElt> omega_elements() const;

  /// True iff the translation part lies in ZR (a in W_aff^Cox).
  bool in_coxeter_part(const AffWeylElt& a) const { return datum().in_root_lattice(a.trans); }

  std::string to_string(const AffWeylElt& a) const;

 private:
  const WeylGroup* finite_;
  std::vector<AffWeylElt> gens_;
  std::vector<WeylElt> theta_reflections_;
};

}  // namespace affhecke
