#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affhecke/braid.hpp"
#include "affhecke/errors.hpp"
#include "affhecke/laurent.hpp"

namespace affhecke {

/// Element of H_aff in the Iwahori-Matsumoto basis {T_a : a in W_aff}.
/// Carries the fingerprint of its root datum so that mixing algebras is
/// caught at run time.
class HeckeElt {
 public:
  using Terms = std::map<AffWeylElt, LaurentPoly>;

  HeckeElt() = default;
  explicit HeckeElt(std::uint64_t datum) : datum_(datum) {}

  std::uint64_t datum() const { return datum_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const AffWeylElt& a) const;

  /// Adds c T_a.
  void add(const AffWeylElt& a, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  HeckeElt operator-() const;
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h);

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.datum_ == b.datum_ && a.terms_ == b.terms_;
  }

 private:
  void check(const HeckeElt& o) const;

  std::uint64_t datum_ = 0;
  Terms terms_;
};

enum class Side { Left, Right };

/// Terms of (e^x - e^{s(x)}) / (1 - e^{-a}) for s = s_a the i-th simple
/// reflection, as (weight, +-1) pairs: a finite geometric sum, empty when
/// <x, a^vee> = 0.  Shared by the Bernstein commutation relation and the
/// Demazure-Lusztig operators.
std::vector<std::pair<Weight, int>> dl_quotient(const RootDatum& R, std::size_t i, const Weight& x);

/// Coordinates in a standard basis, keyed by (w, x):
///   Side::Left  -> T_w theta_x,
///   Side::Right -> theta_x T_w.
using StdCoords = std::map<std::pair<WeylElt, Weight>, LaurentPoly>;

/// The extended affine Hecke algebra of a root datum, with eigenvalues
/// (v, -v^{-1}) of T_s fixed by (T_s + v^{-1})(T_s - v) = 0.
///
/// Products use the Iwahori-Matsumoto rule
///   T_s T_a = T_{sa}                        if l(sa) > l(a),
///   T_s T_a = T_{sa} + (v - v^{-1}) T_a     otherwise,
///   T_omega T_a = T_{omega a}               for l(omega) = 0.
/// Decompositions and theta elements are memoised behind a mutex, so one
/// instance can be shared between threads.  The AffineWeylGroup must
/// outlive the algebra.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const AffineWeylGroup& G);

  const AffineWeylGroup& group() const { return *G_; }
  const WeylGroup& finite() const { return G_->finite(); }
  const RootDatum& datum() const { return G_->datum(); }

  HeckeElt zero() const { return HeckeElt(fingerprint_); }
  HeckeElt one() const { return basis(G_->identity()); }
  HeckeElt basis(const AffWeylElt& a) const;
  HeckeElt basis(WeylElt w) const { return basis(G_->from_finite(w)); }

  /// T_g for a generator g of S_aff (numbering as in AffineWeylGroup).
  HeckeElt T_gen(std::size_t g) const { return basis(G_->generator(g)); }
  /// T_g^{-1} = T_g - (v - v^{-1}).
  HeckeElt inv_T_gen(std::size_t g) const;
  /// T_a^{-1} for a basis element.
  HeckeElt T_inverse(const AffWeylElt& a) const;

  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  /// T_g h
  HeckeElt left_mul_gen(std::size_t g, const HeckeElt& h) const;
  /// T_g^{-1} h
  HeckeElt left_mul_inv_gen(std::size_t g, const HeckeElt& h) const;

  /// theta_x: T_{t_x} for dominant x, T_{t_y} T_{t_z}^{-1} for x = y - z.
  HeckeElt theta(const Weight& x) const;

  /// Evaluation of a Bernstein word.
  HeckeElt eval_word(const BraidWord& w) const;

  /// Expands h in the chosen standard basis by normal ordering the
  /// Bernstein word of each T_a with
  ///   theta_x T_s = T_s theta_{s(x)} + (v - v^{-1}) (theta_x - theta_{s(x)}) / (1 - theta_{-a}).
  /// Throws WindowError when a coordinate theta_x leaves |x_i| <= radius.
  StdCoords to_standard_basis(const HeckeElt& h, Side side, int radius) const;
  HeckeElt from_standard_basis(const StdCoords& c, Side side) const;
  /// T_w theta_x (Left) or theta_x T_w (Right).
  HeckeElt standard_element(WeylElt w, const Weight& x, Side side) const;

  /// Coefficientwise v = 1; lands in the group ring Z[W_aff].
  std::map<AffWeylElt, std::int64_t> specialize_v1(const HeckeElt& h) const;

  std::string to_string(const HeckeElt& h) const;
  /// Terms ordered by (length, element), the order used for output.
  std::vector<std::pair<AffWeylElt, LaurentPoly>> sorted_terms(const HeckeElt& h) const;

 private:
  const AffineWeylGroup::Decomposition& decomposition(const AffWeylElt& a) const;
  void check(const HeckeElt& h) const;

  const AffineWeylGroup* G_;
  std::uint64_t fingerprint_;
  mutable std::mutex mutex_;
  mutable std::map<AffWeylElt, AffineWeylGroup::Decomposition> decompositions_;
  mutable std::unordered_map<Weight, HeckeElt> thetas_;
};

}  // namespace affhecke
