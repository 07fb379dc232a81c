#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "affhecke/affine.hpp"

namespace affhecke {

/// One letter of the Bernstein alphabet of B_aff: T_s^{±1} for a finite
/// simple reflection s, or theta_x for a weight x.
struct BraidToken {
  enum class Kind { T, Theta };
  Kind kind = Kind::T;
  std::size_t s = 0;  ///< 0-based simple reflection (Kind::T)
  int exponent = 1;   ///< +1 or -1 (Kind::T)
  Weight x;           ///< weight (Kind::Theta)

  static BraidToken T(std::size_t s, int exponent = 1) { return {Kind::T, s, exponent, {}}; }
  static BraidToken theta(const Weight& x) { return {Kind::Theta, 0, 1, x}; }

  friend bool operator==(const BraidToken&, const BraidToken&) = default;
};

/// A word in the Bernstein generators.  Words are not normalised: equality
/// of braid group elements is only tested after evaluation in H_aff or in
/// the polynomial representation.
struct BraidWord {
  std::vector<BraidToken> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  BraidWord& operator*=(const BraidWord& o) {
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
  }
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  /// Formal inverse: reversed, with T_s^{±1} -> T_s^{∓1} and theta_x -> theta_{-x}.
  BraidWord inverse() const;

  /// e.g. "T1 T2^-1 theta(1,0)"; "1" for the empty word.
  std::string to_string() const;
};

/// Parses the to_string() syntax back into a word.
BraidWord parse_braid_word(std::string_view text, std::size_t rank);

/// Word for T_a built from a reduced decomposition a = s_1 ... s_n omega:
/// T_{s_0} = theta_phi T_{s_phi}^{-1} for an affine reflection, and
/// T_omega = T_w theta_x for omega = w t_x.
BraidWord lift_Tw(const AffineWeylGroup& G, const AffWeylElt& a);

/// Section of a finite Weyl element along its canonical reduced word.
BraidWord lift_finite(const WeylGroup& W, WeylElt w);

/// theta_x expressed through the section: lift(t_x) for dominant x and
/// lift(t_y) lift(t_z)^{-1} for x = y - z, y = max(x, 0), z = max(-x, 0).
BraidWord bernstein_theta(const AffineWeylGroup& G, const Weight& x);

/// Monoid morphism T_s^{±1} -> s, theta_x -> t_x.
AffWeylElt project_to_Waff(const AffineWeylGroup& G, const BraidWord& w);

/// Order m of s_i s_j in W, from the product of Cartan entries.
int braid_order(const RootDatum& R, std::size_t i, std::size_t j);

enum class RelationTag { I, II, III, IV };
std::string to_string(RelationTag tag);

struct RelationInstance {
  BraidWord lhs, rhs;
  RelationTag tag;
  std::string description;
};

/// Finite instantiation of the Bernstein relations:
///  (i)   T_s T_t ... = T_t T_s ...        (m_{st} letters per side)
///  (ii)  theta_x theta_y = theta_{x+y}
///  (iii) T_s theta_x = theta_x T_s         if s(x) = x
///  (iv)  theta_x = T_s theta_{x-a} T_s      if s = s_a and s(x) = x - a
/// with x, y ranging over the box |<x, a_i^vee>| <= radius.
std::vector<RelationInstance> relation_instances(const RootDatum& R, int radius);

}  // namespace affhecke
