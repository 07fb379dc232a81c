#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affhecke/hecke.hpp"

namespace affhecke {

/// Element sum_x c_x(v) e^x of Z[v, v^{-1}][X].
class CharFunc {
 public:
  using Terms = std::map<Weight, LaurentPoly>;

  CharFunc() = default;
  static CharFunc monomial(const Weight& x, const LaurentPoly& c = LaurentPoly(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Weight& x) const;
  void add(const Weight& x, const LaurentPoly& c);

  CharFunc& operator+=(const CharFunc& o);
  CharFunc& operator-=(const CharFunc& o);
  friend CharFunc operator+(CharFunc a, const CharFunc& b) { return a += b; }
  friend CharFunc operator-(CharFunc a, const CharFunc& b) { return a -= b; }
  friend CharFunc operator*(const LaurentPoly& c, const CharFunc& f);
  friend bool operator==(const CharFunc&, const CharFunc&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Demazure-Lusztig operator of the i-th simple reflection s = s_a:
///   T_s(e^x) = v e^{s(x)} + (v - v^{-1}) (e^x - e^{s(x)}) / (1 - e^{-a}).
/// Normalised by T_s(1) = v, matching the eigenvalues (v, -v^{-1}).
CharFunc dl_T(const RootDatum& R, std::size_t i, const CharFunc& f);
/// T_s^{-1} = T_s - (v - v^{-1}).
CharFunc dl_T_inv(const RootDatum& R, std::size_t i, const CharFunc& f);
/// f -> e^x f
CharFunc theta_mult(const Weight& x, const CharFunc& f);

/// Action of a Bernstein word (letters applied right to left).
CharFunc act(const RootDatum& R, const BraidWord& w, const CharFunc& f);
/// Action of a Hecke element through the section a -> lift_Tw(a).
CharFunc act(const HeckeAlgebra& H, const HeckeElt& h, const CharFunc& f);

struct RelationCheck {
  RelationTag tag;
  std::string description;
  bool passed = true;
  /// First failing monomial e^mu and the two images.
  std::optional<Weight> mu;
  CharFunc lhs_image, rhs_image;
};

struct PresentationReport {
  std::string type;
  int relation_radius = 0;
  int monomial_radius = 0;
  std::size_t monomials = 0;
  std::vector<RelationCheck> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Checks every relation_instances(R, relation_radius) as an operator
/// identity on each e^mu with |<mu, a_i^vee>| <= monomial_radius.
PresentationReport verify_presentation(const RootDatum& R, int relation_radius, int monomial_radius);

/// Which operator the leading-term test applies to e^lambda.
enum class LeadingMode {
  /// T_s for every lambda.
  Literal,
  /// T_s when <lambda, a^vee> <= 0 and T_s^{-1} when it is > 0, the operators
  /// matching the kernels O_{Z_s} and O_{Z_s}(-rho, rho - a) on line
  /// bundles.
  Lemma,
};

struct LeadingTerm {
  Weight lambda;
  std::size_t s = 0;
  int pairing = 0;
  bool inverse_used = false;
  /// support of the image inside conv(lambda)
  bool support_in_conv = false;
  /// image mod conv^0(lambda) is c e^{target}
  bool single_monomial = false;
  Weight target;
  LaurentPoly coefficient;
  /// image mod conv^0(lambda), for reporting
  CharFunc residue;
};

/// Support and leading-term data of the DL operator on e^lambda, where the
/// expected target is s(lambda) (equal to lambda when s fixes it).
LeadingTerm dl_leading_term(const RootDatum& R, std::size_t i, const Weight& lambda, LeadingMode mode);

}  // namespace affhecke
