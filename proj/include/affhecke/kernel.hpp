#pragma once

#include <map>
#include <string>
#include <vector>

#include "affhecke/hecke.hpp"

namespace affhecke {

enum class ConvolutionOrder {
  /// a * b is the Hecke product b a: the two factors are exchanged, so that
  /// O_{Z_{s_1}} * ... * O_{Z_{s_n}} = O_{Z_w} for a reduced w = s_1 ... s_n.
  Exchanged,
  /// a * b is the Hecke product a b.
  Direct,
};

/// Conventions relating kernels to Hecke coordinates.  Printed with every
/// serialised result.
struct Conventions {
  /// <j> is sent to v^{shift_sign * j}.  The default -1 makes
  /// O_{Z_s}<1> * O_{Z_s}(-rho, rho - a)<1> = O_diag hold on classes.
  int shift_sign = -1;
  ConvolutionOrder order = ConvolutionOrder::Exchanged;

  /// v-power attached to the shift <j>.
  LaurentPoly shift(int j) const { return LaurentPoly(1, shift_sign * j); }
  std::map<std::string, std::string> describe() const;
};

/// Class of O_{Z_w}(x, y) in H_aff:
///   value = theta_x (-v)^{l(w)} T_{w^{-1}} theta_y,
/// so the untwisted class of Z_{w^{-1}} is (-v)^{l(w)} T_w, the left twist
/// multiplies on the left and the right twist on the right.
struct KernelClass {
  WeylElt w;
  Weight twist_left, twist_right;
  HeckeElt value;
};

KernelClass kernel_class(const HeckeAlgebra& H, WeylElt w, const Weight& x, const Weight& y);
KernelClass kernel_class(const HeckeAlgebra& H, WeylElt w);

/// Class of the convolution a * b under the chosen order.
HeckeElt convolve(const HeckeAlgebra& H, const HeckeElt& a, const HeckeElt& b,
                  const Conventions& conv = {});
HeckeElt convolve(const HeckeAlgebra& H, const KernelClass& a, const KernelClass& b,
                  const Conventions& conv = {});

struct WordCheck {
  Word word;
  /// iterated convolution O_{Z_{s_1}} * ... * O_{Z_{s_n}} equals the class of O_{Z_w}
  bool convolution_matches = false;
  /// (-v)^n T_{s_1} ... T_{s_n} equals kernel_class(w^{-1}).value
  bool product_matches = false;
};

struct ConvolutionReport {
  WeylElt w;
  HeckeElt expected;
  std::vector<WordCheck> words;
  bool all_passed() const;
};

/// Checks every reduced word of w against the class of O_{Z_w}.
ConvolutionReport verify_reduced_word_convolution(const HeckeAlgebra& H, WeylElt w,
                                                  const Conventions& conv = {});

/// Borel-Moore dictionary: w corresponds to [Z'_{w^{-1}}], returned as the
/// group-algebra element w.
using GroupAlgebraElt = std::map<WeylElt, std::int64_t>;
GroupAlgebraElt bm_class(WeylElt w);
/// Product of group-algebra elements in the convolution order.
GroupAlgebraElt bm_compose(const WeylGroup& W, const GroupAlgebraElt& a, const GroupAlgebraElt& b,
                           const Conventions& conv = {});

/// The family {kernel_class(w^{-1}, x, 0)} (Side::Right, theta_x on the
/// left) or {kernel_class(w^{-1}, 0, x)} (Side::Left) over w in W and x in
/// the radius box, in a fixed order.
std::vector<HeckeElt> twisted_family(const HeckeAlgebra& H, Side side, int radius);

struct RankResult {
  std::size_t size = 0;
  /// rank of a specialisation v = t, a lower bound for the rank over Q(v)
  std::size_t rank_lower_bound = 0;
  /// the specialisation that reached the bound
  long specialised_at = 0;
  bool independent() const { return rank_lower_bound == size; }
};

/// Rank over Q(v) of a family of Hecke elements, bounded below through
/// the specialisations v = 2, 3, 5, 7 (a specialisation can only lower the
/// rank, so reaching the family size certifies independence).
RankResult rank_over_Qv(const std::vector<HeckeElt>& family);

}  // namespace affhecke
