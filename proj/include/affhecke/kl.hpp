#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affhecke/weyl.hpp"

namespace affhecke {

/// Polynomial in q with integer coefficients, index = degree, no trailing
/// zeros (the zero polynomial is empty).
using KLPoly = std::vector<std::int64_t>;

/// e.g. "1+q", "1+2q+q^2", "0"
std::string kl_to_string(const KLPoly& p);
std::int64_t kl_at_one(const KLPoly& p);

enum class KLAlgorithm {
  /// Kazhdan-Lusztig recursion with mu-coefficients (production path).
  MuRecursion,
  /// Inversion of the R-polynomials (independent oracle).
  RPolynomial,
};

/// Kazhdan-Lusztig polynomials P_{y,w} of a finite Weyl group, for all
/// y <= w (or all w below an upper bound).  Immutable once built.
class KLTable {
 public:
  /// Throws SizeError when |W|^2 exceeds the element bound.
  KLTable(const WeylGroup& W, KLAlgorithm algo = KLAlgorithm::MuRecursion,
          std::optional<WeylElt> up_to = std::nullopt);

  const WeylGroup& group() const { return *W_; }
  KLAlgorithm algorithm() const { return algo_; }
  /// True if P_{.,w} was computed.
  bool covers(WeylElt w) const { return computed_[w.id]; }

  /// P_{y,w}; zero when y is not below w.  Throws if w is not covered.
  const KLPoly& P(WeylElt y, WeylElt w) const;
  /// Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w}; 0 if that is not an integer.
  std::int64_t mu(WeylElt y, WeylElt w) const;

  /// Number of stored pairs y <= w.
  std::size_t pair_count() const;

 private:
  void build_mu(const std::vector<WeylElt>& order);
  void build_r(const std::vector<WeylElt>& order);
  std::uint32_t intern(KLPoly p);
  std::uint32_t& slot(WeylElt y, WeylElt w) { return table_[std::size_t{w.id} * n_ + y.id]; }
  std::uint32_t slot(WeylElt y, WeylElt w) const { return table_[std::size_t{w.id} * n_ + y.id]; }

  const WeylGroup* W_;
  KLAlgorithm algo_;
  std::size_t n_;
  std::vector<KLPoly> polys_;  // interned; index 0 is the zero polynomial
  std::map<KLPoly, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<bool> computed_;
};

/// P_{y,w}(1) with the caveats attached to reading it as a multiplicity.
struct Multiplicity {
  std::int64_t value = 0;
  /// false when y is not below w (value is then 0)
  bool comparable = false;
  /// true when the value is known to equal the geometric multiplicity
  bool exact = false;
  std::string provenance;
};

/// Coefficient of Ch(L_{w0 w}) in Ch(M_{w0 y}), namely P_{y,w}(1).  It is a
/// lower bound for the multiplicity of Y_{w0 w} in Z'_{y^{-1} w0}, and equal
/// to it for type A of rank at most 6.
Multiplicity component_multiplicity(const KLTable& T, WeylElt y, WeylElt w);

/// Lower bound for the multiplicity of the component Y_u in Z'_t, obtained
/// from component_multiplicity with y = w0 t^{-1} and w = w0 u.
Multiplicity mult_in_Zprime(const KLTable& T, WeylElt u, WeylElt t);

/// Components of (Z'_w)_red: all y <= w^{-1}, sorted by (length, label).
std::vector<WeylElt> reduced_components(const WeylGroup& W, WeylElt w);

/// True if every irreducible factor is of type A with rank <= 6.
bool multiplicity_is_exact(const RootDatum& R);

/// Rows (y-word, w-word, polynomial) over all covered pairs y <= w, ordered
/// by (l(w), w-word, l(y), y-word).
struct KLRow {
  WeylElt y, w;
  std::string y_word, w_word;
  KLPoly poly;
};
std::vector<KLRow> kl_rows(const KLTable& T);
std::string kl_csv(const KLTable& T);

}  // namespace affhecke
