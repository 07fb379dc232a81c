#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace affhecke {

/// Polynomial over Q in n variables, graded by per-variable weights
/// (all 1 unless set otherwise).
class QPoly {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, mpq_class>;

  explicit QPoly(std::size_t nvars = 0, std::vector<int> weights = {});
  static QPoly variable(std::size_t nvars, std::size_t i, std::vector<int> weights = {});
  static QPoly constant(std::size_t nvars, const mpq_class& c, std::vector<int> weights = {});

  std::size_t nvars() const { return n_; }
  const std::vector<int>& weights() const { return w_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const mpq_class& c);
  int monomial_degree(const Monomial& m) const;
  /// Largest weighted degree of a term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const mpq_class& c, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  mpq_class eval(const std::vector<mpq_class>& point) const;
  /// Same polynomial with other weights.
  QPoly reweighted(std::vector<int> weights) const;

  /// e.g. "x0^2*x1 - 1/2*x2"
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check(const QPoly& o) const;

  std::size_t n_;
  std::vector<int> w_;
  Terms terms_;
};

/// Monomials of weighted degree exactly d (or at most d), in a fixed order.
std::vector<QPoly::Monomial> monomials_of_degree(const std::vector<int>& weights, int d, bool up_to = false);

struct KoszulReport {
  std::size_t nvars = 0;
  std::vector<int> generator_degrees;
  int max_degree = 0;
  bool homogeneous = true;
  /// (homological index i, internal degree d) -> dim H_i.  For
  /// inhomogeneous input d is a total-degree truncation level.
  std::map<std::pair<int, int>, std::size_t> homology;
  std::string caveat;

  std::size_t dim(int i, int d) const;
  /// H_i = 0 for all i > 0 in the window.
  bool higher_vanish() const;
  /// dim H_0 in degrees 0..max_degree.
  std::vector<std::size_t> h0() const;
};

/// Exact Koszul homology of gens in internal degrees <= max_degree.
/// Throws SizeError when a graded piece exceeds max_columns, and
/// std::invalid_argument on an empty or mixed sequence.
KoszulReport koszul_homology(const std::vector<QPoly>& gens, int max_degree, std::size_t max_columns = 200000);

struct HilbertReport {
  std::vector<long> expected;  ///< prod(1 - t^{d_i}) / prod(1 - t^{w_j})
  std::vector<long> actual;    ///< dim (R/I)_d by linear algebra
  bool matches() const { return expected == actual; }
};

/// Compares dim (R/I)_d against the complete-intersection Hilbert series.
/// Rejects inhomogeneous input.
HilbertReport hilbert_series_check(const std::vector<QPoly>& gens, int max_degree);

/// Variable names of the sl2 chart.
std::vector<std::string> sl2_chart_names();
/// Equations of Z on the product of two big-cell charts of the Grothendieck
/// resolution of sl2.  A chart point (t, a, b) stands for
/// X = [[t - ab, b], [2at - a^2 b, ab - t]] with the Borel subalgebra
/// conjugated by [[1, 0], [a, 1]]; the equations say X = X'.  Variables are
/// (t, a, b, t', a', b') with weights (2, 1, 1, 2, 1, 1), which makes the
/// equations homogeneous of degrees 1, 2, 3.
std::vector<QPoly> sl2_steinberg_chart();
/// The other point of g~ over the same regular X: (t, a, b) -> (-t, a - 2t/b, b), b != 0.
std::vector<mpq_class> sl2_deck_transformation(const std::vector<mpq_class>& tab);

}  // namespace affhecke
