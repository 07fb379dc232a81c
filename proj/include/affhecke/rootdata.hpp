#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affhecke/weight.hpp"

namespace affhecke {

/// One simple factor of a (possibly reducible) root datum.
struct Component {
  char letter = 'A';        ///< Cartan type letter A..G
  std::size_t rank = 0;
  std::size_t offset = 0;   ///< index of the first simple root of this factor
  std::size_t highest_root = 0;  ///< index into positive_roots()
  /// Index of the root whose coroot is the highest coroot (the highest
  /// short root; equal to highest_root in simply laced types).
  std::size_t highest_short_root = 0;
  int coxeter_number = 0;

  std::string name() const { return std::string(1, letter) + std::to_string(rank); }
};

/// Root datum of a simply-connected semisimple group.
///
/// Conventions, fixed once for the whole library:
///  * weights are integer vectors in the fundamental-weight basis;
///  * coroots are integer vectors in the simple-coroot basis, so the
///    canonical pairing is the coordinate dot product;
///  * cartan()(i, j) = <alpha_j, alpha_i^vee>, hence simple root alpha_j has
///    the j-th column of the Cartan matrix as its coordinates.
class RootDatum {
 public:
  /// Parses "A3", "B2", "G2", "F4xG2", ... (Bourbaki numbering).
  static RootDatum from_type(std::string_view spec);
  /// Validates an explicit Cartan matrix and classifies its components.
  static RootDatum from_cartan(const IntMatrix& cartan);

  std::size_t rank() const { return cartan_.size(); }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<Component>& components() const { return components_; }
  std::string type_string() const;

  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<Weight>& positive_coroots() const { return positive_coroots_; }
  /// Coordinates of each positive root in the simple-root basis.
  const std::vector<Weight>& positive_root_coords() const { return positive_root_coords_; }

  const Weight& rho() const { return rho_; }
  /// Maximum of the Coxeter numbers of the simple factors.
  int coxeter_number() const;
  /// Smallest n with 2 | n iff an F4 factor is present and 3 | n iff a G2
  /// factor is present.
  int n_G() const;
  /// |X / ZR|, the absolute determinant of the Cartan matrix.
  long fundamental_group_order() const { return det_; }
  /// det(A) * A^{-1}, an integral matrix: row i applied to a weight gives
  /// det(A) times its alpha_i-coefficient.
  const IntMatrix& scaled_inverse_cartan() const { return scaled_inverse_; }
  /// True iff x lies in the root lattice ZR.
  bool in_root_lattice(const Weight& x) const;

  /// <x, cv> for a weight x and a coroot cv in simple-coroot coordinates.
  long pairing(const Weight& x, const Weight& coroot) const;

  /// s_i(x) = x - <x, alpha_i^vee> alpha_i.
  Weight reflect(std::size_t i, const Weight& x) const;
  /// s_beta(x) for the positive root with index k.
  Weight reflect_root(std::size_t k, const Weight& x) const;

  /// +(k+1) if x is the k-th positive root, -(k+1) if -x is, 0 otherwise.
  int root_index(const Weight& x) const;
  bool is_root(const Weight& x) const { return root_index(x) != 0; }

  /// W-orbit of x, sorted.
  std::vector<Weight> orbit(const Weight& x) const;
  /// The unique dominant element of W x.
  Weight dominant_representative(const Weight& x) const;

  /// conv(x): weights in x + Q inside the convex hull of W x; conv0(x): those
  /// not in W x.  Both sorted.
  std::pair<std::vector<Weight>, std::vector<Weight>> conv_hull_weights(const Weight& x) const;

  /// Identifies the datum; two data with equal fingerprints have equal
  /// Cartan matrices.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.cartan_ == b.cartan_; }

 private:
  RootDatum() = default;
  void build(std::vector<Component> components);

  IntMatrix cartan_;
  std::vector<Component> components_;
  std::vector<Weight> simple_roots_, simple_coroots_;
  std::vector<Weight> positive_roots_, positive_coroots_, positive_root_coords_;
  std::unordered_map<Weight, int> root_lookup_;
  Weight rho_;
  IntMatrix scaled_inverse_;
  long det_ = 1;
  std::uint64_t fingerprint_ = 0;
};

/// The Cartan matrix of a single simple type (Bourbaki numbering).
IntMatrix cartan_matrix(char letter, std::size_t rank);

}  // namespace affhecke
