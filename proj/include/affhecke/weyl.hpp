#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "affhecke/rootdata.hpp"
#include "affhecke/weight.hpp"

namespace affhecke {

/// Handle to an element of an enumerated finite Weyl group.  The integral
/// matrix and the length live in the owning WeylGroup.
struct WeylElt {
  std::uint32_t id = 0;
  friend auto operator<=>(WeylElt, WeylElt) = default;
};

using Word = std::vector<std::size_t>;

/// Finite Weyl group W of a root datum, enumerated once.  Elements are
/// numbered in breadth-first order from the identity (so by length), and
/// every query is a table lookup afterwards.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultBound = 1'000'000;
  static constexpr std::size_t kBruhatBound = 20'000;

  /// Reads AFFHECKE_MAX_ELEMENTS if set, else kDefaultBound.
  static std::size_t default_bound();

  explicit WeylGroup(RootDatum datum, std::size_t bound = default_bound());

  const RootDatum& datum() const { return datum_; }
  std::size_t rank() const { return datum_.rank(); }
  std::size_t size() const { return lengths_.size(); }

  WeylElt identity() const { return {0}; }
  WeylElt simple(std::size_t i) const { return right_[0 * rank() + i]; }
  WeylElt element(std::size_t index) const { return {static_cast<std::uint32_t>(index)}; }
  WeylElt longest() const { return longest_; }

  const IntMatrix& matrix(WeylElt w) const { return matrices_[w.id]; }
  int length(WeylElt w) const { return lengths_[w.id]; }

  WeylElt mul(WeylElt a, WeylElt b) const;
  WeylElt inverse(WeylElt w) const { return inverse_[w.id]; }
  WeylElt left_mul(std::size_t i, WeylElt w) const { return left_[w.id * rank() + i]; }
  WeylElt right_mul(WeylElt w, std::size_t i) const { return right_[w.id * rank() + i]; }
  bool is_left_descent(std::size_t i, WeylElt w) const {
    return lengths_[left_mul(i, w).id] < lengths_[w.id];
  }
  bool is_right_descent(WeylElt w, std::size_t i) const {
    return lengths_[right_mul(w, i).id] < lengths_[w.id];
  }

  Weight apply(WeylElt w, const Weight& x) const { return matrices_[w.id].apply(x); }
  /// Dot action w . x = w(x + rho) - rho.
  Weight dot_action(WeylElt w, const Weight& x) const;
  /// True iff w sends the k-th positive root to a negative root.
  bool inverts(WeylElt w, std::size_t k) const {
    return (inversions_[w.id * inv_words_ + k / 64] >> (k % 64)) & 1u;
  }

  /// Product of simple reflections; indices are 0-based.
  WeylElt from_word(std::span<const std::size_t> word) const;
  /// Element w with w(rho) = image, if any.
  std::optional<WeylElt> from_rho_image(const Weight& image) const;

  /// Lexicographically first reduced word.
  Word reduced_word(WeylElt w) const;
  /// All reduced words, sorted lexicographically.
  std::vector<Word> reduced_words(WeylElt w) const;

  /// Bruhat order via the subword property: the set below w is the set of
  /// products of subwords of a reduced word of w.
  bool bruhat_leq(WeylElt y, WeylElt w) const;

  /// "s1s2..." style label from the canonical reduced word ("e" for 1).
  std::string label(WeylElt w) const;

 private:
  void build_bruhat() const;

  RootDatum datum_;
  std::vector<IntMatrix> matrices_;
  std::vector<int> lengths_;
  std::vector<WeylElt> left_, right_, inverse_;
  std::vector<std::uint64_t> inversions_;
  std::size_t inv_words_ = 1;
  std::unordered_map<Weight, std::uint32_t> by_rho_;
  WeylElt longest_;

  mutable std::once_flag bruhat_once_;
  mutable std::vector<std::uint64_t> below_;
  mutable std::size_t below_words_ = 0;
};

/// Parses "s1s2s1", "s1 s2 s1", "e" or "" into a 0-based word.
Word parse_word(std::string_view text, std::size_t rank);
/// Formats a 0-based word as "s1s2s1" ("e" if empty).
std::string format_word(std::span<const std::size_t> word);

}  // namespace affhecke
