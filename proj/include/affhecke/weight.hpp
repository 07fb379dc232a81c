#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace affhecke {

inline constexpr std::size_t kMaxRank = 16;

/// An integral vector of length `rank()`, used both for weights in the
/// fundamental-weight basis and for coroots in the simple-coroot basis.
/// Coordinates beyond the rank are kept at zero so the defaulted ordering
/// and hashing are consistent.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : rank_(check_rank(rank)) {}
  Weight(std::initializer_list<int> coords) : rank_(check_rank(coords.size())) {
    std::size_t i = 0;
    for (int c : coords) c_[i++] = c;
  }
  explicit Weight(std::span<const int> coords) : rank_(check_rank(coords.size())) {
    for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = coords[i];
  }

  static Weight unit(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w.c_[i] = 1;
    return w;
  }

  std::size_t rank() const { return rank_; }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }

  std::span<const int> coords() const { return {c_.data(), rank_}; }
  std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + rank_}; }

  bool is_zero() const {
    for (std::size_t i = 0; i < rank_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_dominant() const {
    for (std::size_t i = 0; i < rank_; ++i)
      if (c_[i] < 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    same_rank(o);
    for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    same_rank(o);
    for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(int k) {
    for (std::size_t i = 0; i < rank_; ++i) c_[i] *= k;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  Weight operator-() const {
    Weight r = *this;
    for (std::size_t i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
    return r;
  }

  /// Plain dot product of coordinates; with a weight in the fundamental
  /// basis and a coroot in the simple-coroot basis this is the canonical
  /// pairing.
  long dot(const Weight& o) const {
    same_rank(o);
    long s = 0;
    for (std::size_t i = 0; i < rank_; ++i) s += static_cast<long>(c_[i]) * o.c_[i];
    return s;
  }

  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  std::size_t hash() const {
    std::size_t h = rank_;
    for (std::size_t i = 0; i < rank_; ++i)
      h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(c_[i]));
    return h;
  }

 private:
  static std::size_t check_rank(std::size_t r) {
    if (r > kMaxRank)
      throw std::invalid_argument("rank " + std::to_string(r) + " exceeds the supported maximum " +
                                  std::to_string(kMaxRank));
    return r;
  }
  void same_rank(const Weight& o) const {
    if (o.rank_ != rank_)
      throw std::invalid_argument("weight dimension mismatch: " + std::to_string(rank_) +
                                  " vs " + std::to_string(o.rank_));
  }

  std::uint8_t rank_ = 0;
  std::array<int, kMaxRank> c_{};
};

inline std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

/// All weights with every coordinate in [-radius, radius].
std::vector<Weight> weight_box(std::size_t rank, int radius);

/// Square integer matrix of small size, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  Weight apply(const Weight& x) const {
    Weight r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < n_; ++j) s += static_cast<long>(a_[i * n_ + j]) * x[j];
      r[i] = static_cast<int>(s);
    }
    return r;
  }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        int aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  IntMatrix transpose() const {
    IntMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> a_;
};

}  // namespace affhecke

template <>
struct std::hash<affhecke::Weight> {
  std::size_t operator()(const affhecke::Weight& w) const noexcept { return w.hash(); }
};
