#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace affhecke {

/// Laurent polynomial in v with integer coefficients.  Stored densely from
/// the lowest nonzero exponent; the zero polynomial has no coefficients.
/// Arithmetic throws std::overflow_error rather than wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c) : LaurentPoly(c, 0) {}  // NOLINT: implicit integer embedding
  LaurentPoly(std::int64_t c, int exponent);

  /// c v^exponent
  static LaurentPoly monomial(std::int64_t c, int exponent) { return {c, exponent}; }
  static LaurentPoly v() { return {1, 1}; }
  static LaurentPoly v_inv() { return {1, -1}; }
  /// v - v^{-1}
  static LaurentPoly v_minus_v_inv();

  bool is_zero() const { return c_.empty(); }
  int min_exponent() const { return lo_; }
  int max_exponent() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int exponent) const;
  /// Number of nonzero coefficients.
  std::size_t term_count() const;
  bool is_monomial() const { return term_count() == 1; }
  /// Exponent to coefficient, nonzero entries only.
  std::map<int, std::int64_t> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  /// v -> v^{-1}
  LaurentPoly bar() const;
  /// Value at v = 1.
  std::int64_t at_one() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.lo_ == b.lo_);
  }

  /// e.g. "v^2-1+3v^-1"; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();

  int lo_ = 0;
  std::vector<std::int64_t> c_;
};

/// (-v)^k, also for negative k.
LaurentPoly neg_v_power(int k);

}  // namespace affhecke
