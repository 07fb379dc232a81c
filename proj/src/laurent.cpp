#include "affhecke/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace affhecke {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t c, int exponent) : lo_(exponent) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::v_minus_v_inv() {
  LaurentPoly p;
  p.lo_ = -1;
  p.c_ = {-1, 0, 1};
  return p;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<std::int64_t>(c_.begin() + static_cast<long>(first),
                                   c_.begin() + static_cast<long>(last));
    lo_ += static_cast<int>(first);
  }
}

std::int64_t LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < lo_ || e > max_exponent()) return 0;
  return c_[static_cast<std::size_t>(e - lo_)];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](auto x) { return x != 0; }));
}

std::map<int, std::int64_t> LaurentPoly::terms() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out[lo_ + static_cast<int>(i)] = c_[i];
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  const int lo = std::min(lo_, o.lo_);
  const int hi = std::max(max_exponent(), o.max_exponent());
  if (lo < lo_ || hi > max_exponent()) {
    std::vector<std::int64_t> grown(static_cast<std::size_t>(hi - lo + 1), 0);
    std::copy(c_.begin(), c_.end(), grown.begin() + (lo_ - lo));
    c_ = std::move(grown);
    lo_ = lo;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    auto& dst = c_[static_cast<std::size_t>(o.lo_ - lo_) + i];
    dst = checked_add(dst, o.c_[i]);
  }
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = checked_mul(x, -1);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  LaurentPoly r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  if (c_.empty()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -max_exponent();
  return r;
}

std::int64_t LaurentPoly::at_one() const {
  std::int64_t s = 0;
  for (auto x : c_) s = checked_add(s, x);
  return s;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t idx = c_.size(); idx-- > 0;) {
    const std::int64_t c = c_[idx];
    if (c == 0) continue;
    const int e = lo_ + static_cast<int>(idx);
    const std::int64_t mag = c < 0 ? -c : c;
    if (!s.empty()) s += c < 0 ? "-" : "+";
    else if (c < 0) s += "-";
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += "v";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPoly neg_v_power(int k) { return LaurentPoly((k % 2 == 0) ? 1 : -1, k); }

}  // namespace affhecke
