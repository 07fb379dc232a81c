#include "affhecke/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "affhecke/errors.hpp"

namespace affhecke {

std::size_t WeylGroup::default_bound() {
  if (const char* env = std::getenv("AFFHECKE_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBound;
}

WeylGroup::WeylGroup(RootDatum datum, std::size_t bound) : datum_(std::move(datum)) {
  const std::size_t n = datum_.rank();
  const std::size_t npos = datum_.positive_roots().size();
  inv_words_ = (npos + 63) / 64;
  if (inv_words_ == 0) inv_words_ = 1;

  std::vector<IntMatrix> reflections;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    const Weight& a = datum_.simple_roots()[i];
    for (std::size_t r = 0; r < n; ++r) s(r, i) -= a[r];
    reflections.push_back(s);
  }

  const Weight& rho = datum_.rho();
  matrices_.push_back(IntMatrix::identity(n));
  by_rho_[rho] = 0;
  std::vector<Weight> rho_images{rho};
  std::vector<std::uint32_t> parent{0};
  std::vector<std::size_t> parent_gen{0};
  right_.assign(n, WeylElt{});

  for (std::size_t cur = 0; cur < matrices_.size(); ++cur) {
    for (std::size_t i = 0; i < n; ++i) {
      // w s_i (rho) = w(rho) - w(alpha_i)
      Weight img = rho_images[cur] - matrices_[cur].apply(datum_.simple_roots()[i]);
      auto it = by_rho_.find(img);
      std::uint32_t id;
      if (it == by_rho_.end()) {
        if (matrices_.size() >= bound)
          throw SizeError("Weyl group of " + datum_.type_string() + " exceeds the bound of " +
                          std::to_string(bound) + " elements");
        id = static_cast<std::uint32_t>(matrices_.size());
        matrices_.push_back(matrices_[cur] * reflections[i]);
        by_rho_.emplace(img, id);
        rho_images.push_back(img);
        parent.push_back(static_cast<std::uint32_t>(cur));
        parent_gen.push_back(i);
        right_.resize(right_.size() + n);
      } else {
        id = it->second;
      }
      right_[cur * n + i] = WeylElt{id};
    }
  }

  const std::size_t size = matrices_.size();
  lengths_.assign(size, 0);
  inversions_.assign(size * inv_words_, 0);
  for (std::size_t w = 0; w < size; ++w) {
    int len = 0;
    for (std::size_t k = 0; k < npos; ++k) {
      Weight img = matrices_[w].apply(datum_.positive_roots()[k]);
      if (datum_.root_index(img) < 0) {
        ++len;
        inversions_[w * inv_words_ + k / 64] |= std::uint64_t{1} << (k % 64);
      }
    }
    lengths_[w] = len;
  }

  left_.assign(size * n, WeylElt{});
  for (std::size_t w = 0; w < size; ++w)
    for (std::size_t i = 0; i < n; ++i)
      left_[w * n + i] = WeylElt{by_rho_.at(datum_.reflect(i, rho_images[w]))};

  inverse_.assign(size, WeylElt{});
  for (std::size_t w = 1; w < size; ++w)
    inverse_[w] = left_mul(parent_gen[w], inverse_[parent[w]]);

  longest_ = WeylElt{0};
  for (std::size_t w = 0; w < size; ++w)
    if (lengths_[w] > lengths_[longest_.id]) longest_ = WeylElt{static_cast<std::uint32_t>(w)};
}

WeylElt WeylGroup::mul(WeylElt a, WeylElt b) const {
  Weight img = matrices_[a.id].apply(matrices_[b.id].apply(datum_.rho()));
  return WeylElt{by_rho_.at(img)};
}

Weight WeylGroup::dot_action(WeylElt w, const Weight& x) const {
  return apply(w, x + datum_.rho()) - datum_.rho();
}

WeylElt WeylGroup::from_word(std::span<const std::size_t> word) const {
  WeylElt w = identity();
  for (std::size_t i : word) {
    if (i >= rank())
      throw std::invalid_argument("simple reflection index " + std::to_string(i + 1) +
                                  " out of range for rank " + std::to_string(rank()));
    w = right_mul(w, i);
  }
  return w;
}

std::optional<WeylElt> WeylGroup::from_rho_image(const Weight& image) const {
  auto it = by_rho_.find(image);
  if (it == by_rho_.end()) return std::nullopt;
  return WeylElt{it->second};
}

Word WeylGroup::reduced_word(WeylElt w) const {
  Word word;
  while (lengths_[w.id] > 0) {
    for (std::size_t i = 0; i < rank(); ++i)
      if (is_left_descent(i, w)) {
        word.push_back(i);
        w = left_mul(i, w);
        break;
      }
  }
  return word;
}

std::vector<Word> WeylGroup::reduced_words(WeylElt w) const {
  std::vector<Word> out;
  Word prefix;
  std::function<void(WeylElt)> rec = [&](WeylElt x) {
    if (lengths_[x.id] == 0) {
      out.push_back(prefix);
      return;
    }
    for (std::size_t i = 0; i < rank(); ++i)
      if (is_left_descent(i, x)) {
        prefix.push_back(i);
        rec(left_mul(i, x));
        prefix.pop_back();
      }
  };
  rec(w);
  return out;
}

void WeylGroup::build_bruhat() const {
  const std::size_t size = this->size();
  if (size > kBruhatBound)
    throw SizeError("Bruhat table for " + datum_.type_string() + " (" + std::to_string(size) +
                    " elements) exceeds the bound of " + std::to_string(kBruhatBound));
  below_words_ = (size + 63) / 64;
  below_.assign(size * below_words_, 0);
  below_[0] = 1;  // e <= e
  for (std::size_t w = 1; w < size; ++w) {
    WeylElt we{static_cast<std::uint32_t>(w)};
    std::size_t s = 0;
    while (!is_right_descent(we, s)) ++s;
    const std::size_t ws = right_mul(we, s).id;
    std::uint64_t* dst = &below_[w * below_words_];
    const std::uint64_t* src = &below_[ws * below_words_];
    // below(w) = below(ws) u below(ws) s
    for (std::size_t k = 0; k < below_words_; ++k) dst[k] |= src[k];
    for (std::size_t y = 0; y < size; ++y)
      if ((src[y / 64] >> (y % 64)) & 1u) {
        std::size_t ys = right_mul(WeylElt{static_cast<std::uint32_t>(y)}, s).id;
        dst[ys / 64] |= std::uint64_t{1} << (ys % 64);
      }
  }
}

bool WeylGroup::bruhat_leq(WeylElt y, WeylElt w) const {
  if (y == w) return true;
  if (lengths_[y.id] >= lengths_[w.id]) return false;
  std::call_once(bruhat_once_, [this] { build_bruhat(); });
  return (below_[w.id * below_words_ + y.id / 64] >> (y.id % 64)) & 1u;
}

std::string WeylGroup::label(WeylElt w) const { return format_word(reduced_word(w)); }

Word parse_word(std::string_view text, std::size_t rank) {
  Word word;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == ',' || text[pos] == '*' || text[pos] == '.'))
      ++pos;
  };
  skip();
  if (text.substr(pos) == "e" || text.substr(pos) == "1") return word;
  while (pos < text.size()) {
    if (text[pos] != 's' && text[pos] != 'S')
      throw std::invalid_argument("cannot parse Weyl group word '" + std::string(text) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("missing index after 's' in '" + std::string(text) + "'");
    std::size_t idx = std::stoul(std::string(text.substr(start, pos - start)));
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("simple reflection s" + std::to_string(idx) +
                                  " out of range for rank " + std::to_string(rank));
    word.push_back(idx - 1);
    skip();
  }
  return word;
}

std::string format_word(std::span<const std::size_t> word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i : word) s += "s" + std::to_string(i + 1);
  return s;
}

}  // namespace affhecke
