#include "affhecke/kl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

void trim(KLPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a += c q^k b
void add_scaled(KLPoly& a, const KLPoly& b, std::int64_t c, std::size_t k) {
  if (b.empty() || c == 0) return;
  if (a.size() < b.size() + k) a.resize(b.size() + k, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + k] += c * b[i];
  trim(a);
}

KLPoly mul(const KLPoly& a, const KLPoly& b) {
  if (a.empty() || b.empty()) return {};
  KLPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::vector<WeylElt> elements_by_length(const WeylGroup& W, std::optional<WeylElt> up_to) {
  std::vector<WeylElt> out;
  for (std::size_t i = 0; i < W.size(); ++i) {
    WeylElt w = W.element(i);
    if (!up_to || W.bruhat_leq(w, *up_to)) out.push_back(w);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](WeylElt a, WeylElt b) { return W.length(a) < W.length(b); });
  return out;
}

}  // namespace

std::string kl_to_string(const KLPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t d = 0; d < p.size(); ++d) {
    const std::int64_t c = p[d];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (!s.empty()) s += c < 0 ? "-" : "+";
    else if (c < 0) s += "-";
    if (d == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += "q";
    if (d > 1) s += "^" + std::to_string(d);
  }
  return s;
}

std::int64_t kl_at_one(const KLPoly& p) {
  std::int64_t s = 0;
  for (auto c : p) s += c;
  return s;
}

KLTable::KLTable(const WeylGroup& W, KLAlgorithm algo, std::optional<WeylElt> up_to)
    : W_(&W), algo_(algo), n_(W.size()) {
  if (n_ * n_ > 16 * WeylGroup::default_bound())
    throw SizeError("KL table for |W| = " + std::to_string(n_) + " exceeds the element bound");
  polys_.push_back({});
  table_.assign(n_ * n_, 0);
  computed_.assign(n_, false);
  const auto order = elements_by_length(W, up_to);
  if (algo == KLAlgorithm::MuRecursion) build_mu(order);
  else build_r(order);
}

std::uint32_t KLTable::intern(KLPoly p) {
  trim(p);
  if (p.empty()) return 0;
  auto [it, inserted] = index_.try_emplace(p, static_cast<std::uint32_t>(polys_.size()));
  if (inserted) polys_.push_back(std::move(p));
  return it->second;
}

void KLTable::build_mu(const std::vector<WeylElt>& order) {
  const WeylGroup& W = *W_;
  // mu_list[v]: the z < v with mu(z, v) != 0
  std::vector<std::vector<std::pair<WeylElt, std::int64_t>>> mu_list(n_);
  for (WeylElt w : order) {
    if (W.length(w) == 0) {
      slot(w, w) = intern({1});
    } else {
      std::size_t s = 0;
      while (!W.is_left_descent(s, w)) ++s;
      const WeylElt v = W.left_mul(s, w);
      const int lw = W.length(w);
      for (std::size_t i = 0; i < n_; ++i) {
        const WeylElt y = W.element(i);
        if (!W.bruhat_leq(y, w)) continue;
        const WeylElt sy = W.left_mul(s, y);
        const bool c = W.length(sy) < W.length(y);
        KLPoly p;
        add_scaled(p, polys_[slot(sy, v)], 1, c ? 0 : 1);
        add_scaled(p, polys_[slot(y, v)], 1, c ? 1 : 0);
        for (const auto& [z, m] : mu_list[v.id]) {
          if (!W.is_left_descent(s, z) || !W.bruhat_leq(y, z)) continue;
          add_scaled(p, polys_[slot(y, z)], -m, static_cast<std::size_t>((lw - W.length(z)) / 2));
        }
        slot(y, w) = intern(std::move(p));
      }
    }
    computed_[w.id] = true;
    for (std::size_t i = 0; i < n_; ++i) {
      const WeylElt z = W.element(i);
      if (z == w || !W.bruhat_leq(z, w)) continue;
      if (std::int64_t m = mu(z, w)) mu_list[w.id].emplace_back(z, m);
    }
  }
}

void KLTable::build_r(const std::vector<WeylElt>& order) {
  const WeylGroup& W = *W_;
  // R_{x,y} for y in the order, by the left-descent recursion:
  //   R_{x,y} = R_{sx,sy}                      if sx < x,
  //   R_{x,y} = (q - 1) R_{x,sy} + q R_{sx,sy}  otherwise.
  std::vector<KLPoly> rpolys{{}};
  std::map<KLPoly, std::uint32_t> rindex{{KLPoly{}, 0}};
  std::vector<std::uint32_t> r(n_ * n_, 0);
  auto R = [&](WeylElt x, WeylElt y) -> const KLPoly& { return rpolys[r[std::size_t{y.id} * n_ + x.id]]; };
  auto store = [&](WeylElt x, WeylElt y, KLPoly p) {
    trim(p);
    auto [it, inserted] = rindex.try_emplace(p, static_cast<std::uint32_t>(rpolys.size()));
    if (inserted) rpolys.push_back(p);
    r[std::size_t{y.id} * n_ + x.id] = it->second;
  };
  for (WeylElt y : order) {
    if (W.length(y) == 0) {
      store(y, y, {1});
      continue;
    }
    std::size_t s = 0;
    while (!W.is_left_descent(s, y)) ++s;
    const WeylElt sy = W.left_mul(s, y);
    for (std::size_t i = 0; i < n_; ++i) {
      const WeylElt x = W.element(i);
      if (!W.bruhat_leq(x, y)) continue;
      const WeylElt sx = W.left_mul(s, x);
      if (W.length(sx) < W.length(x)) {
        store(x, y, R(sx, sy));
      } else {
        KLPoly p;
        add_scaled(p, R(x, sy), 1, 1);
        add_scaled(p, R(x, sy), -1, 0);
        add_scaled(p, R(sx, sy), 1, 1);
        store(x, y, std::move(p));
      }
    }
  }

  // q^{l(w)-l(x)} bar(P_{x,w}) - P_{x,w} = sum_{x<y<=w} R_{x,y} P_{y,w}; the
  // degree bound separates the two terms, so P_{x,w} is minus the part of
  // the right-hand side in degrees below (l(w)-l(x))/2.
  for (WeylElt w : order) {
    std::vector<WeylElt> below;
    for (std::size_t i = 0; i < n_; ++i)
      if (W.bruhat_leq(W.element(i), w)) below.push_back(W.element(i));
    std::stable_sort(below.begin(), below.end(),
                     [&](WeylElt a, WeylElt b) { return W.length(a) > W.length(b); });
    for (WeylElt x : below) {
      if (x == w) {
        slot(w, w) = intern({1});
        continue;
      }
      KLPoly sum;
      for (WeylElt y : below) {
        if (W.length(y) <= W.length(x) || !W.bruhat_leq(x, y)) continue;
        const KLPoly prod = mul(R(x, y), polys_[slot(y, w)]);
        add_scaled(sum, prod, 1, 0);
      }
      const int d = W.length(w) - W.length(x);
      KLPoly p;
      for (std::size_t k = 0; k < sum.size() && 2 * static_cast<int>(k) < d; ++k) p.push_back(-sum[k]);
      slot(x, w) = intern(std::move(p));
    }
    computed_[w.id] = true;
  }
}

const KLPoly& KLTable::P(WeylElt y, WeylElt w) const {
  if (!computed_[w.id]) throw std::out_of_range("KL polynomial requested outside the computed interval");
  return polys_[slot(y, w)];
}

std::int64_t KLTable::mu(WeylElt y, WeylElt w) const {
  const int d = W_->length(w) - W_->length(y);
  if (d <= 0 || d % 2 == 0) return 0;
  const KLPoly& p = P(y, w);
  const std::size_t k = static_cast<std::size_t>((d - 1) / 2);
  return k < p.size() ? p[k] : 0;
}

std::size_t KLTable::pair_count() const {
  std::size_t c = 0;
  for (auto id : table_) c += id != 0;
  return c;
}

bool multiplicity_is_exact(const RootDatum& R) {
  return std::all_of(R.components().begin(), R.components().end(),
                     [](const Component& c) { return c.letter == 'A' && c.rank <= 6; });
}

Multiplicity component_multiplicity(const KLTable& T, WeylElt y, WeylElt w) {
  const WeylGroup& W = T.group();
  Multiplicity m;
  m.comparable = W.bruhat_leq(y, w);
  m.value = m.comparable ? kl_at_one(T.P(y, w)) : 0;
  m.exact = m.comparable && multiplicity_is_exact(W.datum());
  if (!m.comparable)
    m.provenance = "y is not below w in the Bruhat order; no component";
  else if (m.exact)
    m.provenance = "P_{y,w}(1); equals the multiplicity for type A of rank <= 6";
  else
    m.provenance = "P_{y,w}(1); lower bound for the multiplicity";
  return m;
}

Multiplicity mult_in_Zprime(const KLTable& T, WeylElt u, WeylElt t) {
  const WeylGroup& W = T.group();
  const WeylElt w0 = W.longest();
  return component_multiplicity(T, W.mul(w0, W.inverse(t)), W.mul(w0, u));
}

std::vector<WeylElt> reduced_components(const WeylGroup& W, WeylElt w) {
  const WeylElt wi = W.inverse(w);
  std::vector<std::pair<std::pair<int, std::string>, WeylElt>> tmp;
  for (std::size_t i = 0; i < W.size(); ++i) {
    const WeylElt y = W.element(i);
    if (W.bruhat_leq(y, wi)) tmp.push_back({{W.length(y), W.label(y)}, y});
  }
  std::sort(tmp.begin(), tmp.end());
  std::vector<WeylElt> out;
  for (auto& [k, y] : tmp) out.push_back(y);
  return out;
}

std::vector<KLRow> kl_rows(const KLTable& T) {
  const WeylGroup& W = T.group();
  std::vector<std::pair<std::pair<int, std::string>, WeylElt>> elts;
  for (std::size_t i = 0; i < W.size(); ++i) {
    const WeylElt w = W.element(i);
    elts.push_back({{W.length(w), W.label(w)}, w});
  }
  std::sort(elts.begin(), elts.end());
  std::vector<KLRow> rows;
  for (const auto& [kw, w] : elts) {
    if (!T.covers(w)) continue;
    for (const auto& [ky, y] : elts)
      if (W.bruhat_leq(y, w)) rows.push_back({y, w, ky.second, kw.second, T.P(y, w)});
  }
  return rows;
}

std::string kl_csv(const KLTable& T) {
  std::string out = "y,w,P\n";
  for (const auto& r : kl_rows(T)) out += r.y_word + "," + r.w_word + "," + kl_to_string(r.poly) + "\n";
  return out;
}

}  // namespace affhecke
