#include "affhecke/koszul.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "affhecke/errors.hpp"
#include "affhecke/linalg.hpp"

namespace affhecke {

QPoly::QPoly(std::size_t nvars, std::vector<int> weights) : n_(nvars), w_(std::move(weights)) {
  if (w_.empty()) w_.assign(n_, 1);
  if (w_.size() != n_) throw std::invalid_argument("QPoly: one weight per variable expected");
  for (int w : w_)
    if (w < 1) throw std::invalid_argument("QPoly: weights must be positive");
}

QPoly QPoly::variable(std::size_t nvars, std::size_t i, std::vector<int> weights) {
  QPoly p(nvars, std::move(weights));
  Monomial m(nvars, 0);
  m.at(i) = 1;
  p.add_term(m, 1);
  return p;
}

QPoly QPoly::constant(std::size_t nvars, const mpq_class& c, std::vector<int> weights) {
  QPoly p(nvars, std::move(weights));
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

void QPoly::check(const QPoly& o) const {
  if (n_ != o.n_ || w_ != o.w_) throw std::invalid_argument("QPoly: incompatible polynomial rings");
}

void QPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (m.size() != n_) throw std::invalid_argument("QPoly: monomial of the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int QPoly::monomial_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += w_[i] * m[i];
  return d;
}

int QPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

bool QPoly::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return monomial_degree(t.first) == d; });
}

QPoly& QPoly::operator+=(const QPoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  a.check(b);
  QPoly r(a.n_, a.w_);
  QPoly::Monomial m(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

QPoly operator*(const mpq_class& c, const QPoly& a) {
  QPoly r(a.n_, a.w_);
  for (const auto& [m, x] : a.terms_) r.add_term(m, c * x);
  return r;
}

mpq_class QPoly::eval(const std::vector<mpq_class>& point) const {
  if (point.size() != n_) throw std::invalid_argument("QPoly::eval: point of the wrong dimension");
  mpq_class s = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

QPoly QPoly::reweighted(std::vector<int> weights) const {
  QPoly r(n_, std::move(weights));
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

std::string QPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest degree first, then the earlier variables first.
  std::vector<std::pair<Monomial, mpq_class>> v(terms_.rbegin(), terms_.rend());
  std::stable_sort(v.begin(), v.end(),
                   [&](const auto& x, const auto& y) { return monomial_degree(x.first) > monomial_degree(y.first); });
  for (const auto& [m, c] : v) {
    const bool neg = c < 0;
    const mpq_class mag = neg ? mpq_class(-c) : c;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) s += mag.get_str();
    else if (mag == 1) s += mono;
    else s += mag.get_str() + "*" + mono;
  }
  return s;
}

std::vector<QPoly::Monomial> monomials_of_degree(const std::vector<int>& weights, int d, bool up_to) {
  std::vector<QPoly::Monomial> out;
  if (d < 0) return out;
  const std::size_t n = weights.size();
  QPoly::Monomial m(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      if (left == 0 || up_to) out.push_back(m);
      return;
    }
    for (int k = 0; k * weights[i] <= left; ++k) {
      m[i] = k;
      self(self, i + 1, left - k * weights[i]);
    }
    m[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

namespace {

class KoszulComplex {
 public:
  KoszulComplex(const std::vector<QPoly>& gens, bool truncated, std::size_t max_columns)
      : gens_(gens), truncated_(truncated), max_columns_(max_columns) {
    for (const auto& g : gens_) degs_.push_back(g.degree());
  }

  int mask_degree(unsigned mask) const {
    int d = 0;
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (mask >> k & 1u) d += degs_[k];
    return d;
  }

  std::vector<unsigned> masks(int i) const {
    std::vector<unsigned> out;
    const unsigned c = static_cast<unsigned>(gens_.size());
    for (unsigned mask = 0; mask < (1u << c); ++mask)
      if (std::popcount(mask) == i) out.push_back(mask);
    return out;
  }

  std::size_t dim(int i, int d) const {
    if (i < 0 || i > static_cast<int>(gens_.size())) return 0;
    std::size_t total = 0;
    for (unsigned mask : masks(i))
      total += monomials_of_degree(gens_[0].weights(), d - mask_degree(mask), truncated_).size();
    if (total > max_columns_)
      throw SizeError("Koszul graded piece of dimension " + std::to_string(total) + " exceeds the bound");
    return total;
  }

  /// Rank of the differential K_i -> K_{i-1} in internal degree d.
  std::size_t rank(int i, int d) const {
    if (i <= 0 || i > static_cast<int>(gens_.size())) return 0;
    dim(i, d);
    dim(i - 1, d);
    const auto& weights = gens_[0].weights();
    std::map<std::pair<unsigned, QPoly::Monomial>, std::size_t> columns;
    auto column = [&](unsigned mask, const QPoly::Monomial& m) {
      return columns.try_emplace({mask, m}, columns.size()).first->second;
    };
    RankAccumulator acc;
    for (unsigned mask : masks(i)) {
      for (const auto& m : monomials_of_degree(weights, d - mask_degree(mask), truncated_)) {
        // d(m e_I) = sum_k (-1)^k f_{I_k} m e_{I \ I_k}
        SparseRow row;
        int sign = 1;
        for (std::size_t k = 0; k < gens_.size(); ++k) {
          if (!(mask >> k & 1u)) continue;
          const unsigned rest = mask & ~(1u << k);
          for (const auto& [fm, fc] : gens_[k].terms()) {
            QPoly::Monomial prod(m.size());
            for (std::size_t j = 0; j < m.size(); ++j) prod[j] = m[j] + fm[j];
            auto& entry = row[column(rest, prod)];
            entry += sign * fc;
          }
          sign = -sign;
        }
        for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
        acc.add(std::move(row));
      }
    }
    return acc.rank();
  }

 private:
  const std::vector<QPoly>& gens_;
  bool truncated_;
  std::size_t max_columns_;
  std::vector<int> degs_;
};

void validate(const std::vector<QPoly>& gens) {
  if (gens.empty()) throw std::invalid_argument("Koszul complex needs at least one generator");
  if (gens.size() > 16) throw std::invalid_argument("Koszul complex limited to 16 generators");
  for (const auto& g : gens) {
    if (g.nvars() != gens[0].nvars() || g.weights() != gens[0].weights())
      throw std::invalid_argument("generators live in different polynomial rings");
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  }
}

}  // namespace

std::size_t KoszulReport::dim(int i, int d) const {
  auto it = homology.find({i, d});
  return it == homology.end() ? 0 : it->second;
}

bool KoszulReport::higher_vanish() const {
  return std::all_of(homology.begin(), homology.end(),
                     [](const auto& e) { return e.first.first == 0 || e.second == 0; });
}

std::vector<std::size_t> KoszulReport::h0() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(dim(0, d));
  return out;
}

KoszulReport koszul_homology(const std::vector<QPoly>& gens, int max_degree, std::size_t max_columns) {
  validate(gens);
  KoszulReport rep;
  rep.nvars = gens[0].nvars();
  rep.max_degree = max_degree;
  for (const auto& g : gens) {
    rep.generator_degrees.push_back(g.degree());
    rep.homogeneous = rep.homogeneous && g.is_homogeneous();
  }
  if (max_degree < *std::max_element(rep.generator_degrees.begin(), rep.generator_degrees.end()))
    throw std::invalid_argument("max degree below a generator degree");
  if (!rep.homogeneous)
    rep.caveat = "inhomogeneous generators: homology of the complex truncated at total degree <= d; "
                 "vanishing is certified only inside this window";
  const KoszulComplex K(gens, !rep.homogeneous, max_columns);
  const int c = static_cast<int>(gens.size());
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<std::size_t> ranks(static_cast<std::size_t>(c) + 2, 0);
    for (int i = 1; i <= c; ++i) ranks[static_cast<std::size_t>(i)] = K.rank(i, d);
    for (int i = 0; i <= c; ++i) {
      const std::size_t kd = K.dim(i, d);
      rep.homology[{i, d}] = kd - ranks[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i) + 1];
    }
  }
  return rep;
}

HilbertReport hilbert_series_check(const std::vector<QPoly>& gens, int max_degree) {
  validate(gens);
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw std::invalid_argument("Hilbert series oracle needs homogeneous generators");
  const auto& weights = gens[0].weights();
  const std::size_t D = static_cast<std::size_t>(max_degree) + 1;
  // prod(1 - t^{d_i}) times prod 1/(1 - t^{w_j}), truncated at t^max_degree.
  std::vector<long> series(D, 0);
  series[0] = 1;
  for (const auto& g : gens) {
    const std::size_t d = static_cast<std::size_t>(g.degree());
    for (std::size_t k = D; k-- > d;) series[k] -= series[k - d];
  }
  for (int w : weights)
    for (std::size_t k = static_cast<std::size_t>(w); k < D; ++k) series[k] += series[k - static_cast<std::size_t>(w)];

  HilbertReport rep;
  rep.expected = series;
  const KoszulComplex K(gens, false, 200000);
  for (int d = 0; d <= max_degree; ++d)
    rep.actual.push_back(static_cast<long>(monomials_of_degree(weights, d).size() - K.rank(1, d)));
  return rep;
}

std::vector<std::string> sl2_chart_names() { return {"t", "a", "b", "t'", "a'", "b'"}; }

std::vector<QPoly> sl2_steinberg_chart() {
  const std::vector<int> w{2, 1, 1, 2, 1, 1};
  auto var = [&](std::size_t i) { return QPoly::variable(6, i, w); };
  const QPoly t = var(0), a = var(1), b = var(2), t2 = var(3), a2 = var(4), b2 = var(5);
  const mpq_class two = 2;
  // entries (1,2), (1,1) and (2,1) of X; (2,2) is minus (1,1)
  const QPoly f1 = b - b2;
  const QPoly f2 = (t - a * b) - (t2 - a2 * b2);
  const QPoly f3 = (two * (a * t) - a * a * b) - (two * (a2 * t2) - a2 * a2 * b2);
  return {f1, f2, f3};
}

std::vector<mpq_class> sl2_deck_transformation(const std::vector<mpq_class>& tab) {
  if (tab.size() != 3) throw std::invalid_argument("expected a chart point (t, a, b)");
  if (tab[2] == 0) throw std::invalid_argument("deck transformation needs b != 0");
  const mpq_class& t = tab[0];
  const mpq_class& a = tab[1];
  const mpq_class& b = tab[2];
  return {-t, a - 2 * t / b, b};
}

}  // namespace affhecke
