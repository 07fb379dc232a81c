#include "affhecke/rootdata.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "affhecke/errors.hpp"

namespace affhecke {

std::vector<Weight> weight_box(std::size_t rank, int radius) {
  std::vector<Weight> out;
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = -radius;
  if (rank == 0) return {w};
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < rank && w[i] == radius) w[i++] = -radius;
    if (i == rank) break;
    ++w[i];
  }
  return out;
}

namespace {

constexpr std::size_t kMaxPositiveRoots = 4096;
constexpr std::size_t kMaxHullCandidates = 20'000'000;

void check_type(char letter, std::size_t rank) {
  bool ok = false;
  switch (letter) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok)
    throw std::invalid_argument("invalid Cartan type " + std::string(1, letter) +
                                std::to_string(rank));
}

void bond(IntMatrix& a, std::size_t i, std::size_t j) {
  a(i, j) = -1;
  a(j, i) = -1;
}

long abs_determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  det = abs(det);
  return det.get_num().get_si();
}

// Connected components of the Dynkin graph, each as a sorted index list.
std::vector<std::vector<std::size_t>> dynkin_components(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{s};
    comp[s] = static_cast<int>(out.size());
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && a(i, j) != 0 && comp[j] < 0) {
          comp[j] = comp[s];
          queue.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

IntMatrix cartan_matrix(char letter, std::size_t n) {
  check_type(letter, n);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  switch (letter) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) bond(a, i, i + 1);
      bond(a, n - 3, n - 1);
      break;
    case 'E':
      bond(a, 0, 2);
      bond(a, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case 'F':
      bond(a, 0, 1);
      bond(a, 1, 2);
      bond(a, 2, 3);
      a(2, 1) = -2;  // alpha_3 short, alpha_2 long
      break;
    case 'G':
      a(0, 1) = -3;  // alpha_1 short
      a(1, 0) = -1;
      break;
    default:
      break;
  }
  return a;
}

RootDatum RootDatum::from_type(std::string_view spec) {
  std::vector<Component> comps;
  std::size_t pos = 0;
  std::size_t total = 0;
  if (spec.empty()) throw std::invalid_argument("empty root datum specification");
  while (pos < spec.size()) {
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[pos])));
    if (letter < 'A' || letter > 'G')
      throw std::invalid_argument("invalid type letter in '" + std::string(spec) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("missing rank in '" + std::string(spec) + "'");
    std::size_t r = std::stoul(std::string(spec.substr(start, pos - start)));
    check_type(letter, r);
    comps.push_back({letter, r, total, 0, 0});
    total += r;
    if (pos < spec.size()) {
      if (spec[pos] != 'x' && spec[pos] != 'X')
        throw std::invalid_argument("expected 'x' between factors in '" + std::string(spec) + "'");
      ++pos;
      if (pos == spec.size())
        throw std::invalid_argument("dangling 'x' in '" + std::string(spec) + "'");
    }
  }
  if (total > kMaxRank)
    throw std::invalid_argument("total rank " + std::to_string(total) + " exceeds " +
                                std::to_string(kMaxRank));
  RootDatum d;
  d.cartan_ = IntMatrix(total);
  for (const auto& c : comps) {
    IntMatrix block = cartan_matrix(c.letter, c.rank);
    for (std::size_t i = 0; i < c.rank; ++i)
      for (std::size_t j = 0; j < c.rank; ++j) d.cartan_(c.offset + i, c.offset + j) = block(i, j);
  }
  d.build(std::move(comps));
  return d;
}

RootDatum RootDatum::from_cartan(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("Cartan matrix must have rank >= 1");
  if (n > kMaxRank) throw std::invalid_argument("Cartan matrix rank exceeds the supported maximum");
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 2)
      throw std::invalid_argument("not a Cartan matrix: diagonal entry (" + std::to_string(i) +
                                  "," + std::to_string(i) + ") is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0)
        throw std::invalid_argument("not a Cartan matrix: positive off-diagonal entry (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      if ((a(i, j) == 0) != (a(j, i) == 0))
        throw std::invalid_argument("not a Cartan matrix: entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") vanishes but its transpose does not");
    }
  }

  auto groups = dynkin_components(a);
  // Reorder simple roots so components are contiguous; require that they
  // already are, since reordering would silently change coordinates.
  std::size_t expect = 0;
  for (const auto& g : groups)
    for (std::size_t idx : g) {
      if (idx != expect)
        throw std::invalid_argument(
            "Cartan matrix components must occupy contiguous index blocks");
      ++expect;
    }

  RootDatum d;
  d.cartan_ = a;
  std::vector<Component> comps;
  for (const auto& g : groups) comps.push_back({'?', g.size(), g.front(), 0, 0});
  d.build(std::move(comps));  // fills roots; letters classified below

  for (auto& c : d.components_) {
    std::size_t count = 0;
    int max_mult = 1;
    std::size_t short_node = 0, long_node = 0;
    for (std::size_t i = 0; i < c.rank; ++i)
      for (std::size_t j = 0; j < c.rank; ++j) {
        int e = -a(c.offset + i, c.offset + j);
        if (i != j && e > max_mult) {
          max_mult = e;
          short_node = i;  // <alpha_j, alpha_i^vee> = -e: alpha_i short
          long_node = j;
        }
      }
    for (const auto& rc : d.positive_root_coords_) {
      bool inside = false;
      for (std::size_t i = 0; i < c.rank; ++i) inside = inside || rc[c.offset + i] != 0;
      count += inside;
    }
    const std::size_t r = c.rank;
    auto degree = [&](std::size_t i) {
      int deg = 0;
      for (std::size_t j = 0; j < r; ++j) deg += (j != i && a(c.offset + i, c.offset + j) != 0);
      return deg;
    };
    if (max_mult == 3) {
      c.letter = 'G';
    } else if (max_mult == 2) {
      if (r == 4 && count == 24) c.letter = 'F';
      else if (r == 2 || degree(short_node) == 1) c.letter = 'B';
      else if (degree(long_node) == 1) c.letter = 'C';
      else throw std::invalid_argument("unrecognised doubly-laced Cartan matrix");
    } else {
      if (count == r * (r + 1) / 2) c.letter = 'A';
      else if (r >= 4 && count == r * (r - 1)) c.letter = 'D';
      else if ((r == 6 && count == 36) || (r == 7 && count == 63) || (r == 8 && count == 120))
        c.letter = 'E';
      else throw std::invalid_argument("unrecognised simply-laced Cartan matrix");
    }
  }
  return d;
}

void RootDatum::build(std::vector<Component> comps) {
  const std::size_t n = cartan_.size();
  components_ = std::move(comps);
  simple_roots_.clear();
  simple_coroots_.clear();
  for (std::size_t j = 0; j < n; ++j) {
    Weight col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = cartan_(i, j);
    simple_roots_.push_back(col);
    simple_coroots_.push_back(Weight::unit(n, j));
  }

  // Close the simple roots under simple reflections inside the positive
  // cone, carrying coroots along: (beta, beta^vee) -> (s_i beta, s_i beta^vee).
  std::vector<Weight> coords, coroots;
  std::set<Weight> seen;
  std::deque<std::size_t> queue;
  for (std::size_t j = 0; j < n; ++j) {
    coords.push_back(Weight::unit(n, j));
    coroots.push_back(Weight::unit(n, j));
    seen.insert(coords.back());
    queue.push_back(j);
  }
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      long pair = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < n; ++j) pair += static_cast<long>(cartan_(i, j)) * coords[k][j];
      if (pair == 0) continue;
      Weight c = coords[k];
      c[i] -= static_cast<int>(pair);
      bool positive = true, nonzero = false;
      for (std::size_t j = 0; j < n; ++j) {
        positive = positive && c[j] >= 0;
        nonzero = nonzero || c[j] != 0;
      }
      if (!positive || !nonzero || seen.count(c)) continue;
      long cpair = 0;  // <alpha_i, beta^vee>
      for (std::size_t j = 0; j < n; ++j) cpair += static_cast<long>(coroots[k][j]) * cartan_(j, i);
      Weight cv = coroots[k];
      cv[i] -= static_cast<int>(cpair);
      seen.insert(c);
      coords.push_back(c);
      coroots.push_back(cv);
      queue.push_back(coords.size() - 1);
      if (coords.size() > kMaxPositiveRoots)
        throw std::invalid_argument(
            "not a Cartan matrix of finite type: positive root generation does not terminate "
            "within " + std::to_string(kMaxPositiveRoots) + " roots");
    }
  }

  // Deterministic order: by height, then coordinates.
  std::vector<std::size_t> order(coords.size());
  std::iota(order.begin(), order.end(), 0);
  auto height = [&](std::size_t k) {
    int h = 0;
    for (std::size_t j = 0; j < n; ++j) h += coords[k][j];
    return h;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : coords[x] < coords[y];
  });
  positive_root_coords_.clear();
  positive_coroots_.clear();
  positive_roots_.clear();
  root_lookup_.clear();
  for (std::size_t k : order) {
    positive_root_coords_.push_back(coords[k]);
    positive_coroots_.push_back(coroots[k]);
    Weight wt(n);
    for (std::size_t i = 0; i < n; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += static_cast<long>(cartan_(i, j)) * coords[k][j];
      wt[i] = static_cast<int>(s);
    }
    positive_roots_.push_back(wt);
  }
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    root_lookup_[positive_roots_[k]] = static_cast<int>(k + 1);
    root_lookup_[-positive_roots_[k]] = -static_cast<int>(k + 1);
  }

  rho_ = Weight(n);
  for (std::size_t i = 0; i < n; ++i) rho_[i] = 1;

  for (auto& c : components_) {
    std::size_t count = 0;
    int best_height = -1, best_coheight = -1;
    for (std::size_t k = 0; k < positive_root_coords_.size(); ++k) {
      const Weight& rc = positive_root_coords_[k];
      const Weight& cc = positive_coroots_[k];
      int h = 0, ch = 0;
      bool inside = false;
      for (std::size_t i = 0; i < c.rank; ++i) {
        h += rc[c.offset + i];
        ch += cc[c.offset + i];
        inside = inside || rc[c.offset + i] != 0;
      }
      if (!inside) continue;
      ++count;
      if (h > best_height) {
        best_height = h;
        c.highest_root = k;
      }
      if (ch > best_coheight) {
        best_coheight = ch;
        c.highest_short_root = k;
      }
    }
    c.coxeter_number = static_cast<int>(2 * count / c.rank);
  }

  det_ = abs_determinant(cartan_);
  scaled_inverse_ = IntMatrix(n);
  {
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = cartan_(i, j);
      m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (m[p][c] == 0) ++p;
      std::swap(m[p], m[c]);
      mpq_class piv = m[c][c];
      for (auto& e : m[c]) e /= piv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m[r][c] == 0) continue;
        mpq_class f = m[r][c];
        for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class v = m[i][n + j] * det_;
        if (v.get_den() != 1) throw std::logic_error("scaled inverse Cartan matrix is not integral");
        scaled_inverse_(i, j) = static_cast<int>(v.get_num().get_si());
      }
  }
  std::uint64_t f = 1469598103934665603ull;
  f = (f ^ n) * 1099511628211ull;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      f = (f ^ static_cast<std::uint64_t>(cartan_(i, j) + 16)) * 1099511628211ull;
  fingerprint_ = f;
}

std::string RootDatum::type_string() const {
  std::string s;
  for (const auto& c : components_) {
    if (!s.empty()) s += "x";
    s += c.name();
  }
  return s;
}

int RootDatum::coxeter_number() const {
  int h = 0;
  for (const auto& c : components_) h = std::max(h, c.coxeter_number);
  return h;
}

int RootDatum::n_G() const {
  bool f4 = false, g2 = false;
  for (const auto& c : components_) {
    f4 = f4 || c.letter == 'F';
    g2 = g2 || c.letter == 'G';
  }
  return (f4 ? 2 : 1) * (g2 ? 3 : 1);
}

long RootDatum::pairing(const Weight& x, const Weight& coroot) const {
  if (x.rank() != rank() || coroot.rank() != rank())
    throw std::invalid_argument("pairing: dimension mismatch (rank " + std::to_string(rank()) +
                                ", got " + std::to_string(x.rank()) + " and " +
                                std::to_string(coroot.rank()) + ")");
  return x.dot(coroot);
}

Weight RootDatum::reflect(std::size_t i, const Weight& x) const {
  Weight r = x;
  const int k = x[i];
  if (k == 0) return r;
  const Weight& a = simple_roots_[i];
  for (std::size_t j = 0; j < rank(); ++j) r[j] -= k * a[j];
  return r;
}

Weight RootDatum::reflect_root(std::size_t k, const Weight& x) const {
  long p = x.dot(positive_coroots_[k]);
  Weight r = x;
  const Weight& b = positive_roots_[k];
  for (std::size_t j = 0; j < rank(); ++j) r[j] -= static_cast<int>(p * b[j]);
  return r;
}

bool RootDatum::in_root_lattice(const Weight& x) const {
  if (x.rank() != rank()) throw std::invalid_argument("in_root_lattice: dimension mismatch");
  Weight y = scaled_inverse_.apply(x);
  for (std::size_t i = 0; i < rank(); ++i)
    if (y[i] % det_ != 0) return false;
  return true;
}

int RootDatum::root_index(const Weight& x) const {
  auto it = root_lookup_.find(x);
  return it == root_lookup_.end() ? 0 : it->second;
}

std::vector<Weight> RootDatum::orbit(const Weight& x) const {
  std::set<Weight> seen{x};
  std::deque<Weight> queue{x};
  while (!queue.empty()) {
    Weight y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rank(); ++i) {
      Weight z = reflect(i, y);
      if (seen.insert(z).second) queue.push_back(z);
    }
  }
  return {seen.begin(), seen.end()};
}

Weight RootDatum::dominant_representative(const Weight& x) const {
  Weight y = x;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < rank(); ++i)
      if (y[i] < 0) {
        y = reflect(i, y);
        moved = true;
      }
  }
  return y;
}

std::pair<std::vector<Weight>, std::vector<Weight>> RootDatum::conv_hull_weights(
    const Weight& x) const {
  if (x.rank() != rank()) throw std::invalid_argument("conv_hull_weights: dimension mismatch");
  const std::size_t n = rank();
  const std::vector<Weight> orb = orbit(x);
  const Weight dom = dominant_representative(x);

  // Half-spaces phi(mu) <= phi_i(dom) for phi in the W-orbit of the
  // fundamental coweight phi_i, where phi_i(mu) is the alpha_i-coefficient
  // of mu.  Functionals are scaled by det(A) to stay integral.
  struct HalfSpace {
    Weight phi;
    long bound;
  };
  std::vector<HalfSpace> halfspaces;
  for (std::size_t i = 0; i < n; ++i) {
    Weight phi(n);
    for (std::size_t j = 0; j < n; ++j) phi[j] = scaled_inverse_(i, j);
    const long bound = phi.dot(dom);
    // Orbit of phi under phi -> phi o s_j.
    std::set<Weight> seen{phi};
    std::deque<Weight> queue{phi};
    while (!queue.empty()) {
      Weight f = queue.front();
      queue.pop_front();
      halfspaces.push_back({f, bound});
      for (std::size_t j = 0; j < n; ++j) {
        long fa = f.dot(simple_roots_[j]);
        if (fa == 0) continue;
        Weight g = f;
        g[j] -= static_cast<int>(fa);
        if (seen.insert(g).second) queue.push_back(g);
      }
    }
  }

  Weight lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = hi[j] = orb.front()[j];
    for (const auto& y : orb) {
      lo[j] = std::min(lo[j], y[j]);
      hi[j] = std::max(hi[j], y[j]);
    }
  }
  double candidates = 1;
  for (std::size_t j = 0; j < n; ++j) candidates *= static_cast<double>(hi[j] - lo[j] + 1);
  if (candidates > static_cast<double>(kMaxHullCandidates))
    throw SizeError("conv_hull_weights: bounding box has too many lattice points");

  std::vector<Weight> conv, conv0;
  const std::set<Weight> orbit_set(orb.begin(), orb.end());
  Weight mu = lo;
  while (true) {
    bool inside = in_root_lattice(mu - x);
    for (std::size_t k = 0; inside && k < halfspaces.size(); ++k)
      if (halfspaces[k].phi.dot(mu) > halfspaces[k].bound) {
        inside = false;
        break;
      }
    if (inside) {
      conv.push_back(mu);
      if (!orbit_set.count(mu)) conv0.push_back(mu);
    }
    std::size_t j = 0;
    while (j < n && mu[j] == hi[j]) {
      mu[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++mu[j];
  }
  std::sort(conv.begin(), conv.end());
  std::sort(conv0.begin(), conv0.end());
  return {std::move(conv), std::move(conv0)};
}

}  // namespace affhecke
