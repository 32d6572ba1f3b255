#include "lie/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace lie {

WeylWord operator*(const WeylWord& u, const WeylWord& v) {
  WeylWord out = u;
  out.word.insert(out.word.end(), v.word.begin(), v.word.end());
  return out;
}

Pairing::Pairing(const std::vector<std::vector<Rational>>& gram) : n_(static_cast<int>(gram.size())) {
  if (n_ > kMaxRank) throw std::invalid_argument("pairing dimension exceeds kMaxRank");
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(gram[i].size()) != n_) throw std::invalid_argument("gram matrix not square");
    for (int j = 0; j < n_; ++j) g_[i][j] = gram[i][j];
  }
}

Rational Pairing::operator()(const Weight& a, const Weight& b) const {
  if (a.rank() != n_ || b.rank() != n_) throw std::invalid_argument("pairing: dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < n_; ++j)
      if (b[j] != 0 && g_[i][j] != 0) row += g_[i][j] * b[j];
    s += a[i] * row;
  }
  return s;
}

Pairing Pairing::scaled(const Rational& f) const {
  Pairing p = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) p.g_[i][j] *= f;
  return p;
}

std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("solve: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// ---------------------------------------------------------------- Subsystem

Subsystem::Subsystem(Pairing form, std::vector<Weight> simple)
    : form_(std::move(form)), simple_(std::move(simple)) {
  const int n = form_.dim();
  for (const auto& a : simple_) {
    if (a.rank() != n) throw std::invalid_argument("subsystem: simple root of wrong rank");
    if (form_(a, a) <= 0) throw std::invalid_argument("subsystem: simple root must have positive norm");
  }
  corow_.resize(simple_.size());
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    Rational inv = Rational(2) / form_(simple_[i], simple_[i]);
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < n; ++k) s += form_.gram(j, k) * simple_[i][k];
      corow_[i][j] = s * inv;
    }
  }
  // height_vec_: the element x of span(simple) with <alpha_i, x> = 1.
  height_vec_ = zero();
  if (!simple_.empty()) {
    const int s = size();
    std::vector<std::vector<Rational>> g(s, std::vector<Rational>(s));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) g[i][j] = form_(simple_[i], simple_[j]);
    auto c = solve(g, std::vector<Rational>(s, Rational(1)));
    for (int i = 0; i < s; ++i) height_vec_ += c[i] * simple_[i];
  }
  // Roots: orbit of the simple roots under the simple reflections.
  std::deque<Weight> queue(simple_.begin(), simple_.end());
  roots_.insert(simple_.begin(), simple_.end());
  while (!queue.empty()) {
    Weight r = queue.front();
    queue.pop_front();
    for (int i = 0; i < size(); ++i) {
      Weight s = reflect(i, r);
      if (roots_.insert(s).second) queue.push_back(s);
    }
  }
  rho_ = zero();
  for (const auto& r : roots_)
    if (height(r) > 0) pos_.push_back(r);
  std::sort(pos_.begin(), pos_.end(), [this](const Weight& a, const Weight& b) {
    Rational ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (const auto& r : pos_) rho_ += r;
  rho_ *= Rational(1, 2);
}

std::vector<Weight> Subsystem::roots() const {
  std::vector<Weight> out;
  out.reserve(2 * pos_.size());
  for (const auto& r : pos_) out.push_back(r);
  for (const auto& r : pos_) out.push_back(-r);
  return out;
}

Rational Subsystem::coroot(const Weight& w, int i) const {
  Rational s = 0;
  const auto& row = corow_[i];
  for (int j = 0; j < w.rank(); ++j)
    if (w[j] != 0 && row[j] != 0) s += w[j] * row[j];
  return s;
}

Rational Subsystem::coroot(const Weight& w, const Weight& alpha) const {
  return Rational(2) * form_(w, alpha) / form_(alpha, alpha);
}

Weight Subsystem::reflect(int i, const Weight& w) const {
  Rational c = coroot(w, i);
  if (c == 0) return w;
  return w - c * simple_[i];
}

Weight Subsystem::reflect_by(const Weight& alpha, const Weight& w) const {
  Rational c = coroot(w, alpha);
  if (c == 0) return w;
  return w - c * alpha;
}

Weight Subsystem::act(const WeylWord& u, const Weight& w) const {
  Weight v = w;
  for (auto it = u.word.rbegin(); it != u.word.rend(); ++it) {
    if (*it < 0 || *it >= size()) throw std::out_of_range("Weyl word index out of range");
    v = reflect(*it, v);
  }
  return v;
}

std::vector<int> Subsystem::all_indices() const {
  std::vector<int> idx(simple_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return idx;
}

WeylWord Subsystem::longest_element(const std::vector<int>& subset) const {
  // Drive the subset's rho (regular dominant for the subset) to the antidominant chamber.
  Weight v = sub(subset).rho();
  std::vector<int> seq;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : subset) {
      if (coroot(v, i) > 0) {
        v = reflect(i, v);
        seq.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return {std::vector<int>(seq.rbegin(), seq.rend())};
}

std::pair<Weight, WeylWord> Subsystem::to_dominant(const Weight& w, const std::vector<int>& subset) const {
  Weight v = w;
  std::vector<int> seq;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : subset) {
      if (coroot(v, i) < 0) {
        v = reflect(i, v);
        seq.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return {v, WeylWord{std::vector<int>(seq.rbegin(), seq.rend())}};
}

Weight Subsystem::dominant_rep(Weight w, int* parity) const {
  int len = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < size(); ++i) {
      Rational c = coroot(w, i);
      if (c < 0) {
        w -= c * simple_[i];
        ++len;
        moved = true;
      }
    }
  }
  if (parity) *parity = len & 1;
  return w;
}

bool Subsystem::same_element(const WeylWord& u, const WeylWord& v) const {
  // rho is regular, so only the identity fixes it.
  return act(u, rho_) == act(v, rho_);
}

bool Subsystem::is_dominant(const Weight& w) const {
  for (int i = 0; i < size(); ++i)
    if (coroot(w, i) < 0) return false;
  return true;
}

bool Subsystem::is_integral(const Weight& w) const {
  for (int i = 0; i < size(); ++i)
    if (!lie::is_integer(coroot(w, i))) return false;
  return true;
}

std::vector<Rational> Subsystem::dynkin_labels(const Weight& w) const {
  std::vector<Rational> out(size());
  for (int i = 0; i < size(); ++i) out[i] = coroot(w, i);
  return out;
}

std::vector<Rational> Subsystem::coordinates(const Weight& w) const {
  const int s = size();
  if (s == 0) {
    if (!w.is_zero()) throw std::domain_error("coordinates: weight outside span");
    return {};
  }
  std::vector<std::vector<Rational>> g(s, std::vector<Rational>(s));
  std::vector<Rational> rhs(s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) g[i][j] = form_(simple_[j], simple_[i]);
    rhs[i] = form_(w, simple_[i]);
  }
  auto c = solve(g, rhs);
  Weight back = zero();
  for (int i = 0; i < s; ++i) back += c[i] * simple_[i];
  if (back != w) throw std::domain_error("coordinates: weight outside span " + w.str());
  return c;
}

bool Subsystem::in_span(const Weight& w) const {
  try {
    coordinates(w);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

bool Subsystem::is_positive_root(const Weight& w) const { return is_root(w) && height(w) > 0; }

Subsystem Subsystem::sub(const std::vector<int>& subset) const {
  std::vector<Weight> s;
  s.reserve(subset.size());
  for (int i : subset) s.push_back(simple_.at(i));
  return Subsystem(form_, std::move(s));
}

std::vector<std::vector<int>> Subsystem::components() const {
  const int n = size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i}, members;
    comp[i] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      members.push_back(a);
      for (int b = 0; b < n; ++b)
        if (comp[b] < 0 && form_(simple_[a], simple_[b]) != 0) {
          comp[b] = comp[i];
          stack.push_back(b);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

std::string Subsystem::component_type(const std::vector<int>& comp) const {
  const int n = static_cast<int>(comp.size());
  if (n == 0) return "";
  if (n == 1) return "A1";
  std::map<int, std::vector<int>> adj;
  int max_bond = 1;
  std::pair<int, int> multi{-1, -1};
  for (int a : comp)
    for (int b : comp) {
      if (a >= b) continue;
      if (form_(simple_[a], simple_[b]) == 0) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
      Rational prod = coroot(simple_[a], b) * coroot(simple_[b], a);
      int bond = static_cast<int>(prod.numerator());
      if (bond > max_bond) {
        max_bond = bond;
        multi = {a, b};
      }
    }
  if (max_bond == 3) return "G2";
  if (max_bond == 2) {
    if (n == 2) return "B2";
    auto [a, b] = multi;
    bool a_end = adj[a].size() == 1, b_end = adj[b].size() == 1;
    if (!a_end && !b_end) return "F4";
    int end = a_end ? a : b, other = a_end ? b : a;
    bool end_short = norm2(simple_[end]) < norm2(simple_[other]);
    return std::string(end_short ? "B" : "C") + std::to_string(n);
  }
  int branch = -1;
  for (int a : comp)
    if (adj[a].size() == 3) branch = a;
  if (branch < 0) return "A" + std::to_string(n);
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  return "E" + std::to_string(n);
}

std::size_t Subsystem::weyl_group_order() const {
  std::size_t order = 1;
  auto fact = [](int k) {
    std::size_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
    return f;
  };
  for (const auto& comp : components()) {
    std::string t = component_type(comp);
    int n = std::stoi(t.substr(1));
    switch (t[0]) {
      case 'A': order *= fact(n + 1); break;
      case 'B':
      case 'C': order *= (std::size_t{1} << n) * fact(n); break;
      case 'D': order *= (std::size_t{1} << (n - 1)) * fact(n); break;
      case 'E': order *= n == 6 ? 51840 : n == 7 ? 2903040 : 696729600; break;
      case 'F': order *= 1152; break;
      case 'G': order *= 12; break;
    }
  }
  return order;
}

// ---------------------------------------------------------------- RootSystem

bool RootSystem::valid_pair(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1 && rank <= kMaxRank;
    case 'B':
    case 'C': return rank >= 2 && rank <= kMaxRank;
    case 'D': return rank >= 4 && rank <= kMaxRank;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

RootSystem RootSystem::build(char type, int rank) {
  if (!valid_pair(type, rank))
    throw std::invalid_argument("invalid root system (" + std::string(1, type) + ", " +
                                std::to_string(rank) + ")");
  const int n = rank;
  // Squared lengths with long roots = 2, and the Dynkin edges (0-based).
  std::vector<Rational> len(n, Rational(2));
  std::vector<std::pair<int, int>> edges;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
  };
  switch (type) {
    case 'A': chain(n); break;
    case 'B': chain(n); len[n - 1] = 1; break;
    case 'C':
      chain(n);
      for (int i = 0; i < n - 1; ++i) len[i] = 1;
      break;
    case 'D':
      chain(n - 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'F':
      chain(4);
      len[2] = len[3] = 1;
      break;
    case 'G':
      chain(2);
      len[0] = Rational(2, 3);
      break;
  }
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) gram[i][i] = len[i];
  for (auto [a, b] : edges) {
    Rational v = -std::max(len[a], len[b]) / 2;
    gram[a][b] = gram[b][a] = v;
  }
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = n;
  std::vector<Weight> simple;
  for (int i = 0; i < n; ++i) {
    Weight e(n);
    e[i] = 1;
    simple.push_back(e);
  }
  rs.full_ = Subsystem(Pairing(gram), simple);
  rs.cartan_.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.cartan_[i][j] = static_cast<int>(rs.full_.coroot(simple[i], j).numerator());
  for (const auto& r : rs.full_.positive_roots()) rs.all_.push_back(r);
  for (const auto& r : rs.full_.positive_roots()) rs.all_.push_back(-r);
  rs.highest_ = rs.full_.positive_roots().back();
  for (const auto& r : rs.full_.positive_roots())
    if (rs.full_.height(r) > rs.full_.height(rs.highest_)) rs.highest_ = r;
  // Fundamental weights: rows of the inverse Cartan matrix.
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<Rational>> at(n, std::vector<Rational>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) at[r][c] = rs.cartan_[c][r];
    std::vector<Rational> e(n);
    e[i] = 1;
    auto x = solve(at, e);
    Weight w(n);
    for (int k = 0; k < n; ++k) w[k] = x[k];
    rs.fund_.push_back(w);
  }
  return rs;
}

RootSystem RootSystem::rescaled(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("rescale factor must be positive");
  RootSystem rs = *this;
  rs.scale_ = scale_ * factor;
  rs.full_ = Subsystem(form().scaled(factor), full_.simples());
  return rs;
}

Rational RootSystem::pair(const Weight& a, const Weight& b) const {
  if (a.rank() != rank_ || b.rank() != rank_) throw std::invalid_argument("pair: dimension mismatch");
  return full_.pair(a, b);
}

Weight RootSystem::fundamental_weight(int i) const { return fund_.at(i); }

Weight RootSystem::from_fundamental(const std::vector<Rational>& labels) const {
  if (static_cast<int>(labels.size()) != rank_) throw std::invalid_argument("from_fundamental: wrong length");
  Weight w = zero();
  for (int i = 0; i < rank_; ++i) w += labels[i] * fund_[i];
  return w;
}

}  // namespace lie
