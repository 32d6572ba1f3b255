#include "lie/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>

#include "lie/kernels.hpp"

namespace lie {

const char* tag_name(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::g: return "g";
    case AlgebraTag::k: return "k";
    case AlgebraTag::l: return "l";
  }
  return "?";
}

void TypeMultiset::add(const Weight& w, long long m) {
  if (m == 0) return;
  auto& slot = entries[w];
  slot += m;
  if (slot == 0) entries.erase(w);
}

long long TypeMultiset::mult(const Weight& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

long long TypeMultiset::count() const {
  long long n = 0;
  for (const auto& [w, m] : entries) n += m;
  return n;
}

long double weyl_dim_estimate(const Weight& lambda, const Subsystem& a) {
  long double d = 1;
  Weight lr = lambda + a.rho();
  for (const auto& alpha : a.positive_roots()) {
    Rational q = a.pair(lr, alpha) / a.pair(a.rho(), alpha);
    d *= static_cast<long double>(q.numerator()) / static_cast<long double>(q.denominator());
  }
  return d;
}

namespace {

void require_dominant(const Weight& lambda, const Subsystem& a) {
  if (!a.is_dominant(lambda) || !a.is_integral(lambda))
    throw std::invalid_argument("highest weight " + lambda.str() + " is not dominant integral");
}

}  // namespace

long long weyl_dim(const Weight& lambda, const Subsystem& a) {
  require_dominant(lambda, a);
  Rational d = 1;
  Weight lr = lambda + a.rho();
  for (const auto& alpha : a.positive_roots()) d *= a.pair(lr, alpha) / a.pair(a.rho(), alpha);
  if (!is_integer(d)) throw std::logic_error("weyl dimension is not an integer");
  return d.numerator();
}

std::vector<Weight> orbit(const Weight& dominant, const Subsystem& a) {
  std::unordered_set<Weight, WeightHash> seen{dominant};
  std::vector<Weight> out{dominant};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (a.coroot(out[i], j) == 0) continue;
      Weight r = a.reflect(j, out[i]);
      if (seen.insert(r).second) out.push_back(r);
    }
  }
  return out;
}

Character expand_dominant(const Character& dominant_part, const Subsystem& a) {
  Character out;
  for (const auto& [w, m] : dominant_part)
    for (const auto& x : orbit(w, a)) out[x] = m;
  return out;
}

Character dominant_character(const Weight& lambda, const Subsystem& a) {
  return kernels::dominant_multiplicities(lambda, a);
}

Character freudenthal(const Weight& lambda, const Subsystem& a, std::size_t guard) {
  require_dominant(lambda, a);
  long double dim = weyl_dim_estimate(lambda, a);
  if (dim > static_cast<long double>(guard)) throw GuardExceeded("V" + lambda.str(), dim, guard);
  Character full = expand_dominant(dominant_character(lambda, a), a);
  long long total = 0;
  for (const auto& [w, m] : full) total += m;
  if (total != weyl_dim(lambda, a)) throw std::logic_error("freudenthal: weight count differs from dimension");
  return full;
}

TypeMultiset decompose_character(const Character& chi, const Subsystem& a, AlgebraTag tag) {
  std::unordered_map<Weight, long long, WeightHash> rem;
  std::vector<Weight> order;
  for (const auto& [w, m] : chi) {
    if (m == 0 || !a.is_dominant(w)) continue;
    rem[w] = m;
    order.push_back(w);
  }
  std::sort(order.begin(), order.end(), [&](const Weight& x, const Weight& y) {
    Rational hx = a.height(x), hy = a.height(y);
    return hx != hy ? hx > hy : x < y;
  });
  TypeMultiset out;
  out.tag = tag;
  for (const auto& mu : order) {
    long long m = rem[mu];
    if (m == 0) continue;
    if (m < 0) throw std::logic_error("not a character: negative remainder at " + mu.str());
    out.add(mu, m);
    for (const auto& [w, k] : dominant_character(mu, a)) {
      auto it = rem.find(w);
      if (it == rem.end()) throw std::logic_error("not a character: missing weight " + w.str());
      it->second -= m * k;
    }
  }
  return out;
}

TypeMultiset klimyk(const Weight& lambda, const Character& m, const Subsystem& a, AlgebraTag tag) {
  require_dominant(lambda, a);
  const Weight rho = a.rho();
  std::map<Weight, long long> acc;
  for (const auto& [w, k] : m) {
    int parity = 0;
    Weight nu = a.dominant_rep(lambda + w + rho, &parity);
    bool regular = true;
    for (int i = 0; i < a.size(); ++i)
      if (a.coroot(nu, i) == 0) { regular = false; break; }
    if (!regular) continue;
    acc[nu - rho] += parity ? -k : k;
  }
  TypeMultiset out;
  out.tag = tag;
  for (const auto& [w, k] : acc) {
    if (k < 0) throw std::logic_error("klimyk: negative multiplicity at " + w.str());
    out.add(w, k);
  }
  return out;
}

TypeMultiset tensor_decompose(const Weight& l1, const Weight& l2, const Subsystem& a, AlgebraTag tag,
                              std::size_t guard) {
  require_dominant(l1, a);
  require_dominant(l2, a);
  bool first_small = weyl_dim_estimate(l1, a) <= weyl_dim_estimate(l2, a);
  const Weight& big = first_small ? l2 : l1;
  const Weight& small = first_small ? l1 : l2;
  return klimyk(big, freudenthal(small, a, guard), a, tag);
}

TypeMultiset branch_oracle(const Weight& lambda, const Subsystem& a, const std::vector<int>& levi,
                           AlgebraTag tag, std::size_t guard) {
  return decompose_character(freudenthal(lambda, a, guard), a.sub(levi), tag);
}

long long brauer_multiplicity(const Weight& lambda, const Character& chi, const Subsystem& a) {
  if (a.weyl_group_order() > 100000) throw std::invalid_argument("Weyl group too large for the alternating sum");
  const Weight rho = a.rho();
  std::unordered_set<Weight, WeightHash> seen{rho};
  std::vector<std::pair<Weight, int>> layer{{rho, 1}};
  long long total = 0;
  while (!layer.empty()) {
    std::vector<std::pair<Weight, int>> next;
    for (const auto& [x, sign] : layer) {
      auto it = chi.find(lambda + rho - x);
      if (it != chi.end()) total += sign * it->second;
      for (int j = 0; j < a.size(); ++j) {
        Weight r = a.reflect(j, x);
        if (seen.insert(r).second) next.push_back({r, -sign});
      }
    }
    layer = std::move(next);
  }
  return total;
}

std::vector<std::vector<int>> partitions(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == r) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  if (m >= 0) rec(rec, m, m);
  return out;
}

TypeMultiset schmid(int m, const Cascade& c, const HermitianPair& h) {
  TypeMultiset out;
  out.tag = AlgebraTag::k;
  for (const auto& p : partitions(m, c.r)) {
    Weight w = h.k.zero();
    for (std::size_t i = 0; i < p.size(); ++i) {
      Weight g = c.gammas[i];
      g *= Rational(p[i]);
      w += g;
    }
    out.add(w, 1);
  }
  return out;
}

long double binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long double r = 1;
  for (long long i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return std::round(r);
}

std::vector<Character> sym_power_characters(const Character& v, int m) {
  if (v.empty()) throw std::invalid_argument("empty character");
  const Weight zero(v.begin()->first.rank());
  std::vector<Character> h(m + 1);
  h[0][zero] = 1;
  std::vector<Character> p(m + 1);
  for (int k = 1; k <= m; ++k)
    for (const auto& [w, mult] : v) {
      Weight kw = w;
      kw *= Rational(k);
      p[k][kw] += mult;
    }
  for (int n = 1; n <= m; ++n) {
    Character acc;
    for (int k = 1; k <= n; ++k)
      for (const auto& [w, c] : kernels::convolve(p[k], h[n - k])) acc[w] += c;
    for (auto& [w, c] : acc) {
      if (c % n != 0) throw std::logic_error("newton identity: inexact division");
      c /= n;
      if (c != 0) h[n][w] = c;
    }
  }
  return h;
}

namespace {

Character u1_character(const BdsDatum& d) {
  Character v;
  for (const auto& b : d.Delta(-1)) v[b] += 1;
  return v;
}

void check_dimension(const TypeMultiset& t, const Subsystem& a, long double expected) {
  long double total = 0;
  for (const auto& [w, m] : t.entries) total += static_cast<long double>(m) * weyl_dim(w, a);
  if (total != expected) throw std::logic_error("decomposition dimension mismatch");
}

}  // namespace

TypeMultiset sym_power_u1(int m, const BdsDatum& d, std::size_t guard) {
  const long long n = static_cast<long long>(d.Delta(-1).size());
  long double dim = binomial(n + m - 1, m);
  if (dim > static_cast<long double>(guard)) throw GuardExceeded("S^" + std::to_string(m) + "(u_-1)", dim, guard);
  auto h = sym_power_characters(u1_character(d), m);
  auto t = decompose_character(h[m], d.l(), AlgebraTag::l);
  check_dimension(t, d.l(), dim);
  return t;
}

RelativeInvariantScan detect_relative_invariants(const BdsDatum& d, int m_max, std::size_t guard) {
  RelativeInvariantScan scan;
  const long long n = static_cast<long long>(d.Delta(-1).size());
  int m_last = 0;
  while (m_last < m_max && binomial(n + m_last, m_last + 1) <= static_cast<long double>(guard)) ++m_last;
  scan.m_checked = m_last;
  scan.guard_stopped = m_last < m_max;
  if (m_last == 0) return scan;
  auto h = sym_power_characters(u1_character(d), m_last);
  const Subsystem& l = d.l();
  for (int m = 1; m <= m_last; ++m) {
    auto t = decompose_character(h[m], l, AlgebraTag::l);
    check_dimension(t, l, binomial(n + m - 1, m));
    for (const auto& [w, k] : t.entries) {
      bool trivial = true;
      for (int i = 0; i < l.size(); ++i)
        if (l.coroot(w, i) != 0) { trivial = false; break; }
      if (trivial) scan.hits.push_back({m, w, k});
    }
  }
  return scan;
}

}  // namespace lie
