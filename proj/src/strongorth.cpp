#include "lie/strongorth.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lie {

namespace {

bool lex_greater(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Weight> orthogonal_candidates(const HermitianPair& h, const std::vector<Weight>& chosen) {
  std::vector<Weight> out;
  for (const auto& b : h.delta_m2) {
    bool ok = true;
    for (const auto& g : chosen)
      if (h.k.pair(b, g) != 0) { ok = false; break; }
    if (ok) out.push_back(b);
  }
  return out;
}

std::string eps_component_type(const HermitianPair& h) {
  for (const auto& comp : h.k.components())
    if (std::find(comp.begin(), comp.end(), h.eps_index) != comp.end()) return h.k.component_type(comp);
  throw std::logic_error("eps has no component");
}

}  // namespace

Cascade cascade(const HermitianPair& h) {
  Cascade c;
  c.gammas.push_back(-h.epsilon);
  for (;;) {
    auto cand = orthogonal_candidates(h, c.gammas);
    if (cand.empty()) break;
    auto best = cand.front();
    auto best_coords = h.k.coordinates(best);
    for (const auto& b : cand) {
      auto bc = h.k.coordinates(b);
      if (lex_greater(bc, best_coords)) {
        best = b;
        best_coords = std::move(bc);
      }
    }
    c.gammas.push_back(best);
  }
  c.r = static_cast<int>(c.gammas.size());
  return c;
}

SumCheck verify_sum(const Cascade& c, const HermitianPair& h) {
  SumCheck out;
  out.sum = h.k.zero();
  for (const auto& g : c.gammas) out.sum += g;
  bool multiple = false;
  if (!out.sum.is_zero()) {
    std::optional<Rational> r;
    multiple = true;
    for (int i = 0; i < out.sum.rank(); ++i) {
      if (h.eps_star[i] == 0) {
        if (out.sum[i] != 0) multiple = false;
        continue;
      }
      Rational q = out.sum[i] / h.eps_star[i];
      if (r && *r != q) multiple = false;
      r = q;
    }
  }
  out.nonzero_multiple_of_eps_star = multiple;
  if (!h.tube) {
    out.status = SumStatus::hypothesis_not_met;
    return out;
  }
  Weight target = h.eps_star;
  target *= Rational(-2);
  out.status = out.sum == target ? SumStatus::holds : SumStatus::fails;
  return out;
}

bool verify_partial_orthogonality(const Cascade& c, const HermitianPair& h, std::string* why) {
  Weight s = h.k.zero();
  for (int j = 0; j < c.r; ++j) {
    s += c.gammas[j];
    auto coords = h.k.coordinates(s);
    for (int i : h.l_indices) {
      if (coords[i] == 0) continue;
      if (h.k.pair(s, h.k.simple(i)) != 0) {
        if (why) *why = "j=" + std::to_string(j + 1) + " alpha_" + std::to_string(i + 1) + " pairing " +
                        to_string(h.k.pair(s, h.k.simple(i)));
        return false;
      }
    }
  }
  return true;
}

bool w_action_checks(const Cascade& c, const HermitianPair& h, std::mt19937_64& rng, int samples,
                     std::string* why) {
  auto fail = [&](std::string m) {
    if (why) *why = std::move(m);
    return false;
  };
  if (!h.tube) return fail("not tube type");
  const int r = c.r;
  const Rational e2 = h.k.norm2(h.epsilon);
  for (int j = 0; j < r; ++j) {
    const Weight& mirror = c.gammas[r - 1 - j];
    if (h.k.act(h.w_l0, c.gammas[j]) != mirror) return fail("w_l0 gamma_" + std::to_string(j + 1));
    if (-h.w_Y(c.gammas[j]) != mirror) return fail("-w_Y gamma_" + std::to_string(j + 1));
    if (h.k.norm2(c.gammas[j]) != e2) return fail("length of gamma_" + std::to_string(j + 1));
  }
  if (std::find(c.gammas.begin(), c.gammas.end(), -h.mu) == c.gammas.end()) return fail("-mu not in cascade");
  Weight target = h.eps_star;
  target *= Rational(-2);
  const std::size_t len0 = h.w_l0.length();
  std::uniform_int_distribution<std::size_t> len_dist(0, 3 * len0 + 3);
  for (int s = 0; s < samples; ++s) {
    WeylWord w;
    if (!h.l_indices.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, h.l_indices.size() - 1);
      std::size_t n = len_dist(rng);
      for (std::size_t i = 0; i < n; ++i) w.word.push_back(h.l_indices[pick(rng)]);
    }
    Weight sum = h.k.zero();
    for (const auto& g : c.gammas) sum += h.k.act(w, g);
    if (sum != target) return fail("random W(l) word breaks the sum");
  }
  return true;
}

bool strongly_orthogonal_set(const std::vector<Weight>& roots, const Subsystem& k) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (k.pair(roots[i], roots[j]) != 0) return false;
      if (k.is_root(roots[i] + roots[j]) || k.is_root(roots[i] - roots[j])) return false;
    }
  return true;
}

int max_orthogonal_subset(const std::vector<Weight>& roots, const Pairing& form) {
  const std::size_t n = roots.size();
  std::vector<std::vector<bool>> orth(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) orth[i][j] = form(roots[i], roots[j]) == 0;
  int best = 0;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    best = std::max(best, static_cast<int>(cur.size()));
    if (cur.size() + (n - start) <= static_cast<std::size_t>(best)) return;
    for (std::size_t i = start; i < n; ++i) {
      bool ok = true;
      for (auto j : cur)
        if (!orth[i][j]) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return best;
}

bool greedy_steps_have_unique_maximum(const HermitianPair& h) {
  std::vector<Weight> chosen{-h.epsilon};
  for (;;) {
    auto cand = orthogonal_candidates(h, chosen);
    if (cand.empty()) return true;
    std::vector<Weight> maximal;
    for (const auto& a : cand) {
      bool dominated = false;
      for (const auto& b : cand) {
        if (a == b) continue;
        auto d = h.k.coordinates(b - a);
        if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return x >= 0; })) {
          dominated = true;
          break;
        }
      }
      if (!dominated) maximal.push_back(a);
    }
    if (maximal.size() != 1) return false;
    chosen.push_back(maximal.front());
  }
}

int expected_split_rank(const HermitianPair& h) {
  const std::string t = eps_component_type(h);
  const int n = std::stoi(t.substr(1));
  const int s = static_cast<int>(h.delta2.size());
  switch (t[0]) {
    case 'A':
      // p + q = n + 1, pq = s
      for (int p = 1; p <= n; ++p)
        if (p * (n + 1 - p) == s) return std::min(p, n + 1 - p);
      break;
    case 'B':
      return 2;
    case 'C':
      return n;
    case 'D':
      return s == 2 * n - 2 ? 2 : n / 2;
    case 'E':
      return n == 6 ? 2 : 3;
  }
  throw std::logic_error("no Hermitian family for " + t);
}

}  // namespace lie
