#include "lie/kernels.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include <omp.h>

namespace lie::kernels {

namespace {

std::vector<std::vector<Weight>> dominant_levels(const Weight& lambda, const Subsystem& a) {
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::deque<Weight> queue{lambda};
  std::vector<std::vector<Weight>> levels;
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    Rational lv = a.height(lambda - mu);
    auto idx = static_cast<std::size_t>(lv.numerator());
    if (levels.size() <= idx) levels.resize(idx + 1);
    levels[idx].push_back(mu);
    for (const auto& alpha : a.positive_roots()) {
      Weight nu = mu - alpha;
      if (a.is_dominant(nu) && seen.insert(nu).second) queue.push_back(nu);
    }
  }
  for (auto& l : levels) std::sort(l.begin(), l.end());
  return levels;
}

long long freudenthal_step(const Weight& mu, const Character& table, const Subsystem& a,
                           const Rational& top) {
  Weight rho = a.rho();
  Rational sum = 0;
  for (const auto& alpha : a.positive_roots()) {
    Weight x = mu + alpha;
    for (;;) {
      auto it = table.find(a.dominant_rep(x));
      if (it == table.end()) break;
      sum += Rational(it->second) * a.pair(x, alpha);
      x += alpha;
    }
  }
  Weight mr = mu + rho;
  Rational denom = top - a.norm2(mr);
  if (denom <= 0) throw std::logic_error("freudenthal: nonpositive denominator at " + mu.str());
  Rational m = Rational(2) * sum / denom;
  if (!is_integer(m) || m < 0) throw std::logic_error("freudenthal: bad multiplicity at " + mu.str());
  return m.numerator();
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

Character dominant_multiplicities(const Weight& lambda, const Subsystem& a, Exec exec) {
  if (!a.is_dominant(lambda) || !a.is_integral(lambda))
    throw std::invalid_argument("highest weight " + lambda.str() + " is not dominant integral");
  auto levels = dominant_levels(lambda, a);
  const Rational top = a.norm2(lambda + a.rho());
  Character table;
  table[lambda] = 1;
  for (std::size_t lv = 1; lv < levels.size(); ++lv) {
    const auto& ws = levels[lv];
    std::vector<long long> mult(ws.size());
    const auto n = static_cast<long long>(ws.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long long i = 0; i < n; ++i) mult[i] = freudenthal_step(ws[i], table, a, top);
    } else {
      for (long long i = 0; i < n; ++i) mult[i] = freudenthal_step(ws[i], table, a, top);
    }
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (mult[i] != 0) table[ws[i]] = mult[i];
  }
  return table;
}

Character convolve(const Character& x, const Character& y, Exec exec) {
  Character out;
  if (exec == Exec::serial) {
    for (const auto& [wa, ma] : x)
      for (const auto& [wb, mb] : y) out[wa + wb] += ma * mb;
  } else {
    std::vector<std::pair<Weight, long long>> xs(x.begin(), x.end());
    std::sort(xs.begin(), xs.end());
    const auto n = static_cast<long long>(xs.size());
#pragma omp parallel
    {
      Character local;
#pragma omp for schedule(static)
      for (long long i = 0; i < n; ++i)
        for (const auto& [wb, mb] : y) local[xs[i].first + wb] += xs[i].second * mb;
#pragma omp critical
      for (const auto& [w, m] : local) out[w] += m;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace lie::kernels
