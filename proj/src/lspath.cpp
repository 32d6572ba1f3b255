#include "lie/lspath.hpp"

#include <algorithm>
#include <stdexcept>

namespace lie {

namespace {

bool positively_collinear(const Weight& a, const Weight& b) {
  int i = 0;
  while (i < a.rank() && a[i] == 0) ++i;
  if (i == a.rank()) return false;
  Rational r = b[i] / a[i];
  return r > 0 && b == r * a;
}

Rational l1_norm(const Weight& w) {
  Rational s = 0;
  for (int i = 0; i < w.rank(); ++i) s += abs(w[i]);
  return s;
}

Rational require_integral_min(const LSPath& p, const Subsystem& a, int alpha) {
  Rational m = p.min_height(a, alpha);
  if (!is_integer(m)) throw std::logic_error("path minimum " + to_string(m) + " is not integral");
  return m;
}

}  // namespace

LSPath::LSPath(std::vector<Weight> increments) {
  if (!increments.empty()) rank_ = increments.front().rank();
  for (auto& v : increments) {
    if (v.is_zero()) continue;
    if (!inc_.empty() && positively_collinear(inc_.back(), v)) {
      inc_.back() += v;
    } else {
      inc_.push_back(std::move(v));
    }
  }
}

Weight LSPath::endpoint() const {
  Weight e(rank_);
  for (const auto& v : inc_) e += v;
  return e;
}

std::vector<Weight> LSPath::vertices() const {
  std::vector<Weight> out;
  Weight e(rank_);
  for (const auto& v : inc_) {
    e += v;
    out.push_back(e);
  }
  return out;
}

std::vector<Rational> LSPath::heights(const Subsystem& a, int alpha) const {
  std::vector<Rational> h{0};
  for (const auto& v : inc_) h.push_back(h.back() + a.coroot(v, alpha));
  return h;
}

Rational LSPath::min_height(const Subsystem& a, int alpha) const {
  auto h = heights(a, alpha);
  return *std::min_element(h.begin(), h.end());
}

std::vector<std::pair<Weight, Rational>> LSPath::segments(const Pairing& form) const {
  std::vector<Rational> len;
  bool euclid = !inc_.empty();
  if (euclid) {
    Rational base = form(inc_[0], inc_[0]);
    for (const auto& v : inc_) {
      Rational r;
      if (!exact_sqrt(form(v, v) / base, r)) {
        euclid = false;
        break;
      }
      len.push_back(r);
    }
  }
  if (!euclid) {
    len.clear();
    for (const auto& v : inc_) len.push_back(l1_norm(v));
  }
  Rational total = 0;
  for (const auto& l : len) total += l;
  std::vector<std::pair<Weight, Rational>> out;
  for (std::size_t i = 0; i < inc_.size(); ++i) {
    Rational l = len[i] / total;
    out.emplace_back(inc_[i] * (Rational(1) / l), l);
  }
  return out;
}

std::size_t LSPath::hash() const {
  std::size_t h = inc_.size();
  for (const auto& v : inc_) h = h * 0x9e3779b97f4a7c15ULL ^ v.hash();
  return h;
}

std::optional<LSPath> f_op(const LSPath& path, const Subsystem& a, int alpha) {
  const auto& inc = path.increments();
  auto h = path.heights(a, alpha);
  Rational m = require_integral_min(path, a, alpha);
  if (h.back() - m < 1) return std::nullopt;
  std::size_t p = 0;
  for (std::size_t j = 0; j < h.size(); ++j)
    if (h[j] == m) p = j;
  const Rational target = m + 1;
  std::vector<Weight> out(inc.begin(), inc.begin() + static_cast<long>(p));
  std::size_t j = p;
  for (; j < inc.size(); ++j) {
    if (h[j + 1] < target) {
      out.push_back(a.reflect(alpha, inc[j]));
      continue;
    }
    Rational frac = (target - h[j]) / (h[j + 1] - h[j]);
    out.push_back(a.reflect(alpha, inc[j] * frac));
    out.push_back(inc[j] * (Rational(1) - frac));
    ++j;
    break;
  }
  out.insert(out.end(), inc.begin() + static_cast<long>(j), inc.end());
  return LSPath(std::move(out));
}

std::optional<LSPath> e_op(const LSPath& path, const Subsystem& a, int alpha) {
  const auto& inc = path.increments();
  auto h = path.heights(a, alpha);
  Rational m = require_integral_min(path, a, alpha);
  if (m > -1) return std::nullopt;
  std::size_t q = 0;
  while (h[q] != m) ++q;
  const Rational target = m + 1;
  // last segment before q where h crosses target going down
  std::size_t j = q;
  while (j > 0 && h[j - 1] < target) --j;
  // h[j-1] >= target > h[j]; the crossing lies in segment j-1
  std::size_t s = j - 1;
  Rational frac = (target - h[s]) / (h[s + 1] - h[s]);
  std::vector<Weight> out(inc.begin(), inc.begin() + static_cast<long>(s));
  out.push_back(inc[s] * frac);
  out.push_back(a.reflect(alpha, inc[s] * (Rational(1) - frac)));
  for (std::size_t k = s + 1; k < q; ++k) out.push_back(a.reflect(alpha, inc[k]));
  out.insert(out.end(), inc.begin() + static_cast<long>(q), inc.end());
  return LSPath(std::move(out));
}

LSPath concat(const LSPath& p1, const LSPath& p2) {
  std::vector<Weight> v = p1.increments();
  v.insert(v.end(), p2.increments().begin(), p2.increments().end());
  return LSPath(std::move(v));
}

std::optional<LSPath> f_on_concat(const LSPath& p1, const LSPath& p2, const Subsystem& a, int alpha) {
  // exists n >= 1 with f^n(p1) != 0 and e^n(p2) == 0
  bool first = false;
  std::optional<LSPath> f1 = p1, e2 = p2;
  for (int n = 1;; ++n) {
    f1 = f_op(*f1, a, alpha);
    if (e2) e2 = e_op(*e2, a, alpha);
    if (!f1) break;
    if (!e2) {
      first = true;
      break;
    }
  }
  std::optional<LSPath> rule;
  if (first) {
    rule = concat(*f_op(p1, a, alpha), p2);
  } else if (auto f2 = f_op(p2, a, alpha)) {
    rule = concat(p1, *f2);
  }
  auto direct = f_op(concat(p1, p2), a, alpha);
  if (rule.has_value() != direct.has_value() || (rule && !(*rule == *direct)))
    throw std::logic_error("root operator on a concatenation disagrees with the tensor rule");
  return rule;
}

std::vector<std::pair<int, int>> straight_line_monomial(const Weight& lambda, const Weight& w_lambda,
                                                        const Subsystem& a) {
  std::vector<std::pair<int, int>> steps;
  Weight mu = w_lambda;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < a.size(); ++i) {
      Rational c = a.coroot(mu, i);
      if (c < 0) {
        if (!is_integer(c)) throw std::invalid_argument("weight is not integral");
        steps.emplace_back(i, static_cast<int>(-c.numerator()));
        mu = a.reflect(i, mu);
        moved = true;
        break;
      }
    }
  }
  if (mu != lambda) throw std::invalid_argument(w_lambda.str() + " is not in the orbit of " + lambda.str());
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::optional<LSPath> apply_monomial(LSPath p, const std::vector<std::pair<int, int>>& mono, const Subsystem& a) {
  for (const auto& [i, n] : mono)
    for (int k = 0; k < n; ++k) {
      auto next = f_op(p, a, i);
      if (!next) return std::nullopt;
      p = std::move(*next);
    }
  return p;
}

PathModel path_model(const Weight& shape, const Subsystem& a, std::size_t guard, kernels::Exec exec) {
  if (!a.is_dominant(shape) || !a.is_integral(shape))
    throw std::invalid_argument("shape " + shape.str() + " is not dominant integral");
  long double dim = weyl_dim_estimate(shape, a);
  if (dim > static_cast<long double>(guard)) throw GuardExceeded("path model " + shape.str(), dim, guard);
  PathModel model{shape, {LSPath::straight(shape)}};
  std::unordered_set<LSPath, LSPathHash> seen{model.paths.front()};
  std::vector<LSPath> frontier = model.paths;
  const int n = a.size();
  while (!frontier.empty()) {
    const auto total = static_cast<long long>(frontier.size()) * n;
    std::vector<std::optional<LSPath>> next(static_cast<std::size_t>(total));
    if (exec == kernels::Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (long long k = 0; k < total; ++k) next[k] = f_op(frontier[k / n], a, static_cast<int>(k % n));
    } else {
      for (long long k = 0; k < total; ++k) next[k] = f_op(frontier[k / n], a, static_cast<int>(k % n));
    }
    frontier.clear();
    for (auto& p : next)
      if (p && seen.insert(*p).second) {
        model.paths.push_back(*p);
        frontier.push_back(std::move(*p));
      }
  }
  if (static_cast<long long>(model.paths.size()) != weyl_dim(shape, a))
    throw std::logic_error("path model size differs from the Weyl dimension");
  return model;
}

bool is_dominant_path(const LSPath& p, const Subsystem& a, const std::vector<int>& subset) {
  for (int i : subset)
    if (p.min_height(a, i) < 0) return false;
  return true;
}

TypeMultiset branch_to_levi(const PathModel& model, const Subsystem& a, const std::vector<int>& levi,
                            AlgebraTag tag) {
  TypeMultiset out;
  out.tag = tag;
  for (const auto& p : model.paths)
    if (is_dominant_path(p, a, levi)) out.add(p.endpoint(), 1);
  return out;
}

TypeMultiset branch_to_levi(const Weight& shape, const Subsystem& a, const std::vector<int>& levi,
                            AlgebraTag tag, std::size_t guard) {
  return branch_to_levi(path_model(shape, a, guard), a, levi, tag);
}

bool contains(const TypeMultiset& a, const TypeMultiset& b) {
  for (const auto& [w, m] : b.entries)
    if (a.mult(w) < m) return false;
  return true;
}

TypeMultiset shifted(const TypeMultiset& t, const Weight& by) {
  TypeMultiset out;
  out.tag = t.tag;
  for (const auto& [w, m] : t.entries) out.add(w + by, m);
  return out;
}

ShiftContainment shift_containments(int m, int p, const HermitianPair& h) {
  if (p < 0 || p > m) throw std::invalid_argument("shift_containments needs 0 <= p <= m");
  ShiftContainment r;
  auto big = branch_to_levi(Rational(m) * h.eps_star, h.k, h.l_indices, AlgebraTag::l);
  auto small = branch_to_levi(Rational(m - p) * h.eps_star, h.k, h.l_indices, AlgebraTag::l);
  r.up = contains(big, shifted(small, Rational(p) * h.eps_star));
  r.down_applies = h.tube;
  if (h.tube) r.down = contains(big, shifted(small, Rational(-p) * h.eps_star));
  return r;
}

ShiftContainment shift_containments(int m, int p, const BdsDatum& d) { return shift_containments(m, p, d.herm); }

std::vector<std::vector<int>> dominant_p_lists(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int cap) -> void {
    if (static_cast<int>(cur.size()) == r + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = cap; v >= 0; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

DominantPath dominant_path(int m, const std::vector<int>& p_list, const Cascade& c, const HermitianPair& h,
                           bool check_model) {
  const int r = c.r;
  if (static_cast<int>(p_list.size()) != r + 1) throw std::invalid_argument("p-list needs r + 1 entries");
  if (p_list[0] > m || p_list.back() < 0) throw std::invalid_argument("p-list out of range");
  for (int i = 1; i <= r; ++i)
    if (p_list[i] > p_list[i - 1]) throw std::invalid_argument("p-list must be nonincreasing");
  auto p = [&](int i) { return i <= r ? p_list[i] : 0; };
  const Subsystem& k = h.k;
  const Weight& es = h.eps_star;

  // partial sums eps* + gamma_1 + ... + gamma_j
  std::vector<Weight> partial(r + 1, es);
  for (int j = 1; j <= r; ++j) partial[j] = partial[j - 1] + c.gammas[j - 1];

  LSPath tau = LSPath::straight(Rational(m) * es);
  std::vector<LSPath> pieces;  // pi_r, ..., pi_2
  for (int j = r; j >= 2; --j) {
    const int len = p(j) - p(j + 1);
    Weight lambda = Rational(len) * es;
    Weight target = Rational(len) * partial[j];
    pieces.push_back(LSPath::straight(target));
    if (len == 0) continue;
    auto mono = straight_line_monomial(lambda, target, k);
    auto next = apply_monomial(tau, mono, k);
    if (!next) throw std::logic_error("monomial f_I" + std::to_string(j) + " vanishes");
    tau = std::move(*next);
  }
  for (int n = 0; n < p(1) - p(2); ++n) {
    auto next = f_op(tau, k, h.eps_index);
    if (!next) throw std::logic_error("f_eps vanishes");
    tau = std::move(*next);
  }

  LSPath expected;
  for (const auto& piece : pieces) expected = concat(expected, piece);
  expected = concat(expected, LSPath::straight(Rational(p(1) - p(2)) * (es - h.epsilon)));
  expected = concat(expected, LSPath::straight(Rational(m - p(1)) * es));
  if (!(tau == expected)) throw std::logic_error("constructed path differs from the concatenation");

  DominantPath out;
  out.tau = tau;
  for (int j = r; j >= 1; --j) {
    Weight b = Rational(p(j)) * partial[j];
    for (int i = j + 1; i <= r; ++i) b += Rational(p(i)) * c.gammas[i - 1];
    out.breakpoints.push_back(b);
  }
  Weight end = Rational(m) * es;
  for (int i = 1; i <= r; ++i) end += Rational(p(i)) * c.gammas[i - 1];
  out.breakpoints.push_back(end);
  out.endpoint = tau.endpoint();
  if (out.endpoint != end) throw std::logic_error("endpoint differs from m eps* + sum p_i gamma_i");

  // listed points are vertices of the unmerged concatenation
  std::vector<Weight> cum;
  Weight run = k.zero();
  for (const auto& piece : pieces) cum.push_back(run += piece.endpoint());
  cum.push_back(run += Rational(p(1) - p(2)) * (es - h.epsilon));
  cum.push_back(run += Rational(m - p(1)) * es);
  for (std::size_t i = 0; i < out.breakpoints.size(); ++i)
    if (out.breakpoints[i] != cum[i]) throw std::logic_error("break-point " + std::to_string(i) + " differs");
  for (const auto& b : out.breakpoints)
    if (!h.l.is_dominant(b)) throw std::logic_error("break-point " + b.str() + " is not l-dominant");
  if (!is_dominant_path(tau, k, h.l_indices)) throw std::logic_error("tau is not l-dominant");
  if (check_model) {
    auto model = path_model(Rational(m) * es, k);
    if (std::find(model.paths.begin(), model.paths.end(), tau) == model.paths.end())
      throw std::logic_error("tau is not in the path model");
  }
  return out;
}

namespace {

Weight checked_w_y_phi(const Weight& phi, const HermitianPair& h) {
  if (!h.tube) throw std::invalid_argument("transport requires tube type");
  if (h.k.pair(phi, h.mu) != 0) throw std::invalid_argument("phi is not orthogonal to mu");
  if (!h.l.is_dominant(phi)) throw std::invalid_argument("phi is not l-dominant");
  Weight wphi = h.w_Y(phi);
  if (!h.k.is_dominant(wphi) || !h.k.is_integral(wphi))
    throw std::invalid_argument("w_Y(phi) is not k-dominant integral");
  return wphi;
}

}  // namespace

Weight transport_type(const Weight& phi, int m, const Weight& tau_weight, const HermitianPair& h,
                      const TypeMultiset& base, const TypeMultiset& target) {
  Weight wphi = checked_w_y_phi(phi, h);
  // highest weights restrict to themselves, so a mismatched m is caught here
  if (base.mult(Rational(m) * h.eps_star) == 0 || target.mult(wphi + Rational(m) * h.eps_star) == 0)
    throw std::invalid_argument("branchings do not match m = " + std::to_string(m));
  if (base.mult(tau_weight) == 0) throw std::invalid_argument("tau does not occur in Res V(m eps*)");
  Weight out = phi + h.w_Y(tau_weight);
  if (target.mult(out) == 0) throw std::logic_error("transported type " + out.str() + " does not occur");
  return out;
}

Weight transport_type(const Weight& phi, int m, const Weight& tau_weight, const HermitianPair& h) {
  Weight wphi = checked_w_y_phi(phi, h);
  auto base = branch_to_levi(Rational(m) * h.eps_star, h.k, h.l_indices, AlgebraTag::l);
  auto target = branch_to_levi(wphi + Rational(m) * h.eps_star, h.k, h.l_indices, AlgebraTag::l);
  return transport_type(phi, m, tau_weight, h, base, target);
}

}  // namespace lie
