#include "lie/series.hpp"

#include <algorithm>
#include <map>

namespace lie {

namespace {

Rational floor_of(const Rational& x) {
  long long n = x.numerator(), d = x.denominator();
  long long q = n / d;
  if (n % d != 0 && n < 0) --q;
  return Rational(q);
}

// v = r * base for a rational r, else nullopt.
std::optional<Rational> multiple_of(const Weight& v, const Weight& base) {
  std::optional<Rational> r;
  for (int i = 0; i < v.rank(); ++i) {
    if (base[i] == 0) {
      if (v[i] != 0) return std::nullopt;
      continue;
    }
    Rational q = v[i] / base[i];
    if (r && *r != q) return std::nullopt;
    r = q;
  }
  return r ? r : std::optional<Rational>(Rational(0));
}

Weight project_off(const Weight& w, const Weight& center, const Pairing& form) {
  return w - (form(w, center) / form(center, center)) * center;
}

Character u1_char(const BdsDatum& d) {
  Character v;
  for (const auto& b : d.Delta(-1)) v[b] += 1;
  return v;
}

std::vector<Character> sym_powers_guarded(const BdsDatum& d, int m_max, std::size_t guard) {
  const long long n = static_cast<long long>(d.Delta(-1).size());
  long double dim = binomial(n + m_max - 1, m_max);
  if (dim > static_cast<long double>(guard))
    throw GuardExceeded("S^" + std::to_string(m_max) + "(u_-1)", dim, guard);
  return sym_power_characters(u1_char(d), m_max);
}

long double type_dim(const TypeMultiset& t, const Subsystem& a) {
  long double total = 0;
  for (const auto& [w, k] : t.entries) total += static_cast<long double>(k) * weyl_dim(w, a);
  return total;
}

// E_gamma (x) S^m(u_-1) as l-types, with the dimension identity asserted.
TypeMultiset bds_layer_l(const SeriesParams& p, const Character& sm, int m) {
  const BdsDatum& d = p.datum;
  auto t = klimyk(p.gamma(), sm, d.l(), AlgebraTag::l);
  long double expect = static_cast<long double>(weyl_dim(p.gamma(), d.l())) *
                       binomial(static_cast<long long>(d.Delta(-1).size()) + m - 1, m);
  if (type_dim(t, d.l()) != expect) throw std::logic_error("bds layer " + std::to_string(m) + ": dimension mismatch");
  return t;
}

TypeMultiset holo_layer(const SeriesParams& p, const Cascade& c, int r) {
  const BdsDatum& d = p.datum;
  TypeMultiset out;
  out.tag = AlgebraTag::l;
  for (const auto& [w, k] : schmid(r, c, d.herm).entries)
    for (const auto& [x, n] : tensor_decompose(p.gamma(), w, d.l(), AlgebraTag::l, p.guard).entries)
      out.add(x, k * n);
  long double expect = static_cast<long double>(weyl_dim(p.gamma(), d.l())) *
                       binomial(static_cast<long long>(d.s) + r - 1, r);
  if (type_dim(out, d.l()) != expect) throw std::logic_error("holo layer " + std::to_string(r) + ": dimension mismatch");
  return out;
}

void require_holo_negativity(const SeriesParams& p) {
  const BdsDatum& d = p.datum;
  Weight x = p.gamma() + d.rho_k;
  for (const auto& b : d.Delta(2))
    if (d.g.pair(x, b) >= 0)
      throw HypothesisViolation("<gamma + rho_k, beta> < 0 fails for beta = " + b.str());
}

// 2t/d as an integer; the U-index offset is -2t/d - 2.
long long two_t_over_d(const SeriesParams& p, const QuaternionicDatum& qd) {
  Rational x = Rational(2) * p.t / Rational(qd.d);
  if (!is_integer(x)) throw HypothesisViolation("2t/d is not an integer: t = " + to_string(p.t));
  return x.numerator();
}

bool strictly_increasing(const std::vector<long long>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) return false;
  return v.size() >= 3;
}

}  // namespace

Weight gamma0_from_labels(const BdsDatum& d, const std::vector<Rational>& labels) {
  if (static_cast<int>(labels.size()) != d.g.rank() - 1)
    throw std::invalid_argument("gamma0 needs " + std::to_string(d.g.rank() - 1) + " labels");
  Weight x = d.g.zero();
  int j = 0;
  for (int i = 0; i < d.g.rank(); ++i) {
    if (i == d.nu) continue;
    x += labels[j++] * d.g.fundamental_weight(i);
  }
  return project_off(x, d.nu_star, d.g.form());
}

SeriesParams make_series_params(const BdsDatum& d, const Weight& gamma0, const Rational& t, int m_max, int r_max,
                                std::size_t guard) {
  if (m_max < 0 || r_max < 0) throw std::invalid_argument("truncations must be nonnegative");
  if (!d.l().is_dominant(gamma0) || !d.l().is_integral(gamma0))
    throw HypothesisViolation("gamma0 " + gamma0.str() + " is not l-dominant integral");
  if (d.g.pair(gamma0, d.nu_star) != 0) throw HypothesisViolation("gamma0 is not orthogonal to nu*");
  SeriesParams p{d, gamma0, t, m_max, r_max, guard};
  Weight g = p.gamma();
  if (!d.k().is_integral(g)) throw HypothesisViolation("gamma " + g.str() + " is not k-integral");
  // the center coordinate recovered from gamma agrees with t
  if (d.g.pair(g, d.nu_star) / d.g.pair(d.nu_star, d.nu_star) != t)
    throw std::logic_error("split gamma = gamma0 + t nu* is inconsistent");
  NegativityCheck nc = check_negativity(d, gamma0, t);
  if (!nc.holds) throw HypothesisViolation(nc.violated);
  return p;
}

Rational most_negative_bound(const BdsDatum& d, const Weight& gamma0, int margin) {
  NegativityCheck nc = check_negativity(d, gamma0, 0);
  Rational bound = std::min(nc.bound_mu, nc.bound_nu) - Rational(margin);
  Rational step(1, 12);
  Rational t = floor_of(bound * Rational(12)) / Rational(12);
  if (t >= bound) t -= step;
  for (int i = 0; i < 12 * 24; ++i, t -= step)
    if (d.k().is_integral(gamma0 + t * d.nu_star) && check_negativity(d, gamma0, t).holds) return t;
  throw std::logic_error("no integral t found below the negativity bound");
}

QuaternionicDatum quaternionic_datum(const BdsDatum& d) {
  QuaternionicDatum qd;
  qd.d = quaternionic_d(d);
  qd.mu_star = Rational(1, 2) * d.mu;
  if (d.mu != Rational(qd.d) * d.nu_star) throw std::logic_error("mu != d nu*");
  return qd;
}

Weight bwb_highest_weight(const Weight& kappa, const BdsDatum& d) {
  Weight x = kappa + d.rho_k;
  for (const auto& b : d.Delta(2))
    if (d.g.pair(x, b) >= 0)
      throw HypothesisViolation("<kappa + rho_k, beta> < 0 fails for beta = " + b.str());
  Weight out = d.w_Y(x) - d.rho_k;
  if (!d.k().is_dominant(out)) throw std::logic_error("bwb weight " + out.str() + " is not k-dominant");
  return out;
}

TypeMultiset bds_k_types(const SeriesParams& p) {
  auto h = sym_powers_guarded(p.datum, p.m_max, p.guard);
  TypeMultiset out;
  out.tag = AlgebraTag::k;
  for (int m = 0; m <= p.m_max; ++m)
    for (const auto& [w, k] : bds_layer_l(p, h[m], m).entries) out.add(bwb_highest_weight(w, p.datum), k);
  return out;
}

TypeMultiset quaternionic_k_types(const SeriesParams& p, const QuaternionicDatum& qd) {
  const BdsDatum& d = p.datum;
  if (!d.quaternionic()) throw HypothesisViolation(d.key() + " is not quaternionic");
  const long long offset = -two_t_over_d(p, qd) - 2;
  if (offset < 0) throw HypothesisViolation("U index -2t/d - 2 is negative");
  auto h = sym_powers_guarded(d, p.m_max, p.guard);
  TypeMultiset out;
  out.tag = AlgebraTag::k;
  for (int m = 0; m <= p.m_max; ++m) {
    // S^m(u_-1) = C_{-m mu*} (x) S^m(E_{mu* - nu})
    Character shifted;
    const Weight shift = Rational(m) * qd.mu_star;
    for (const auto& [w, k] : h[m]) {
      Weight x = w + shift;
      if (d.g.pair(x, d.nu_star) != 0) throw std::logic_error("S^m(E_{mu*-nu}) weight not orthogonal to nu*");
      shifted[x] = k;
    }
    const Weight u = Rational(m + offset) * qd.mu_star;
    for (const auto& [theta, k] : klimyk(p.gamma0, shifted, d.l(), AlgebraTag::l).entries) out.add(u + theta, k);
  }
  return out;
}

TypeMultiset holo_l_types(const SeriesParams& p) {
  require_holo_negativity(p);
  Cascade c = cascade(p.datum);
  TypeMultiset out;
  out.tag = AlgebraTag::l;
  for (int r = 0; r <= p.r_max; ++r)
    for (const auto& [w, k] : holo_layer(p, c, r).entries) out.add(w, k);
  return out;
}

TypeMultiset quaternionic_holo_l_types(const SeriesParams& p, const QuaternionicDatum& qd) {
  if (!p.datum.quaternionic()) throw HypothesisViolation(p.datum.key() + " is not quaternionic");
  const long long tt = two_t_over_d(p, qd);
  TypeMultiset out;
  out.tag = AlgebraTag::l;
  for (int r = 0; r <= p.r_max; ++r) out.add(p.gamma0 + Rational(tt - 2 * r) * qd.mu_star, 1);
  return out;
}

std::vector<int> growth_windows(int n) { return {(n + 1) / 2, (3 * n + 3) / 4, n}; }

CommonReport common_l_types_quaternionic(const SeriesParams& p, const QuaternionicDatum& qd) {
  const BdsDatum& d = p.datum;
  if (!d.quaternionic()) throw HypothesisViolation(d.key() + " is not quaternionic");
  const long long tt = two_t_over_d(p, qd);
  const long long offset = -tt - 2;
  auto h = sym_powers_guarded(d, p.m_max, p.guard);

  // multiplicity of E_gamma0 in E_gamma0 (x) S^m(E_{mu*-nu})
  std::vector<long long> a(p.m_max + 1, 0);
  for (int m = 0; m <= p.m_max; ++m) {
    Character shifted;
    for (const auto& [w, k] : h[m]) shifted[w + Rational(m) * qd.mu_star] = k;
    a[m] = klimyk(p.gamma0, shifted, d.l(), AlgebraTag::l).mult(p.gamma0);
  }
  TypeMultiset holo = holo_l_types(p);
  if (!(holo == quaternionic_holo_l_types(p, qd))) throw std::logic_error("holomorphic types differ from the closed form");

  CommonReport rep;
  rep.pipeline = "quaternionic";
  rep.m_max = p.m_max;
  rep.r_max = p.r_max;
  rep.tube = d.herm.tube;
  auto windows = growth_windows(p.m_max);
  for (int r = 0; r <= p.r_max; ++r) {
    const long long kappa = tt - 2 * r;  // L1 weight in units of mu*
    std::vector<long long> per_m(p.m_max + 1, 0);
    for (int m = 0; m <= p.m_max; ++m) {
      const long long n = m + offset;  // U_n
      // kappa mu* must be a weight of U_n
      bool b = n >= 0 && -n <= kappa && kappa <= n && (n - kappa) % 2 == 0;
      if (b != (m % 2 == 0 && m >= 2 * (r + 1))) throw std::logic_error("parity criterion disagrees with the U_n weight test");
      if (b) per_m[m] = a[m];
    }
    CommonType ct;
    ct.weight = p.gamma0 + Rational(kappa) * qd.mu_star;
    ct.windows = windows;
    for (int w : windows) {
      long long s = 0;
      for (int m = 0; m <= w; ++m) s += per_m[m];
      ct.window_mults.push_back(s);
    }
    ct.mult_bds = ct.window_mults.back();
    if (ct.mult_bds == 0) continue;
    ct.mult_holo = holo.mult(ct.weight);
    ct.growth = strictly_increasing(ct.window_mults);
    rep.types.push_back(ct);
  }
  std::sort(rep.types.begin(), rep.types.end(),
            [](const CommonType& x, const CommonType& y) { return x.weight < y.weight; });
  return rep;
}

CommonReport common_l_types_tube(const SeriesParams& p, const TubeBounds& b) {
  const BdsDatum& d = p.datum;
  const HermitianPair& h = d.herm;
  if (!h.tube) throw HypothesisViolation("tube hypothesis fails: w_k0(eps) != -eps");
  auto scan = detect_relative_invariants(d, b.invariant_scan, p.guard);
  if (scan.hits.empty())
    throw HypothesisViolation("no relative invariant in degrees <= " + std::to_string(scan.m_checked));
  const int kdeg = scan.first_degree();
  auto qopt = multiple_of(scan.hits.front().weight, h.eps_star);
  if (!qopt || !is_integer(*qopt) || *qopt >= 0) throw std::logic_error("relative invariant weight is not q eps*, q < 0");
  const long long q = qopt->numerator();
  const long long c = d.c;

  const Weight gamma = p.gamma();
  const Rational te = d.g.pair(gamma, h.mu) / d.g.pair(h.eps_star, h.mu);
  if (!is_integer(te)) throw std::logic_error("eps* coordinate of gamma is not an integer");
  const Weight phi = gamma - te * h.eps_star;
  const Weight wphi = h.w_Y(phi);
  const Cascade cas = cascade(d);
  const int r = cas.r;
  if (verify_sum(cas, h).status != SumStatus::holds) throw std::logic_error("sum of the cascade is not -2 eps*");

  TypeMultiset holo = holo_l_types(p);
  std::map<long long, PathModel> models;
  std::map<long long, TypeMultiset> base_br, target_br, target_oracle;
  auto model_for = [&](long long m) -> const PathModel& {
    auto it = models.find(m);
    if (it == models.end()) it = models.emplace(m, path_model(Rational(m) * h.eps_star, h.k, p.guard)).first;
    return it->second;
  };
  auto cached = [&](std::map<long long, TypeMultiset>& cache, long long m, auto make) -> const TypeMultiset& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, make()).first;
    return it->second;
  };

  CommonReport rep;
  rep.pipeline = "tube";
  rep.m_max = p.m_max;
  rep.r_max = p.r_max;
  rep.tube = true;
  rep.invariant_degree = kdeg;
  rep.q = Rational(q);
  auto in_nprime = [&](long long j) { return (j * q + c) % 2 == 0; };
  if (!in_nprime(0) && !in_nprime(1)) throw std::logic_error("N' is empty");

  for (int n = 0; n <= p.r_max; ++n) {
    for (auto part : partitions(n, r)) {
      part.resize(r, 0);
      if (!part.empty() && part[0] > b.a1_max) continue;
      const long long a1 = part.empty() ? 0 : part[0];
      long long j0 = 0;
      while (!(in_nprime(j0) && -(j0 * q + c) >= 2 * a1)) ++j0;
      const long long j_max = b.j_max >= 0 ? b.j_max : j0 + b.j_extra;
      rep.j_max = std::max<int>(rep.j_max, static_cast<int>(j_max));

      Weight target_type = gamma;
      for (int i = 0; i < r; ++i) target_type += Rational(part[i]) * cas.gammas[i];
      CommonType ct;
      ct.weight = target_type;
      ct.a = part;
      ct.mult_holo = holo.mult(target_type);
      if (ct.mult_holo == 0) throw std::logic_error("holomorphic series lacks " + target_type.str());

      for (long long j = j0; j <= j_max; ++j) {
        if (!in_nprime(j)) continue;
        const long long half = -(j * q + c) / 2;
        const Rational mj_r = -te - Rational(j * q + c);
        if (!is_integer(mj_r)) throw std::logic_error("m_j is not an integer");
        const long long mj = mj_r.numerator();
        // p_{r+1-i} = -(jq+c)/2 - a_i
        std::vector<int> plist(r + 1);
        for (int i = 1; i <= r; ++i) plist[r + 1 - i] = static_cast<int>(half - part[i - 1]);
        plist[0] = r >= 1 ? plist[1] : 0;
        for (int i = 1; i <= r; ++i) {
          if (plist[i] < 0 || (i < r && plist[i] < plist[i + 1]) || plist[i] >= mj)
            throw std::logic_error("p-list violates 0 <= p_r <= ... <= p_1 < m_j");
        }
        // sum p_i gamma_{r+1-i} = (jq+c) eps* - sum a_i gamma_i
        Weight lhs = h.k.zero(), rhs = Rational(j * q + c) * h.eps_star;
        for (int i = 1; i <= r; ++i) {
          lhs += Rational(plist[i]) * cas.gammas[r - i];
          rhs -= Rational(part[i - 1]) * cas.gammas[i - 1];
        }
        if (lhs != rhs) throw std::logic_error("p-list identity fails");
        if (bwb_highest_weight(gamma + Rational(j * q) * h.eps_star, d) != wphi + Rational(mj) * h.eps_star)
          throw std::logic_error("bwb weight differs from w_Y(phi) + m_j eps*");

        DominantPath tau = dominant_path(static_cast<int>(mj), plist, cas, h, false);
        const PathModel& model = model_for(mj);
        if (std::find(model.paths.begin(), model.paths.end(), tau.tau) == model.paths.end())
          throw std::logic_error("tau is not in the path model");
        const auto& base = cached(base_br, mj, [&] { return branch_to_levi(model, h.k, h.l_indices, AlgebraTag::l); });
        const Weight top = wphi + Rational(mj) * h.eps_star;
        const auto& target = cached(target_br, mj, [&] {
          return branch_to_levi(top, h.k, h.l_indices, AlgebraTag::l, p.guard);
        });
        Weight transported = transport_type(phi, static_cast<int>(mj), tau.endpoint, h, base, target);
        if (transported != target_type) throw std::logic_error("transported type differs from gamma + sum a_i gamma_i");
        const auto& oracle = cached(target_oracle, mj, [&] {
          return branch_oracle(top, h.k, h.l_indices, AlgebraTag::l, p.guard);
        });
        if (oracle.mult(target_type) == 0) throw std::logic_error("character oracle lacks the transported type");
        ct.certified_j.push_back(static_cast<int>(j));
      }
      ct.windows = {static_cast<int>(j0), static_cast<int>(j0 + (j_max - j0 + 1) / 2), static_cast<int>(j_max)};
      for (int w : ct.windows)
        ct.window_mults.push_back(std::count_if(ct.certified_j.begin(), ct.certified_j.end(),
                                                [&](int j) { return j <= w; }));
      ct.mult_bds = static_cast<long long>(ct.certified_j.size());
      ct.growth = strictly_increasing(ct.window_mults);
      rep.types.push_back(ct);
    }
  }
  std::sort(rep.types.begin(), rep.types.end(),
            [](const CommonType& x, const CommonType& y) { return x.weight < y.weight; });
  return rep;
}

AdmissibilityEvidence admissibility_evidence(const SeriesParams& p, const std::string& side) {
  const BdsDatum& d = p.datum;
  AdmissibilityEvidence ev;
  ev.isotype = p.gamma0;
  const bool bds = side == "bds";
  if (!bds && side != "holo") throw std::invalid_argument("side must be bds or holo");
  const int n = bds ? p.m_max : p.r_max;
  ev.windows = growth_windows(n);
  std::vector<long long> per_layer(n + 1, 0);
  auto count_isotype = [&](const TypeMultiset& ltypes, long long k) {
    long long s = 0;
    for (const auto& [w, mult] : ltypes.entries)
      if (project_off(w, d.nu_star, d.g.form()) == p.gamma0) s += mult;
    return s * k;
  };
  if (bds) {
    auto h = sym_powers_guarded(d, n, p.guard);
    for (int m = 0; m <= n; ++m) {
      TypeMultiset ktypes;
      for (const auto& [w, k] : bds_layer_l(p, h[m], m).entries) ktypes.add(bwb_highest_weight(w, d), k);
      for (const auto& [lam, k] : ktypes.entries)
        per_layer[m] += count_isotype(branch_oracle(lam, d.k(), d.herm.l_indices, AlgebraTag::l, p.guard), k);
    }
  } else {
    require_holo_negativity(p);
    Cascade c = cascade(d);
    for (int r = 0; r <= n; ++r) per_layer[r] = count_isotype(holo_layer(p, c, r), 1);
  }
  for (int w : ev.windows) {
    long long s = 0;
    for (int i = 0; i <= w; ++i) s += per_layer[i];
    ev.multiplicities.push_back(s);
  }
  ev.growth = strictly_increasing(ev.multiplicities);
  ev.stabilized = ev.multiplicities.size() >= 2 && ev.multiplicities.back() == ev.multiplicities[ev.multiplicities.size() - 2];
  return ev;
}

}  // namespace lie
