#include "lie/bds.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lie {

namespace {

// x with <x, alpha_i^vee> = delta_{i,j} for a full-rank subsystem.
Weight fundamental_of(const Subsystem& k, int j) {
  const int n = k.ambient_rank();
  if (k.size() != n) throw std::logic_error("fundamental weight needs a full-rank subsystem");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < n; ++c) {
      Weight e(n);
      e[c] = 1;
      a[i][c] = k.coroot(e, i);
    }
    b[i] = i == j ? 1 : 0;
  }
  auto x = solve(a, b);
  Weight w(n);
  for (int i = 0; i < n; ++i) w[i] = x[i];
  return w;
}

// r with v == r * base, or nullopt.
std::optional<Rational> ratio(const Weight& v, const Weight& base) {
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
  if (!r) return v.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
  return r;
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(' ');
  auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

Rational HermitianPair::eps_coefficient(const Weight& root) const {
  return k.coordinates(root)[eps_index];
}

HermitianPair make_hermitian_pair(std::string name, const Pairing& form, std::vector<Weight> k_simple,
                                  int eps_index) {
  HermitianPair h;
  h.name = std::move(name);
  h.k = Subsystem(form, std::move(k_simple));
  h.eps_index = eps_index;
  for (int i = 0; i < h.k.size(); ++i)
    if (i != eps_index) h.l_indices.push_back(i);
  h.l = h.k.sub(h.l_indices);
  h.epsilon = h.k.simple(eps_index);
  for (const auto& b : h.k.positive_roots()) {
    Rational e = h.k.coordinates(b)[eps_index];
    if (e == 0) {
      h.delta0_pos.push_back(b);
    } else if (e == 1) {
      h.delta2.push_back(b);
      h.delta_m2.push_back(-b);
    } else {
      throw std::invalid_argument("eps is not cominuscule in k: coefficient " + to_string(e));
    }
  }
  h.mu = h.delta2.front();
  for (const auto& b : h.delta2)
    if (h.k.height(b) > h.k.height(h.mu)) h.mu = b;
  for (const auto& b : h.delta2)
    for (const auto& c : h.k.coordinates(h.mu - b))
      if (c < 0) throw std::logic_error("Delta_2 has no unique highest root");
  h.eps_star = fundamental_of(h.k, eps_index);
  h.w_k0 = h.k.longest_element();
  h.w_l0 = h.k.longest_element(h.l_indices);
  Weight sum = h.k.zero();
  for (const auto& b : h.delta2) sum += b;
  auto c = ratio(sum, h.eps_star);
  if (!c || !is_integer(*c)) throw std::logic_error("sum of Delta_2 is not an integral multiple of eps*");
  h.c = c->numerator();
  h.tube = h.k.act(h.w_k0, h.epsilon) == -h.epsilon;
  return h;
}

HermitianPair hermitian_symmetric(char type, int rank, int node) {
  RootSystem g = RootSystem::build(type, rank);
  if (g.highest_root()[node] != 1)
    throw std::invalid_argument("node " + std::to_string(node + 1) + " of " + g.label() + " is not cominuscule");
  std::vector<Weight> simple;
  for (int i = 0; i < rank; ++i) simple.push_back(g.simple_root(i));
  return make_hermitian_pair(g.label() + "/" + std::to_string(node + 1), g.form(), simple, node);
}

std::string BdsDatum::key() const { return g.label() + ":" + std::to_string(nu + 1); }

Weight BdsDatum::delta1_highest() const {
  Weight nu_root = g.simple_root(nu);
  return herm.k.act(herm.w_l0, nu_root);
}

std::vector<int> enumerate_bds_orders(const RootSystem& g) {
  std::vector<int> out;
  Weight h = g.highest_root();
  for (int i = 0; i < g.rank(); ++i)
    if (h[i] == 2) out.push_back(i);
  return out;
}

BdsDatum build_datum(const RootSystem& g0, int nu) {
  if (nu < 0 || nu >= g0.rank()) throw std::invalid_argument("nu index out of range");
  if (g0.highest_root()[nu] != 2)
    throw std::invalid_argument("coefficient of psi_" + std::to_string(nu + 1) + " in the highest root of " +
                                g0.label() + " is " + to_string(g0.highest_root()[nu]) + ", not 2");
  BdsDatum d;
  Weight nu_root = g0.simple_root(nu);
  d.scale = Rational(2) / g0.pair(nu_root, nu_root);
  d.g = g0.rescaled(d.scale);
  d.nu = nu;
  for (const auto& r : d.g.all_roots()) {
    auto n = r[nu].numerator();
    d.delta.at(static_cast<std::size_t>(n + 2)).push_back(r);
  }
  for (auto& part : d.delta) std::sort(part.begin(), part.end());
  const auto& d2 = d.Delta(2);
  std::vector<Weight> lows;
  for (const auto& e : d2) {
    bool lowest = true;
    for (const auto& b : d2)
      if (!(b - e).nonnegative()) lowest = false;
    if (lowest) lows.push_back(e);
  }
  if (lows.size() != 1) throw std::logic_error("Delta_2 has no unique lowest root in " + g0.label());
  d.epsilon = lows.front();
  d.mu = d.g.highest_root();
  d.nu_star = d.g.fundamental_weight(nu);
  std::vector<Weight> ks;
  for (int i = 0; i < d.g.rank(); ++i) ks.push_back(i == nu ? d.epsilon : d.g.simple_root(i));
  d.herm = make_hermitian_pair(d.key(), d.g.form(), ks, nu);
  if (d.herm.epsilon != d.epsilon || d.herm.mu != d.mu)
    throw std::logic_error("Hermitian pair disagrees with the grading");
  d.eps_star = d.herm.eps_star;
  d.rho_g = d.g.rho();
  d.rho_k = d.herm.k.rho();
  d.c = d.herm.c;
  d.s = static_cast<int>(d2.size());
  for (const auto& comp : d.herm.k.components())
    if (std::find(comp.begin(), comp.end(), nu) != comp.end()) d.k1_simple_subset = comp;
  d.l_simple_subset = d.herm.l_indices;
  return d;
}

bool spin_structure(const HermitianPair& h) { return h.c % 2 == 0; }
bool spin_structure(const BdsDatum& d) { return spin_structure(d.herm); }
bool tube_type(const BdsDatum& d) { return d.herm.tube; }

// ---------------------------------------------------------------- classification

std::string ClassificationRow::algebra_text() const {
  if (invariant_degree == 0) return "ℂ";
  return "ℂ[f], |f|=" + std::to_string(invariant_degree);
}

std::optional<ClassificationRow> golden_row(char type, int rank, int nu1) {
  const int l = rank;
  ClassificationRow r;
  r.type = type;
  r.rank = rank;
  r.nu = nu1;
  auto s = [](int v) { return std::to_string(v); };
  auto quaternionic = [&](std::string family, std::string g0, std::string l2, int deg) {
    r.family = std::move(family);
    r.g0_label = std::move(g0);
    r.k1_label = "su(2)";
    r.l1_label = "so(2)";
    r.l2_label = std::move(l2);
    r.Y_label = "P^1";
    r.X_label = "SU(1,1)/U(1)";
    r.invariant_degree = deg;
    r.quaternionic = true;
    r.tube_type = true;
    return r;
  };
  auto hermitian = [&](std::string family, std::string g0, std::string k1, std::string l1, std::string l2,
                       std::string y, std::string x, bool tube, int deg) {
    r.family = std::move(family);
    r.g0_label = std::move(g0);
    r.k1_label = std::move(k1);
    r.l1_label = std::move(l1);
    r.l2_label = std::move(l2);
    r.Y_label = std::move(y);
    r.X_label = std::move(x);
    r.tube_type = tube;
    r.invariant_degree = deg;
    r.quaternionic = false;
    return r;
  };
  auto so_u = [&](std::string family, std::string g0, int p, std::string l2, bool tube, int deg) {
    return hermitian(std::move(family), std::move(g0), "so(" + s(2 * p) + ")", "u(" + s(p) + ")",
                     std::move(l2), "SO(" + s(2 * p) + ")/U(" + s(p) + ")", "SO*(" + s(2 * p) + ")/U(" + s(p) + ")",
                     tube, deg);
  };
  switch (type) {
    case 'B':
      if (nu1 == 2 && l > 2)
        return quaternionic("so(4,2l-3)", "so(4," + s(2 * l - 3) + ")", "sp(1)+so(" + s(2 * l - 3) + ")", 4);
      if (nu1 == 2 && l == 2) return quaternionic("so(4,1)", "so(4,1)", "sp(1)", 0);
      if (nu1 == l && l > 2) return so_u("so(2l,1)", "so(" + s(2 * l) + ",1)", l, "0", l % 2 == 0, 0);
      if (2 < nu1 && nu1 < l && l > 3) {
        int p = nu1;
        return so_u("so(2p,2l-2p+1)", "so(" + s(2 * p) + "," + s(2 * l - 2 * p + 1) + ")", p,
                    "so(" + s(2 * l - 2 * p + 1) + ")", p % 2 == 0, 3 * p <= 2 * l + 1 ? 2 * p : 0);
      }
      break;
    case 'C':
      if (nu1 == 1 && l > 1) return quaternionic("sp(1,l-1)", "sp(1," + s(l - 1) + ")", "sp(" + s(l - 1) + ")", 0);
      if (1 < nu1 && nu1 < l && l > 2) {
        int p = nu1;
        return hermitian("sp(p,l-p)", "sp(" + s(p) + "," + s(l - p) + ")", "sp(" + s(p) + ")", "u(" + s(p) + ")",
                         "sp(" + s(l - p) + ")", "Sp(" + s(p) + ")/U(" + s(p) + ")",
                         "Sp(" + s(p) + ",R)/U(" + s(p) + ")", true, p % 2 == 0 && 3 * p <= 2 * l ? p : 0);
      }
      break;
    case 'D':
      if (nu1 == 2 && l > 4)
        return quaternionic("so(4,2l-4)", "so(4," + s(2 * l - 4) + ")", "sp(1)+so(" + s(2 * l - 4) + ")", 4);
      if (nu1 == 2 && l == 4) return quaternionic("so(4,4)", "so(4,4)", "sp(1)+sp(1)+sp(1)", 4);
      if (nu1 == l - 2 && l > 4)
        return so_u("so(2l-4,4)", "so(" + s(2 * l - 4) + ",4)", l - 2, "so(4)", l % 2 == 0,
                    l == 5 ? 6 : l == 6 ? 8 : 0);
      if (2 < nu1 && nu1 < l - 2 && l > 5) {
        int p = nu1;
        return so_u("so(2p,2l-2p)", "so(" + s(2 * p) + "," + s(2 * l - 2 * p) + ")", p, "so(" + s(2 * l - 2 * p) + ")",
                    p % 2 == 0, 3 * p <= 2 * l ? 2 * p : 0);
      }
      break;
    case 'G':
      if (nu1 == 2) return quaternionic("g2;A1,A1", "g2;A1,A1", "sp(1)", 4);
      break;
    case 'F':
      if (nu1 == 1) return quaternionic("f4;A1,C3", "f4;A1,C3", "sp(3)", 4);
      if (nu1 == 4)
        return hermitian("f4;B4", "f4;B4", "so(9)", "so(2)+so(7)", "0", "SO(9)/SO(7)xSO(2)",
                         "SO_0(2,7)/SO(2)xSO(7)", true, 2);
      break;
    case 'E':
      if (l == 6 && nu1 == 2) return quaternionic("e6;A1,A5,2", "e6;A1,A5,2", "su(6)", 4);
      if (l == 6 && nu1 == 3)
        return hermitian("e6;A1,A5,1", "e6;A1,A5,1", "su(6)", "su(5)+so(2)", "su(2)", "P^5",
                         "SU(1,5)/S(U(1)xU(5))", false, 0);
      if (l == 7 && nu1 == 1) return quaternionic("e7;A1,D6,1", "e7;A1,D6,1", "so(12)", 4);
      if (l == 7 && nu1 == 6)
        return hermitian("e7;A1,D6,2", "e7;A1,D6,2", "so(12)", "so(10)+so(2)", "su(2)", "SO(12)/SO(2)xSO(10)",
                         "SO_0(2,10)/SO(2)xSO(10)", true, 0);
      if (l == 7 && nu1 == 2)
        return hermitian("e7;A7", "e7;A7", "su(8)", "su(7)+so(2)", "0", "P^7", "SU(1,7)/S(U(1)xU(7))", false, 7);
      if (l == 8 && nu1 == 8) return quaternionic("e8;A1,E7", "e8;A1,E7", "e7", 4);
      if (l == 8 && nu1 == 1)
        return hermitian("e8;D8", "e8;D8", "so(16)", "so(2)+so(14)", "0", "SO(16)/SO(2)xSO(14)",
                         "SO_0(2,14)/SO(2)xSO(14)", true, 8);
      break;
    default: break;
  }
  return std::nullopt;
}

int canonical_nu(const RootSystem& g, int nu0) {
  Weight image = -g.act(g.longest_element(g.full().all_indices()), g.simple_root(nu0));
  for (int j = 0; j < g.rank(); ++j)
    if (image == g.simple_root(j)) return std::min(nu0, j) + 1;
  throw std::logic_error("-w0 does not permute simple roots");
}

std::vector<std::string> label_dynkin_types(const std::string& label) {
  std::vector<std::string> out;
  std::stringstream ss(label);
  std::string term;
  while (std::getline(ss, term, '+')) {
    term = trim(term);
    if (term.empty() || term == "0") continue;
    if (term == "e6" || term == "e7" || term == "e8") {
      out.push_back("E" + term.substr(1));
      continue;
    }
    auto open = term.find('('), close = term.find(')');
    if (open == std::string::npos || close == std::string::npos) throw std::invalid_argument("bad label " + term);
    std::string name = term.substr(0, open);
    int n = std::stoi(term.substr(open + 1, close - open - 1));
    if (name == "su" || name == "u") {
      if (n >= 2) out.push_back("A" + std::to_string(n - 1));
    } else if (name == "sp") {
      if (n == 1) out.push_back("A1");
      else if (n == 2) out.push_back("B2");
      else out.push_back("C" + std::to_string(n));
    } else if (name == "so") {
      if (n == 3) out.push_back("A1");
      else if (n == 4) { out.push_back("A1"); out.push_back("A1"); }
      else if (n == 5) out.push_back("B2");
      else if (n == 6) out.push_back("A3");
      else if (n % 2 == 1 && n > 6) out.push_back("B" + std::to_string((n - 1) / 2));
      else if (n % 2 == 0 && n > 6) out.push_back("D" + std::to_string(n / 2));
    } else {
      throw std::invalid_argument("bad label " + term);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool trivial_algebra_by_list(const std::string& g0) {
  if (g0 == "so(4,1)" || g0 == "e6;A1,A5,1" || g0 == "e7;A1,D6,2") return true;
  int a = 0, b = 0;
  if (std::sscanf(g0.c_str(), "so(%d,%d)", &a, &b) == 2) {
    // so(2p, r) with p > r >= 1
    return a % 2 == 0 && a / 2 > b && b >= 1;
  }
  if (std::sscanf(g0.c_str(), "sp(%d,%d)", &a, &b) == 2) {
    // sp(p, q) with p > 2q > 0 or p odd
    return (a > 2 * b && b > 0) || a % 2 == 1;
  }
  return false;
}

std::vector<std::string> classification_mismatches(const BdsDatum& d, const ClassificationRow& row) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(d.key() + " " + row.g0_label + ": " + what);
  };
  expect(row.type == d.g.type() && row.rank == d.g.rank(), "type/rank");
  expect(row.quaternionic == d.quaternionic(), "quaternionic flag vs |Delta_2| = 1");
  bool adjacent = d.g.pair(d.mu, d.g.simple_root(d.nu)) != 0;
  expect(adjacent == d.quaternionic(), "-mu adjacent to nu in the extended diagram");
  expect(row.tube_type == d.herm.tube, "tube predicate vs w_k0(eps) = -eps");
  expect(trivial_algebra_by_list(row.g0_label) == (row.invariant_degree == 0), "invariant algebra vs list of C cases");

  const auto& k = d.herm.k;
  std::vector<std::string> k1, l1, l2;
  for (const auto& comp : k.components()) {
    bool has_eps = std::find(comp.begin(), comp.end(), d.nu) != comp.end();
    if (has_eps) {
      k1.push_back(k.component_type(comp));
      std::vector<int> rest;
      for (int i : comp)
        if (i != d.nu) rest.push_back(i);
      if (!rest.empty()) {
        Subsystem sub = k.sub(rest);
        for (const auto& c : sub.components()) {
          std::vector<int> mapped;
          for (int i : c) mapped.push_back(rest[i]);
          l1.push_back(k.component_type(mapped));
        }
      }
    } else {
      l2.push_back(k.component_type(comp));
    }
  }
  auto canon = [](std::vector<std::string> v) {
    for (auto& t : v)
      if (t == "C2") t = "B2";
    std::sort(v.begin(), v.end());
    return v;
  };
  expect(canon(k1) == label_dynkin_types(row.k1_label), "k1 Dynkin type");
  expect(canon(l1) == label_dynkin_types(row.l1_label), "semisimple part of l1");
  expect(canon(l2) == label_dynkin_types(row.l2_label), "l2 Dynkin type");
  return bad;
}

ClassificationRow classify(const BdsDatum& d) {
  int nu1 = canonical_nu(d.g, d.nu);
  auto row = golden_row(d.g.type(), d.g.rank(), nu1);
  if (!row) throw std::logic_error("no golden row for " + d.key());
  // A row reached through the diagram symmetry is the same real form.
  row->nu = nu1;
  BdsDatum canon = nu1 - 1 == d.nu ? d : build_datum(RootSystem::build(d.g.type(), d.g.rank()), nu1 - 1);
  auto bad = classification_mismatches(canon, *row);
  if (!bad.empty()) throw std::logic_error("classification mismatch: " + bad.front());
  return *row;
}

// ---------------------------------------------------------------- negativity

NegativityCheck check_negativity(const BdsDatum& d, const Weight& gamma0, const Rational& t) {
  if (!d.l().is_dominant(gamma0)) throw std::invalid_argument("gamma0 " + gamma0.str() + " is not l-dominant");
  if (d.g.pair(gamma0, d.nu_star) != 0) throw std::invalid_argument("gamma0 is not orthogonal to nu*");
  NegativityCheck r;
  Weight base = gamma0 + d.rho_g;
  r.bound_mu = -d.g.pair(base, d.mu) / 2;
  r.bound_nu = -d.g.pair(base, d.delta1_highest());
  r.cond_mu = t < r.bound_mu;
  r.cond_nu = t < r.bound_nu;
  r.holds = r.cond_mu && r.cond_nu;
  if (!r.cond_mu)
    r.violated = "t < -1/2 <gamma0 + rho_g, mu> fails: t = " + to_string(t) + ", bound = " + to_string(r.bound_mu);
  else if (!r.cond_nu)
    r.violated = "t < -<gamma0 + rho_g, w_l0(nu)> fails: t = " + to_string(t) + ", bound = " + to_string(r.bound_nu);
  return r;
}

bool sufficiently_negative(const BdsDatum& d, const Weight& gamma0, const Rational& t) {
  NegativityCheck r = check_negativity(d, gamma0, t);
  if (d.quaternionic() && sufficiently_negative_quaternionic(d, gamma0, t) != r.holds)
    throw std::logic_error("quaternionic negativity form disagrees with the general negativity condition");
  return r.holds;
}

int quaternionic_d(const BdsDatum& d) {
  if (!d.quaternionic()) throw std::invalid_argument(d.key() + " is not quaternionic");
  auto r = ratio(d.mu, d.nu_star);
  if (!r || !is_integer(*r) || (*r != 1 && *r != 2)) throw std::logic_error("mu is not d nu* with d in {1,2}");
  return static_cast<int>(r->numerator());
}

bool sufficiently_negative_quaternionic(const BdsDatum& d, const Weight& gamma0, const Rational& t) {
  if (!d.l().is_dominant(gamma0)) throw std::invalid_argument("gamma0 " + gamma0.str() + " is not l-dominant");
  int dd = quaternionic_d(d);
  Rational b1 = -Rational(dd, 4) * Rational(static_cast<long>(d.Delta(1).size()) + 2);
  Weight top = d.delta1_highest();
  Rational half_sum = 0;
  for (int i = 0; i < d.g.rank(); ++i) {
    Weight psi = d.g.simple_root(i);
    half_sum += top[i] * d.g.pair(psi, psi);
  }
  Rational b2 = -d.g.pair(gamma0, top) - half_sum / 2;
  return t < b1 && t < b2;
}

}  // namespace lie
