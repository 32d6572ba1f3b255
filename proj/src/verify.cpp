#include "lie/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lie/cases.hpp"
#include "lie/lspath.hpp"
#include "lie/series.hpp"

namespace lie {

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rootsys", "bds", "cascade", "schmid", "lspath", "series"};
  return names;
}

namespace {

constexpr const char* kTypes = "ABCDEFG";

// Runs body; a thrown exception is a failure carrying its message.
void check(SuiteResult& s, const std::string& name, const std::function<std::string(bool&)>& body) {
  CheckResult c{name, false, ""};
  try {
    bool ok = true;
    c.detail = body(ok);
    c.pass = ok;
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  s.checks.push_back(std::move(c));
}

template <class F>
void each_type(int rank_max, F&& f) {
  for (const char* t = kTypes; *t; ++t)
    for (int n = 1; n <= rank_max; ++n)
      if (RootSystem::valid_pair(*t, n)) f(*t, n);
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long long positive_root_count(char t, int n) {
  switch (t) {
    case 'A': return static_cast<long long>(n) * (n + 1) / 2;
    case 'B':
    case 'C': return static_cast<long long>(n) * n;
    case 'D': return static_cast<long long>(n) * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

long long weyl_order_formula(char t, int n) {
  switch (t) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1LL << n) * factorial(n);
    case 'D': return (1LL << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    default: return 12;
  }
}

std::string join(const std::vector<std::string>& v, std::size_t max = 5) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < max; ++i) out += (i ? "; " : "") + v[i];
  if (v.size() > max) out += "; ... (" + std::to_string(v.size()) + " total)";
  return out;
}

// Records a failure message and clears ok.
struct Failures {
  std::vector<std::string> list;
  void add(const std::string& s) { list.push_back(s); }
  std::string finish(bool& ok, const std::string& summary) const {
    ok = list.empty();
    return ok ? summary : join(list);
  }
};

std::vector<HermitianPair> hermitian_cases(int rank_max) {
  auto out = all_hermitian_pairs(rank_max);
  for (const auto& d : all_data(rank_max)) out.push_back(d.herm);
  return out;
}

// ---------------------------------------------------------------- rootsys

SuiteResult suite_rootsys() {
  SuiteResult s{"rootsys", {}};
  check(s, "positive root counts", [](bool& ok) {
    Failures f;
    int n_cases = 0;
    each_type(8, [&](char t, int n) {
      ++n_cases;
      auto g = RootSystem::build(t, n);
      if (static_cast<long long>(g.positive_roots().size()) != positive_root_count(t, n)) f.add(g.label());
    });
    return f.finish(ok, std::to_string(n_cases) + " root systems");
  });
  check(s, "adjoint dimension", [](bool& ok) {
    Failures f;
    each_type(8, [&](char t, int n) {
      auto g = RootSystem::build(t, n);
      long long dim = weyl_dim(g.highest_root(), g.full());
      if (dim != n + 2 * static_cast<long long>(g.positive_roots().size())) f.add(g.label());
    });
    return f.finish(ok, "dim V(theta) = dim g");
  });
  check(s, "Weyl group order", [](bool& ok) {
    Failures f;
    each_type(8, [&](char t, int n) {
      auto g = RootSystem::build(t, n);
      long long want = weyl_order_formula(t, n);
      if (static_cast<long long>(g.full().weyl_group_order()) != want) f.add(g.label() + " order");
      if (want <= 50000 && static_cast<long long>(orbit(g.rho(), g.full()).size()) != want)
        f.add(g.label() + " |W rho|");
    });
    return f.finish(ok, "formula and rho-orbit sizes");
  });
  check(s, "w0 rho = -rho", [](bool& ok) {
    Failures f;
    each_type(8, [&](char t, int n) {
      auto g = RootSystem::build(t, n);
      if (g.act(g.longest_element(g.full().all_indices()), g.rho()) != -g.rho()) f.add(g.label());
    });
    return f.finish(ok, "all types");
  });
  return s;
}

// ---------------------------------------------------------------- bds

SuiteResult suite_bds() {
  SuiteResult s{"bds", {}};
  const auto data = all_data(8);
  check(s, "classification rows", [&](bool& ok) {
    Failures f;
    for (const auto& d : data) try {
        classify(d);
      } catch (const std::exception& e) {
        f.add(d.key() + ": " + e.what());
      }
    return f.finish(ok, std::to_string(data.size()) + " data classified");
  });
  check(s, "Sp(2,1) example", [](bool& ok) {
    auto d = resolve_case("sp(2,1)");
    auto set_of = [](const std::vector<Weight>& v) { return std::set<Weight>(v.begin(), v.end()); };
    auto w = [](long long a, long long b, long long c) { return Weight::from_ints({a, b, c}); };
    Failures f;
    std::vector<Weight> d0p;
    for (const auto& x : d.Delta(0))
      if (x.nonnegative()) d0p.push_back(x);
    if (set_of(d0p) != std::set<Weight>{w(1, 0, 0), w(0, 0, 1)}) f.add("Delta_0^+");
    if (set_of(d.Delta(1)) != std::set<Weight>{w(0, 1, 0), w(1, 1, 0), w(1, 1, 1), w(0, 1, 1)}) f.add("Delta_1");
    if (set_of(d.Delta(2)) != std::set<Weight>{w(2, 2, 1), w(1, 2, 1), w(0, 2, 1)}) f.add("Delta_2");
    if (d.epsilon != w(0, 2, 1)) f.add("eps");
    if (d.eps_star != d.nu_star) f.add("eps* != nu*");
    if (d.c != 3) f.add("c = " + std::to_string(d.c));
    return f.finish(ok, "c = 3, eps* = nu*");
  });
  check(s, "<alpha, beta> <= 0 on Delta_-1 x Delta_2", [&](bool& ok) {
    Failures f;
    for (const auto& d : data)
      for (const auto& a : d.Delta(-1))
        for (const auto& b : d.Delta(2))
          if (d.g.pair(a, b) > 0) f.add(d.key() + " " + a.str() + " " + b.str());
    return f.finish(ok, "all data");
  });
  check(s, "eps* = |eps|^2 nu* / 4", [&](bool& ok) {
    Failures f;
    for (const auto& d : data)
      if (d.eps_star != (d.g.pair(d.epsilon, d.epsilon) / 4) * d.nu_star) f.add(d.key());
    return f.finish(ok, "all data");
  });
  check(s, "spin structures", [](bool& ok) {
    Failures f;
    auto expect = [&](char t, int n, int node, bool spin, const std::string& what) {
      if (spin_structure(hermitian_symmetric(t, n, node)) != spin) f.add(what);
    };
    for (int n = 1; n <= 8; ++n)
      for (int p = 1; p <= n; ++p) expect('A', n, p - 1, (n + 1) % 2 == 0, "Gr(" + std::to_string(p) + ",A" + std::to_string(n) + ")");
    for (int n = 2; n <= 8; ++n) expect('B', n, 0, false, "quadric B" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) expect('D', n, 0, true, "quadric D" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) expect('D', n, n - 1, true, "SO(2p)/U(p) D" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) expect('C', n, n - 1, n % 2 == 1, "Sp(p)/U(p) C" + std::to_string(n));
    expect('E', 6, 0, true, "E6");
    expect('E', 7, 6, true, "E7");
    return f.finish(ok, "Grassmannians, quadrics, SO(2p)/U(p), Sp(p)/U(p), E6, E7");
  });
  check(s, "quaternionic negativity form", [&](bool& ok) {
    std::mt19937_64 rng(7);
    int n = 0;
    for (const auto& d : data) {
      if (!d.quaternionic()) continue;
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> labels;
        for (int i = 0; i + 1 < d.g.rank(); ++i) labels.push_back(Rational(static_cast<long long>(rng() % 3)));
        Weight g0 = gamma0_from_labels(d, labels);
        Rational t = Rational(-static_cast<long long>(rng() % 40), 2);
        sufficiently_negative(d, g0, t);  // throws when the two forms disagree
        ++n;
      }
    }
    ok = true;
    return std::to_string(n) + " samples agree";
  });
  return s;
}

// ---------------------------------------------------------------- cascade

SuiteResult suite_cascade() {
  SuiteResult s{"cascade", {}};
  const auto cases = hermitian_cases(8);
  check(s, "sum of cascade (tube iff -2 eps*)", [&](bool& ok) {
    Failures f;
    for (const auto& h : cases) {
      auto c = cascade(h);
      auto sc = verify_sum(c, h);
      if (h.tube && sc.status != SumStatus::holds) f.add(h.name + " tube but sum " + sc.sum.str());
      if (!h.tube && (sc.status != SumStatus::hypothesis_not_met || sc.nonzero_multiple_of_eps_star))
        f.add(h.name + " non-tube but sum is a multiple of eps*");
    }
    return f.finish(ok, std::to_string(cases.size()) + " Hermitian cases");
  });
  check(s, "partial-sum orthogonality", [&](bool& ok) {
    Failures f;
    for (const auto& h : cases) {
      std::string why;
      if (!verify_partial_orthogonality(cascade(h), h, &why)) f.add(h.name + ": " + why);
    }
    return f.finish(ok, "all cases");
  });
  check(s, "rank and strong orthogonality", [&](bool& ok) {
    Failures f;
    for (const auto& h : cases) {
      auto c = cascade(h);
      if (c.r != expected_split_rank(h)) f.add(h.name + " r = " + std::to_string(c.r));
      if (!strongly_orthogonal_set(c.gammas, h.k)) f.add(h.name + " not strongly orthogonal");
      if (c.gammas.empty() || c.gammas.front() != -h.epsilon) f.add(h.name + " gamma_1 != -eps");
    }
    return f.finish(ok, "r equals the split rank");
  });
  check(s, "Weyl group action (tube)", [&](bool& ok) {
    Failures f;
    std::mt19937_64 rng(11);
    for (const auto& h : cases) {
      if (!h.tube) continue;
      std::string why;
      if (!w_action_checks(cascade(h), h, rng, 20, &why)) f.add(h.name + ": " + why);
    }
    return f.finish(ok, "w_l0, w_Y and random W(l) sums");
  });
  return s;
}

// ---------------------------------------------------------------- schmid

SuiteResult suite_schmid() {
  SuiteResult s{"schmid", {}};
  const auto cases = hermitian_cases(8);
  check(s, "dimension identity m <= 5", [&](bool& ok) {
    Failures f;
    for (const auto& h : cases) {
      auto c = cascade(h);
      const long long n = static_cast<long long>(h.delta2.size());
      for (int m = 0; m <= 5; ++m) {
        long double total = 0;
        for (const auto& [w, k] : schmid(m, c, h).entries) total += static_cast<long double>(k) * weyl_dim(w, h.l);
        if (total != binomial(n + m - 1, m)) f.add(h.name + " m=" + std::to_string(m));
      }
    }
    return f.finish(ok, std::to_string(cases.size()) + " cases");
  });
  check(s, "character oracle rank <= 4, m <= 3", [](bool& ok) {
    Failures f;
    for (const auto& h : all_hermitian_pairs(4)) {
      Character v;
      for (const auto& b : h.delta_m2) v[b] += 1;
      auto chars = sym_power_characters(v, 3);
      auto c = cascade(h);
      for (int m = 0; m <= 3; ++m) {
        auto got = schmid(m, c, h);
        auto want = decompose_character(chars[m], h.l, AlgebraTag::k);
        if (got.entries != want.entries) f.add(h.name + " m=" + std::to_string(m));
      }
    }
    return f.finish(ok, "multiplicity free, highest weights sum a_i gamma_i");
  });
  return s;
}

// ---------------------------------------------------------------- lspath

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

SuiteResult suite_lspath(std::size_t guard) {
  SuiteResult s{"lspath", {}};
  check(s, "path model equals character oracle (dim <= 300)", [&](bool& ok) {
    Failures f;
    int shapes = 0;
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'C', 2}, {'G', 2}}) {
      auto g = RootSystem::build(t, n);
      for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
          Weight lam = g.from_fundamental({Rational(a), Rational(b)});
          if (weyl_dim(lam, g.full()) > 300) continue;
          ++shapes;
          auto model = path_model(lam, g.full(), guard);
          if (static_cast<long long>(model.paths.size()) != weyl_dim(lam, g.full())) f.add(g.label() + lam.str() + " size");
          for (const auto& levi : all_subsets(n))
            if (!(branch_to_levi(model, g.full(), levi, AlgebraTag::l) ==
                  branch_oracle(lam, g.full(), levi, AlgebraTag::l, guard)))
              f.add(g.label() + " " + lam.str());
        }
    }
    return f.finish(ok, std::to_string(shapes) + " shapes, every Levi subset");
  });
  check(s, "tensor rule on concatenations", [&](bool& ok) {
    Failures f;
    std::mt19937_64 rng(5);
    auto g = RootSystem::build('C', 2);
    auto m1 = path_model(g.from_fundamental({1, 1}), g.full(), guard);
    auto m2 = path_model(g.from_fundamental({2, 0}), g.full(), guard);
    for (int i = 0; i < 200; ++i) {
      const auto& p1 = m1.paths[rng() % m1.paths.size()];
      const auto& p2 = m2.paths[rng() % m2.paths.size()];
      f_on_concat(p1, p2, g.full(), static_cast<int>(rng() % 2));  // throws on disagreement
    }
    return f.finish(ok, "200 random pairs");
  });
  const std::vector<HermitianPair> tube{hermitian_symmetric('C', 2, 1), hermitian_symmetric('C', 3, 2)};
  check(s, "branching containments m <= 3", [&](bool& ok) {
    Failures f;
    for (const auto& h : tube)
      for (int m = 0; m <= 3; ++m)
        for (int p = 0; p <= m; ++p) {
          auto r = shift_containments(m, p, h);
          if (!r.up || (r.down_applies && !r.down))
            f.add(h.name + " m=" + std::to_string(m) + " p=" + std::to_string(p));
        }
    return f.finish(ok, "shift by +p eps* and -p eps*");
  });
  check(s, "explicit l-dominant paths m <= 3", [&](bool& ok) {
    Failures f;
    int n = 0;
    for (const auto& h : tube) {
      auto c = cascade(h);
      for (int m = 0; m <= 3; ++m) {
        auto res = branch_oracle(Rational(m) * h.eps_star, h.k, h.l_indices, AlgebraTag::l, guard);
        for (const auto& pl : dominant_p_lists(m, c.r)) {
          ++n;
          auto path = dominant_path(m, pl, c, h);
          if (res.mult(path.endpoint) == 0) f.add(h.name + " endpoint " + path.endpoint.str());
          // dual statement: (m - 2 p0) eps* - sum p_j gamma_{r+1-j}
          Weight lam = Rational(m - 2 * pl[0]) * h.eps_star;
          for (int j = 1; j <= c.r; ++j) lam -= Rational(pl[j]) * c.gammas[c.r - j];
          if (res.mult(lam) == 0) f.add(h.name + " dual " + lam.str());
        }
      }
    }
    return f.finish(ok, std::to_string(n) + " p-lists");
  });
  return s;
}

// ---------------------------------------------------------------- series

SuiteResult suite_series(std::size_t guard) {
  SuiteResult s{"series", {}};
  std::vector<BdsDatum> quat;
  for (const auto& d : all_data(4))
    if (d.quaternionic()) quat.push_back(d);
  check(s, "K-types agree with the sl2 factorization", [&](bool& ok) {
    Failures f;
    for (const auto& d : quat) {
      Weight g0 = d.g.zero();
      auto p = make_series_params(d, g0, most_negative_bound(d, g0), 4, 3, guard);
      auto qd = quaternionic_datum(d);
      if (!(bds_k_types(p) == quaternionic_k_types(p, qd))) f.add(d.key() + " K-types");
      if (!(holo_l_types(p) == quaternionic_holo_l_types(p, qd))) f.add(d.key() + " holomorphic types");
    }
    return f.finish(ok, std::to_string(quat.size()) + " quaternionic data, m <= 4");
  });
  check(s, "Borel-Weil-Bott weights are k-dominant", [&](bool& ok) {
    Failures f;
    std::mt19937_64 rng(3);
    auto d = resolve_case("C2:1");
    Weight g0 = d.g.zero();
    Rational t0 = most_negative_bound(d, g0);
    for (int i = 0; i < 50; ++i) {
      Weight kappa = (t0 - Rational(static_cast<long long>(rng() % 5))) * d.nu_star;
      int steps = static_cast<int>(rng() % 6);
      for (int j = 0; j < steps; ++j) kappa += d.Delta(-1)[rng() % d.Delta(-1).size()];
      Weight lam = d.l().dominant_rep(kappa);
      Weight out = bwb_highest_weight(lam, d);
      if (!d.k().is_dominant(out)) f.add(out.str());
    }
    return f.finish(ok, "50 random inputs");
  });
  check(s, "no common types for so(4,1), sp(1,2) with gamma0 = 0", [&](bool& ok) {
    Failures f;
    for (const char* name : {"so(4,1)", "sp(1,2)"}) {
      auto d = resolve_case(name);
      Weight g0 = d.g.zero();
      auto p = make_series_params(d, g0, most_negative_bound(d, g0), 12, 6, guard);
      if (!common_l_types_quaternionic(p, quaternionic_datum(d)).types.empty()) f.add(name);
    }
    return f.finish(ok, "empty at m_max = 12");
  });
  check(s, "tube pipeline on sp(2,2)", [&](bool& ok) {
    Failures f;
    auto d = resolve_case("sp(2,2)");
    Weight g0 = d.g.zero();
    auto p = make_series_params(d, g0, most_negative_bound(d, g0), 4, 2, guard);
    TubeBounds b;
    b.a1_max = 1;
    auto rep = common_l_types_tube(p, b);
    if (rep.q != -1) f.add("q = " + to_string(rep.q));
    for (const auto& t : rep.types)
      if (t.certified_j.size() < 2) f.add(t.weight.str());
    return f.finish(ok, std::to_string(rep.types.size()) + " types certified");
  });
  return s;
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::size_t guard) {
  if (name == "rootsys") return suite_rootsys();
  if (name == "bds") return suite_bds();
  if (name == "cascade") return suite_cascade();
  if (name == "schmid") return suite_schmid();
  if (name == "lspath") return suite_lspath(guard);
  if (name == "series") return suite_series(guard);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace lie
