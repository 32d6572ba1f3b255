#include <doctest.h>

#include <random>

#include "lie/cases.hpp"
#include "lie/lspath.hpp"

using namespace lie;

namespace {

// Heights <pi(t), alpha^vee> at every vertex >= 0 for alpha in subset.
bool vertices_dominant(const LSPath& p, const Subsystem& a, const std::vector<int>& subset) {
  for (int i : subset)
    if (p.min_height(a, i) < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("root operators are partial inverses") {
  std::mt19937 rng(8);
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'C', 2}, {'G', 2}, {'A', 3}}) {
    auto g = RootSystem::build(t, n);
    Weight lam = g.rho();
    auto model = path_model(lam, g.full());
    for (int trial = 0; trial < 100; ++trial) {
      const auto& p = model.paths[rng() % model.paths.size()];
      int i = static_cast<int>(rng() % n);
      if (auto f = f_op(p, g.full(), i)) {
        CHECK(f->endpoint() == p.endpoint() - g.simple_root(i));
        auto back = e_op(*f, g.full(), i);
        REQUIRE(back);
        CHECK(*back == p);
      }
      if (auto e = e_op(p, g.full(), i)) {
        auto back = f_op(*e, g.full(), i);
        REQUIRE(back);
        CHECK(*back == p);
      }
    }
  }
}

TEST_CASE("path endpoints give the character") {
  auto g = RootSystem::build('G', 2);
  Weight lam = g.from_fundamental({1, 1});
  auto model = path_model(lam, g.full());
  Character ch;
  for (const auto& p : model.paths) ch[p.endpoint()] += 1;
  CHECK(ch == freudenthal(lam, g.full()));
}

TEST_CASE("paths are normalized") {
  auto g = RootSystem::build('A', 2);
  Weight a = g.fundamental_weight(0);
  CHECK(LSPath({a, a}) == LSPath::straight(Rational(2) * a));
  CHECK(LSPath({a, g.zero(), a}) == LSPath::straight(Rational(2) * a));
  CHECK(concat(LSPath::straight(a), LSPath::straight(a)).increments().size() == 1);
  CHECK(shifted(TypeMultiset{AlgebraTag::l, {{a, 2}}}, a).mult(Rational(2) * a) == 2);
}

TEST_CASE("straight-line monomials reach Weyl conjugates") {
  std::mt19937 rng(10);
  auto g = RootSystem::build('B', 3);
  Weight lam = g.from_fundamental({1, 0, 1});
  for (int trial = 0; trial < 20; ++trial) {
    WeylWord w;
    for (int j = 0; j < 5; ++j) w.word.push_back(static_cast<int>(rng() % 3));
    Weight wl = g.act(w, lam);
    auto mono = straight_line_monomial(lam, wl, g.full());
    auto p = apply_monomial(LSPath::straight(lam), mono, g.full());
    REQUIRE(p);
    CHECK(*p == LSPath::straight(wl));
  }
}

TEST_CASE("Levi branching matches the character oracle") {
  auto g = RootSystem::build('C', 3);
  Weight lam = g.from_fundamental({1, 0, 1});
  for (const auto& levi : std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0}, {}}) {
    auto a = branch_to_levi(lam, g.full(), levi, AlgebraTag::l);
    CHECK(a == branch_oracle(lam, g.full(), levi, AlgebraTag::l));
  }
  CHECK_THROWS_AS(path_model(-g.fundamental_weight(0), g.full()), std::invalid_argument);
}

TEST_CASE("shift containments") {
  for (const auto& h : {hermitian_symmetric('C', 2, 1), hermitian_symmetric('C', 3, 2)})
    for (int m = 0; m <= 3; ++m)
      for (int p = 0; p <= m; ++p) {
        auto r = shift_containments(m, p, h);
        CHECK(r.up);
        CHECK(r.down_applies);
        CHECK(r.down);
      }
}

TEST_CASE("explicit paths for every p-list") {
  for (const auto& h : {hermitian_symmetric('C', 2, 1), hermitian_symmetric('C', 3, 2)}) {
    auto c = cascade(h);
    for (int m = 0; m <= 3; ++m) {
      auto res = branch_oracle(Rational(m) * h.eps_star, h.k, h.l_indices, AlgebraTag::l);
      auto model = path_model(Rational(m) * h.eps_star, h.k);
      std::unordered_set<LSPath, LSPathHash> members(model.paths.begin(), model.paths.end());
      for (const auto& pl : dominant_p_lists(m, c.r)) {
        auto path = dominant_path(m, pl, c, h, false);
        Weight end = Rational(m) * h.eps_star;
        for (int i = 1; i <= c.r; ++i) end += Rational(pl[i]) * c.gammas[i - 1];
        CHECK(path.endpoint == end);
        CHECK(members.count(path.tau) == 1);
        CHECK(vertices_dominant(path.tau, h.k, h.l_indices));
        CHECK(res.mult(end) > 0);
      }
    }
  }
}

TEST_CASE("p-lists") {
  // nonincreasing (p0, p1, p2) in [0, 2]: choose 3 from 5 with repetition pattern
  CHECK(dominant_p_lists(2, 2).size() == 10);
  auto h = hermitian_symmetric('C', 2, 1);
  auto c = cascade(h);
  CHECK_THROWS_AS(dominant_path(2, {1, 2, 0}, c, h), std::invalid_argument);
  CHECK_THROWS_AS(dominant_path(2, {3, 1, 0}, c, h), std::invalid_argument);
  CHECK_THROWS_AS(dominant_path(2, {1, 0}, c, h), std::invalid_argument);
}

TEST_CASE("transport of highest weights") {
  auto d = resolve_case("sp(2,2)");
  const auto& h = d.herm;
  auto c = cascade(h);
  Weight phi = h.k.zero();
  for (int m = 1; m <= 2; ++m)
    for (const auto& pl : dominant_p_lists(m, c.r)) {
      auto path = dominant_path(m, pl, c, h, false);
      Weight out = transport_type(phi, m, path.endpoint, h);
      CHECK(out == phi + h.w_Y(path.endpoint));
    }
}
