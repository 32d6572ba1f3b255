#include <doctest.h>

#include <algorithm>
#include <random>

#include "lie/cases.hpp"
#include "lie/decomp.hpp"

using namespace lie;

namespace {

long long total_dim(const TypeMultiset& t, const Subsystem& a) {
  long long s = 0;
  for (const auto& [w, k] : t.entries) s += k * weyl_dim(w, a);
  return s;
}

long long char_dim(const Character& c) {
  long long s = 0;
  for (const auto& [w, k] : c) s += k;
  return s;
}

}  // namespace

TEST_CASE("Freudenthal multiplicities") {
  auto a2 = RootSystem::build('A', 2);
  auto adj = freudenthal(a2.highest_root(), a2.full());
  CHECK(adj.at(a2.zero()) == 2);
  CHECK(char_dim(adj) == 8);
  auto g2 = RootSystem::build('G', 2);
  auto v7 = freudenthal(g2.fundamental_weight(0), g2.full());
  CHECK(v7.at(g2.zero()) == 1);
  CHECK(v7.size() == 7);
  auto b3 = RootSystem::build('B', 3);
  Weight lam = b3.from_fundamental({1, 1, 1});
  CHECK(char_dim(freudenthal(lam, b3.full())) == weyl_dim(lam, b3.full()));
}

TEST_CASE("weight multiplicities are Weyl invariant") {
  auto c3 = RootSystem::build('C', 3);
  auto ch = freudenthal(c3.from_fundamental({2, 1, 0}), c3.full());
  for (const auto& [w, k] : ch)
    for (int i = 0; i < 3; ++i) CHECK(ch.at(c3.full().reflect(i, w)) == k);
}

TEST_CASE("tensor products by two methods") {
  std::mt19937 rng(6);
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
    auto g = RootSystem::build(t, n);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Rational> l1(n), l2(n);
      for (int i = 0; i < n; ++i) {
        l1[i] = Rational(static_cast<long long>(rng() % 3));
        l2[i] = Rational(static_cast<long long>(rng() % 2));
      }
      Weight a = g.from_fundamental(l1), b = g.from_fundamental(l2);
      auto prod = tensor_decompose(a, b, g.full(), AlgebraTag::g);
      CHECK(total_dim(prod, g.full()) == weyl_dim(a, g.full()) * weyl_dim(b, g.full()));
      // Brauer: alternating sum over W of the product character.
      Character chi;
      auto ca = freudenthal(a, g.full()), cb = freudenthal(b, g.full());
      for (const auto& [x, p] : ca)
        for (const auto& [y, q] : cb) chi[x + y] += p * q;
      for (const auto& [w, k] : prod.entries) CHECK(brauer_multiplicity(w, chi, g.full()) == k);
    }
  }
}

TEST_CASE("known tensor product") {
  auto a1 = RootSystem::build('A', 1);
  auto p = tensor_decompose(a1.from_fundamental({2}), a1.from_fundamental({2}), a1.full(), AlgebraTag::g);
  CHECK(p.count() == 3);
  CHECK(p.mult(a1.from_fundamental({4})) == 1);
  CHECK(p.mult(a1.from_fundamental({2})) == 1);
  CHECK(p.mult(a1.zero()) == 1);
}

TEST_CASE("partitions") {
  CHECK(partitions(5, 5).size() == 7);
  CHECK(partitions(5, 2).size() == 3);
  CHECK(partitions(0, 3).size() == 1);
  for (const auto& p : partitions(6, 3)) {
    int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      s += p[i];
      if (i) CHECK(p[i] <= p[i - 1]);
    }
    CHECK(s == 6);
  }
}

TEST_CASE("symmetric powers") {
  auto a1 = RootSystem::build('A', 1);
  auto v = freudenthal(a1.from_fundamental({1}), a1.full());
  auto s = sym_power_characters(v, 4);
  for (int m = 0; m <= 4; ++m) CHECK(char_dim(s[m]) == m + 1);
  auto dec = decompose_character(s[4], a1.full(), AlgebraTag::g);
  CHECK(dec.count() == 1);
  CHECK(dec.mult(a1.from_fundamental({4})) == 1);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("Sp(2)/U(2) in degree two splits as 5 + 1") {
  auto h = hermitian_symmetric('C', 2, 1);
  auto s2 = schmid(2, cascade(h), h);
  REQUIRE(s2.count() == 2);
  std::vector<long long> dims;
  for (const auto& [w, k] : s2.entries) dims.push_back(weyl_dim(w, h.l));
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<long long>{1, 5});
  CHECK(binomial(3 + 2 - 1, 2) == 6);
}

TEST_CASE("relative invariant degrees") {
  CHECK(detect_relative_invariants(resolve_case("so(4,3)"), 8).first_degree() == 4);
  CHECK(detect_relative_invariants(resolve_case("sp(2,2)"), 8).first_degree() == 2);
  CHECK(detect_relative_invariants(resolve_case("f4;B4"), 8).first_degree() == 2);
  CHECK(detect_relative_invariants(resolve_case("g2-split"), 8).first_degree() == 4);
  auto none = detect_relative_invariants(resolve_case("so(4,1)"), 8);
  CHECK(none.first_degree() == 0);
  CHECK(none.m_checked == 8);
}

TEST_CASE("relative invariants are multiples of eps*") {
  for (const char* name : {"sp(2,2)", "f4;B4"}) {
    auto d = resolve_case(name);
    auto scan = detect_relative_invariants(d, 4);
    REQUIRE_FALSE(scan.hits.empty());
    const auto& hit = scan.hits.front();
    CHECK(weyl_dim(hit.weight, d.l()) == 1);
    CHECK(d.g.pair(hit.weight, d.eps_star) < 0);
  }
}

TEST_CASE("guard") {
  auto e8 = RootSystem::build('E', 8);
  CHECK_THROWS_AS(freudenthal(e8.fundamental_weight(0), e8.full(), 1000), GuardExceeded);
  try {
    freudenthal(e8.fundamental_weight(0), e8.full(), 1000);
  } catch (const GuardExceeded& e) {
    CHECK(e.size() == doctest::Approx(3875));
  }
  auto d = resolve_case("so(4,3)");
  CHECK_THROWS_AS(sym_power_u1(6, d, 50), GuardExceeded);
}

TEST_CASE("decompose rejects a non-character") {
  auto a1 = RootSystem::build('A', 1);
  Character bad;
  bad[a1.simple_root(0)] = 1;  // W-invariant, but the zero weight is missing
  bad[-a1.simple_root(0)] = 1;
  CHECK_THROWS_AS(decompose_character(bad, a1.full(), AlgebraTag::g), std::logic_error);
}
