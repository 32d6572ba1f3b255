#include <doctest.h>

#include <random>
#include <set>

#include "lie/cases.hpp"
#include "lie/series.hpp"

using namespace lie;

namespace {

Weight w3(long long a, long long b, long long c) { return Weight::from_ints({a, b, c}); }

std::set<Weight> as_set(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("sp(2,1) grading") {
  auto d = resolve_case("sp(2,1)");
  CHECK(d.key() == "C3:2");
  std::vector<Weight> d0p;
  for (const auto& x : d.Delta(0))
    if (x.nonnegative()) d0p.push_back(x);
  CHECK(as_set(d0p) == std::set<Weight>{w3(1, 0, 0), w3(0, 0, 1)});
  CHECK(as_set(d.Delta(1)) == std::set<Weight>{w3(0, 1, 0), w3(1, 1, 0), w3(1, 1, 1), w3(0, 1, 1)});
  CHECK(as_set(d.Delta(2)) == std::set<Weight>{w3(2, 2, 1), w3(1, 2, 1), w3(0, 2, 1)});
  CHECK(d.epsilon == w3(0, 2, 1));
  CHECK(d.eps_star == d.nu_star);
  CHECK(d.c == 3);
  CHECK(d.s == 3);
  CHECK(d.herm.tube);
}

TEST_CASE("grading is a Z-grading by the nu coefficient") {
  for (const auto& d : all_data(6)) {
    std::size_t total = 0;
    for (int i = -2; i <= 2; ++i) {
      total += d.Delta(i).size();
      for (const auto& r : d.Delta(i)) CHECK(r[d.nu] == i);
    }
    CHECK(total == d.g.all_roots().size());
    CHECK(d.g.pair(d.g.simple_root(d.nu), d.g.simple_root(d.nu)) == 2);
    CHECK(d.Delta(2).size() == d.Delta(-2).size());
    CHECK(static_cast<int>(d.Delta(2).size()) == d.s);
  }
}

TEST_CASE("orders of the exceptional algebras") {
  CHECK(enumerate_bds_orders(RootSystem::build('E', 8)) == std::vector<int>{0, 7});
  CHECK(enumerate_bds_orders(RootSystem::build('G', 2)) == std::vector<int>{1});
  CHECK(enumerate_bds_orders(RootSystem::build('F', 4)) == std::vector<int>{0, 3});
  CHECK(enumerate_bds_orders(RootSystem::build('A', 4)).empty());
  CHECK_THROWS_AS(build_datum(RootSystem::build('E', 8), 2), std::invalid_argument);
}

TEST_CASE("case names") {
  CHECK(resolve_case("so(4,5)").key() == "B4:2");
  CHECK(resolve_case("so(5,4)").key() == "B4:2");
  CHECK(resolve_case("so(4,4)").key() == "D4:2");
  CHECK(resolve_case("sp(1,2)").key() == "C3:1");
  CHECK(resolve_case("g2-split").key() == "G2:2");
  CHECK(resolve_case("f4;B4").key() == "F4:4");
  CHECK(resolve_case("E7:6").key() == "E7:6");
  CHECK_THROWS_AS(resolve_case("so(3,3)"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_case("A3:1"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_case("nonsense"), std::invalid_argument);
}

TEST_CASE("quaternionic data") {
  CHECK(quaternionic_d(resolve_case("so(4,1)")) == 2);
  CHECK(quaternionic_d(resolve_case("sp(1,3)")) == 2);
  CHECK(quaternionic_d(resolve_case("so(4,5)")) == 1);
  CHECK(quaternionic_d(resolve_case("g2-split")) == 1);
  CHECK(quaternionic_d(resolve_case("E8:8")) == 1);
  CHECK_THROWS(quaternionic_d(resolve_case("sp(2,2)")));
  for (const auto& d : all_data(8)) {
    if (!d.quaternionic()) continue;
    CHECK(d.mu == Rational(quaternionic_d(d)) * d.nu_star);
  }
}

TEST_CASE("classification rows are unique per real form") {
  std::set<std::string> labels;
  int rows = 0;
  for (const auto& d : all_data(8)) {
    if (canonical_nu(d.g, d.nu) != d.nu + 1) continue;
    auto row = classify(d);
    ++rows;
    CHECK(labels.insert(row.g0_label).second);
    CHECK(row.quaternionic == d.quaternionic());
    CHECK(row.tube_type == d.herm.tube);
  }
  CHECK(rows == static_cast<int>(labels.size()));
}

TEST_CASE("negativity reports the violated inequality") {
  auto d = resolve_case("sp(2,1)");
  auto chk = check_negativity(d, d.g.zero(), Rational(-1));
  CHECK_FALSE(chk.holds);
  CHECK(chk.bound_mu == -3);
  CHECK(chk.bound_nu == -4);
  CHECK(chk.violated.find("mu") != std::string::npos);
  CHECK(check_negativity(d, d.g.zero(), Rational(-5)).holds);
  CHECK_FALSE(check_negativity(d, d.g.zero(), Rational(-4)).holds);  // strict
  Weight bad = d.g.zero();
  bad[0] = Rational(-1);
  CHECK_THROWS_AS(check_negativity(d, bad, Rational(-10)), std::invalid_argument);
}

TEST_CASE("negativity is monotone in t") {
  std::mt19937 rng(4);
  for (const char* name : {"so(4,3)", "sp(2,2)", "g2-split"}) {
    auto d = resolve_case(name);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> labels;
      for (int i = 0; i + 1 < d.g.rank(); ++i) labels.push_back(Rational(static_cast<long long>(rng() % 3)));
      Weight g0 = gamma0_from_labels(d, labels);
      Rational t = Rational(-static_cast<long long>(rng() % 30), 2);
      if (sufficiently_negative(d, g0, t)) CHECK(sufficiently_negative(d, g0, t - 1));
    }
  }
}

TEST_CASE("spin structure on small cases") {
  CHECK(spin_structure(hermitian_symmetric('A', 1, 0)));     // P^1
  CHECK_FALSE(spin_structure(hermitian_symmetric('A', 2, 0)));  // P^2
  CHECK(spin_structure(hermitian_symmetric('C', 3, 2)));
  CHECK_FALSE(spin_structure(hermitian_symmetric('C', 2, 1)));
}

TEST_CASE("dynkin type labels") {
  CHECK(label_dynkin_types("sp(1)+so(5)") == std::vector<std::string>{"A1", "B2"});
  CHECK(trivial_algebra_by_list("so(4,1)"));
}
