#include <doctest.h>

#include <random>

#include "lie/kernels.hpp"
#include "lie/lspath.hpp"

using namespace lie;
using kernels::Exec;

TEST_CASE("dominant multiplicities: parallel equals serial") {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'B', 3}, {'C', 3}, {'F', 4}, {'D', 4}, {'G', 2}}) {
    auto g = RootSystem::build(t, n);
    Weight lam = g.rho() + g.highest_root();
    CHECK(kernels::dominant_multiplicities(lam, g.full(), Exec::serial) ==
          kernels::dominant_multiplicities(lam, g.full(), Exec::parallel));
  }
}

TEST_CASE("dominant multiplicities match the full character") {
  auto g = RootSystem::build('B', 3);
  Weight lam = g.from_fundamental({1, 0, 2});
  auto full = freudenthal(lam, g.full());
  auto dom = kernels::dominant_multiplicities(lam, g.full(), Exec::serial);
  for (const auto& [w, k] : dom) CHECK(full.at(w) == k);
  for (const auto& [w, k] : full)
    if (g.full().is_dominant(w)) CHECK(dom.count(w) == 1);
}

TEST_CASE("convolve: parallel equals serial and dimensions multiply") {
  auto g = RootSystem::build('C', 3);
  auto x = freudenthal(g.from_fundamental({1, 1, 0}), g.full());
  auto y = freudenthal(g.from_fundamental({0, 0, 1}), g.full());
  auto s = kernels::convolve(x, y, Exec::serial);
  CHECK(s == kernels::convolve(x, y, Exec::parallel));
  long long dx = 0, dy = 0, ds = 0;
  for (const auto& [w, k] : x) dx += k;
  for (const auto& [w, k] : y) dy += k;
  for (const auto& [w, k] : s) ds += k;
  CHECK(ds == dx * dy);
}

TEST_CASE("path model: parallel equals serial") {
  auto g = RootSystem::build('B', 3);
  Weight lam = g.from_fundamental({1, 1, 1});
  auto a = path_model(lam, g.full(), kDefaultGuard, Exec::serial);
  auto b = path_model(lam, g.full(), kDefaultGuard, Exec::parallel);
  std::unordered_set<LSPath, LSPathHash> sa(a.paths.begin(), a.paths.end()), sb(b.paths.begin(), b.paths.end());
  CHECK(sa == sb);
  CHECK(static_cast<long long>(a.paths.size()) == weyl_dim(lam, g.full()));
  CHECK(kernels::max_threads() >= 1);
}
