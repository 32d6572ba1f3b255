#include <doctest.h>

#include <random>

#include "lie/cases.hpp"
#include "lie/strongorth.hpp"

using namespace lie;

TEST_CASE("C2 cascade") {
  auto h = hermitian_symmetric('C', 2, 1);
  auto c = cascade(h);
  REQUIRE(c.r == 2);
  CHECK(c.gammas[0] == -h.epsilon);
  CHECK(h.tube);
  CHECK(h.c == 3);
  auto s = verify_sum(c, h);
  CHECK(s.status == SumStatus::holds);
  CHECK(s.sum == Rational(-2) * h.eps_star);
  CHECK(strongly_orthogonal_set(c.gammas, h.k));
}

TEST_CASE("E6 Hermitian pair is not of tube type") {
  auto h = hermitian_symmetric('E', 6, 0);
  auto c = cascade(h);
  CHECK(c.r == 2);
  CHECK_FALSE(h.tube);
  CHECK(h.delta2.size() == 16);
  auto s = verify_sum(c, h);
  CHECK(s.status == SumStatus::hypothesis_not_met);
  CHECK_FALSE(s.nonzero_multiple_of_eps_star);
  CHECK(verify_partial_orthogonality(c, h));
}

TEST_CASE("E7 Hermitian pair is of tube type") {
  auto h = hermitian_symmetric('E', 7, 6);
  auto c = cascade(h);
  CHECK(c.r == 3);
  CHECK(h.tube);
  CHECK(h.delta2.size() == 27);
  CHECK(verify_sum(c, h).status == SumStatus::holds);
  std::mt19937_64 rng(9);
  std::string why;
  CHECK_MESSAGE(w_action_checks(c, h, rng, 20, &why), why);
}

TEST_CASE("Grassmannian cascades") {
  // Gr(p, n) with p <= n - p has split rank p and is tube iff n = 2p.
  for (int n = 2; n <= 8; ++n)
    for (int p = 1; 2 * p <= n; ++p) {
      auto h = hermitian_symmetric('A', n - 1, p - 1);
      auto c = cascade(h);
      CHECK(c.r == p);
      CHECK(h.tube == (n == 2 * p));
      CHECK(max_orthogonal_subset(h.delta2, h.form()) == p);
    }
}

TEST_CASE("greedy choice is unambiguous") {
  for (const auto& h : all_hermitian_pairs(6)) CHECK_MESSAGE(greedy_steps_have_unique_maximum(h), h.name);
}

TEST_CASE("cascade members are in Delta_-2 and share the length of eps") {
  for (const auto& h : all_hermitian_pairs(7)) {
    auto c = cascade(h);
    for (const auto& g : c.gammas) {
      CHECK(h.eps_coefficient(g) == -1);
      CHECK(h.form()(g, g) == h.form()(h.epsilon, h.epsilon));
    }
  }
}
