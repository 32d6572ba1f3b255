#pragma once

#include <random>
#include <string>
#include <vector>

#include "lie/bds.hpp"

namespace lie {

struct Cascade {
  std::vector<Weight> gammas;  // gamma_1 .. gamma_r, all in Delta_-2
  int r = 0;
};

// Greedy: gamma_1 = -eps, then the lexicographically highest root of Delta_-2 orthogonal to all chosen.
// Lexicographic order is on coordinates in the simple roots of k, read in index order.
Cascade cascade(const HermitianPair& h);
inline Cascade cascade(const BdsDatum& d) { return cascade(d.herm); }

enum class SumStatus { holds, fails, hypothesis_not_met };

struct SumCheck {
  SumStatus status = SumStatus::fails;
  Weight sum;
  // Non-tube case: the converse requires this to be false.
  bool nonzero_multiple_of_eps_star = false;
};

// Tube: sum(gamma) == -2 eps*. Non-tube: status hypothesis_not_met.
SumCheck verify_sum(const Cascade& c, const HermitianPair& h);
// For every j and compact simple alpha with nonzero coefficient in gamma_1+..+gamma_j: orthogonality.
bool verify_partial_orthogonality(const Cascade& c, const HermitianPair& h, std::string* why = nullptr);
// Tube only: w_l0(gamma_j) = gamma_{r+1-j} = -w_Y(gamma_j), -mu in Gamma, |gamma_i| = |eps|,
// and sum w(gamma) = -2 eps* for `samples` random words of W(l).
bool w_action_checks(const Cascade& c, const HermitianPair& h, std::mt19937_64& rng, int samples = 20,
                     std::string* why = nullptr);

// Pairwise orthogonal, and neither sum nor difference of two members is a root of k.
bool strongly_orthogonal_set(const std::vector<Weight>& roots, const Subsystem& k);
// Exhaustive maximum size of a pairwise-orthogonal subset.
int max_orthogonal_subset(const std::vector<Weight>& roots, const Pairing& form);
// True when, at every greedy step, the candidates have a unique maximal element in the root partial order.
bool greedy_steps_have_unique_maximum(const HermitianPair& h);

// Split rank per family: A III min(p,q), C I p, D III floor(p/2), BD I 2, E III 2, E VII 3.
int expected_split_rank(const HermitianPair& h);

}  // namespace lie
