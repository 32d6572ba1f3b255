#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lie/bds.hpp"
#include "lie/strongorth.hpp"

namespace lie {

// weight -> multiplicity; multiplicities may be negative for virtual characters.
using Character = std::unordered_map<Weight, long long, WeightHash>;

enum class AlgebraTag { g, k, l };
const char* tag_name(AlgebraTag t);

// Highest weights with multiplicity, ordered lexicographically by weight.
struct TypeMultiset {
  AlgebraTag tag = AlgebraTag::g;
  std::map<Weight, long long> entries;

  void add(const Weight& w, long long m);
  long long mult(const Weight& w) const;
  long long count() const;
  bool empty() const { return entries.empty(); }
  friend bool operator==(const TypeMultiset&, const TypeMultiset&) = default;
};

class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, long double size, std::size_t guard)
      : std::runtime_error(what + " needs " + std::to_string(static_cast<long long>(size)) + " > guard " +
                           std::to_string(guard)),
        size_(size) {}
  long double size() const { return size_; }

 private:
  long double size_;
};

constexpr std::size_t kDefaultGuard = 1'000'000;

long long weyl_dim(const Weight& lambda, const Subsystem& a);
// Floating estimate, safe for guard checks on large modules.
long double weyl_dim_estimate(const Weight& lambda, const Subsystem& a);
// All weights of V(lambda), lambda dominant integral. Throws GuardExceeded when dim > guard.
Character freudenthal(const Weight& lambda, const Subsystem& a, std::size_t guard = kDefaultGuard);
// Dominant weights of V(lambda) only.
Character dominant_character(const Weight& lambda, const Subsystem& a);
// W-orbit of a dominant weight.
std::vector<Weight> orbit(const Weight& dominant, const Subsystem& a);
// Expands a W-invariant character given by its dominant part.
Character expand_dominant(const Character& dominant_part, const Subsystem& a);

// Decomposes a W-invariant character by repeatedly stripping the highest dominant weight.
// Throws std::logic_error if chi is not a nonnegative combination of irreducibles.
TypeMultiset decompose_character(const Character& chi, const Subsystem& a, AlgebraTag tag);
// V(lambda) (x) M, M given by its full character (Klimyk / Racah-Speiser).
TypeMultiset klimyk(const Weight& lambda, const Character& m, const Subsystem& a, AlgebraTag tag);
TypeMultiset tensor_decompose(const Weight& l1, const Weight& l2, const Subsystem& a, AlgebraTag tag,
                              std::size_t guard = kDefaultGuard);
// Restriction of V(lambda) to the sub-system spanned by simple roots `levi` of a.
TypeMultiset branch_oracle(const Weight& lambda, const Subsystem& a, const std::vector<int>& levi,
                           AlgebraTag tag, std::size_t guard = kDefaultGuard);
// Multiplicity of V(lambda) in chi by the alternating sum over W; requires a small Weyl group.
long long brauer_multiplicity(const Weight& lambda, const Character& chi, const Subsystem& a);

// Partitions of m into at most r parts, each nonincreasing.
std::vector<std::vector<int>> partitions(int m, int r);
// S^m(p-) as a K-module: highest weights sum a_i gamma_i over partitions a of m into <= r parts.
TypeMultiset schmid(int m, const Cascade& c, const HermitianPair& h);

// Character of S^m from the character of V, via Newton's identity; entries 0..m.
std::vector<Character> sym_power_characters(const Character& v, int m);
long double binomial(long long n, long long k);
// S^m(u_-1) as an l-module. Throws GuardExceeded when dim S^m > guard.
TypeMultiset sym_power_u1(int m, const BdsDatum& d, std::size_t guard = kDefaultGuard);

struct RelativeInvariantHit {
  int m = 0;
  Weight weight;
  long long multiplicity = 0;
};

struct RelativeInvariantScan {
  std::vector<RelativeInvariantHit> hits;
  int m_checked = 0;          // every m in 1..m_checked was decomposed
  bool guard_stopped = false;  // m_checked + 1 exceeded the guard
  int first_degree() const { return hits.empty() ? 0 : hits.front().m; }
};

// One-dimensional l-constituents of S^m(u_-1) for m = 1..m_max.
RelativeInvariantScan detect_relative_invariants(const BdsDatum& d, int m_max, std::size_t guard = kDefaultGuard);

}  // namespace lie
