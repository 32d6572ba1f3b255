#pragma once

#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lie/decomp.hpp"
#include "lie/kernels.hpp"

namespace lie {

// Piecewise-linear path from 0, stored as its displacement vectors. Adjacent positively collinear
// displacements are merged and zero displacements dropped, so equality ignores parametrization.
class LSPath {
 public:
  LSPath() = default;
  explicit LSPath(std::vector<Weight> increments);
  // t -> t * lambda
  static LSPath straight(const Weight& lambda) { return LSPath({lambda}); }

  const std::vector<Weight>& increments() const { return inc_; }
  Weight endpoint() const;
  // Breakpoints after each increment (the last one is the endpoint).
  std::vector<Weight> vertices() const;
  // Values of <pi(t), alpha^vee> at 0 and at every breakpoint.
  std::vector<Rational> heights(const Subsystem& a, int alpha) const;
  Rational min_height(const Subsystem& a, int alpha) const;
  // (direction, length) pairs with total length 1: Euclidean parametrization when exact, else L1.
  std::vector<std::pair<Weight, Rational>> segments(const Pairing& form) const;

  std::size_t hash() const;
  friend bool operator==(const LSPath& a, const LSPath& b) { return a.inc_ == b.inc_; }

 private:
  std::vector<Weight> inc_;
  int rank_ = 0;
};

struct LSPathHash {
  std::size_t operator()(const LSPath& p) const { return p.hash(); }
};

std::optional<LSPath> f_op(const LSPath& path, const Subsystem& a, int alpha);
std::optional<LSPath> e_op(const LSPath& path, const Subsystem& a, int alpha);
LSPath concat(const LSPath& p1, const LSPath& p2);
// f_alpha(p1 * p2) by the tensor rule on the two factors; throws std::logic_error if it differs
// from f_op applied to the concatenation.
std::optional<LSPath> f_on_concat(const LSPath& p1, const LSPath& p2, const Subsystem& a, int alpha);
// Monomial (alpha, exponent), applied first to last, with f^n(pi_lambda) = pi_{w lambda}.
std::vector<std::pair<int, int>> straight_line_monomial(const Weight& lambda, const Weight& w_lambda,
                                                        const Subsystem& a);
std::optional<LSPath> apply_monomial(LSPath p, const std::vector<std::pair<int, int>>& mono, const Subsystem& a);

struct PathModel {
  Weight shape;
  std::vector<LSPath> paths;  // generation order: pi_shape first
};

// Closure of pi_shape under all f_alpha. Throws std::invalid_argument for a non-dominant shape and
// GuardExceeded when dim V(shape) > guard.
PathModel path_model(const Weight& shape, const Subsystem& a, std::size_t guard = kDefaultGuard,
                     kernels::Exec exec = kernels::Exec::parallel);
bool is_dominant_path(const LSPath& p, const Subsystem& a, const std::vector<int>& subset);
TypeMultiset branch_to_levi(const Weight& shape, const Subsystem& a, const std::vector<int>& levi,
                            AlgebraTag tag, std::size_t guard = kDefaultGuard);
TypeMultiset branch_to_levi(const PathModel& model, const Subsystem& a, const std::vector<int>& levi,
                            AlgebraTag tag);

// a contains b (entrywise multiplicities).
bool contains(const TypeMultiset& a, const TypeMultiset& b);
TypeMultiset shifted(const TypeMultiset& t, const Weight& by);

// Res_l V(m eps*) contains Res_l V((m-p) eps*) shifted by +p eps* (up) and, for tube type, by -p eps* (down).
struct ShiftContainment {
  bool up = false;
  bool down = false;
  bool down_applies = false;
};
ShiftContainment shift_containments(int m, int p, const BdsDatum& d);
ShiftContainment shift_containments(int m, int p, const HermitianPair& h);

struct DominantPath {
  LSPath tau;
  Weight endpoint;
  std::vector<Weight> breakpoints;  // as listed by the construction, terminal point last
};
// p_list = (p0, p1, ..., pr). Throws std::invalid_argument for an invalid list and std::logic_error
// if any step of the construction fails.
DominantPath dominant_path(int m, const std::vector<int>& p_list, const Cascade& c, const HermitianPair& h,
                           bool check_model = true);
// All (p0, ..., pr) with 0 <= pr <= ... <= p1 <= p0 <= m.
std::vector<std::vector<int>> dominant_p_lists(int m, int r);

// Returns phi + w_Y(tau_weight) after checking it occurs in Res_l V(w_Y(phi) + m eps*).
Weight transport_type(const Weight& phi, int m, const Weight& tau_weight, const HermitianPair& h);
// Same, with Res_l V(m eps*) and Res_l V(w_Y(phi) + m eps*) supplied by the caller.
Weight transport_type(const Weight& phi, int m, const Weight& tau_weight, const HermitianPair& h,
                      const TypeMultiset& base, const TypeMultiset& target);

}  // namespace lie
