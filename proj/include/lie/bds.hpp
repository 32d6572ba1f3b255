#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lie/rootsys.hpp"

namespace lie {

// A compact Hermitian pair (k, l): k given by simple roots, one of which (eps) is
// the non-compact simple root of the dual; l is the Levi obtained by deleting eps.
struct HermitianPair {
  std::string name;
  Subsystem k;
  int eps_index = 0;                // index into k.simples()
  std::vector<int> l_indices;       // k indices other than eps_index
  Subsystem l;
  Weight epsilon, eps_star, mu;     // mu is the highest root of Delta_2
  std::vector<Weight> delta2, delta_m2, delta0_pos;
  WeylWord w_k0, w_l0;              // words over k indices
  long c = 0;                       // sum(Delta_2) = c * eps_star
  bool tube = false;                // w_k0(eps) == -eps

  const Pairing& form() const { return k.form(); }
  Weight w_Y(const Weight& x) const { return k.act(w_k0, k.act(w_l0, x)); }
  WeylWord w_Y_word() const { return w_k0 * w_l0; }
  // k-coordinate of eps (1 on Delta_2, -1 on Delta_-2, 0 on Delta_0).
  Rational eps_coefficient(const Weight& root) const;
};

// k, with simple roots k_simple in the ambient space of `form`; eps_index must be a node whose
// coefficient in the highest root of its component is 1.
HermitianPair make_hermitian_pair(std::string name, const Pairing& form, std::vector<Weight> k_simple,
                                  int eps_index);
// Compact irreducible Hermitian symmetric pair from a simple K and a cominuscule node (0-based).
HermitianPair hermitian_symmetric(char type, int rank, int node);

struct BdsDatum {
  RootSystem g;                      // rescaled so that <nu,nu> = 2
  int nu = 0;                        // 0-based index (psi_{nu+1})
  Rational scale{1};
  std::array<std::vector<Weight>, 5> delta;  // delta[i + 2] = Delta_i
  Weight epsilon, mu, nu_star, eps_star, rho_g, rho_k;
  long c = 0;
  int s = 0;                         // |Delta_2|
  std::vector<int> k1_simple_subset; // indices into Psi_k (component of eps)
  std::vector<int> l_simple_subset;  // Psi \ {nu}
  HermitianPair herm;

  const std::vector<Weight>& Delta(int i) const { return delta.at(i + 2); }
  const Subsystem& k() const { return herm.k; }
  const Subsystem& l() const { return herm.l; }
  Weight w_Y(const Weight& x) const { return herm.w_Y(x); }
  bool quaternionic() const { return s == 1; }
  // "C3:2" (Bourbaki index, 1-based)
  std::string key() const;
  // Highest root of Delta_1, equal to w_l0(nu).
  Weight delta1_highest() const;
};

// 0-based indices of simple roots with coefficient exactly 2 in the highest root.
std::vector<int> enumerate_bds_orders(const RootSystem& g);
// Throws std::invalid_argument when the nu-coefficient of the highest root is not 2.
BdsDatum build_datum(const RootSystem& g, int nu);

bool spin_structure(const HermitianPair& h);
bool spin_structure(const BdsDatum& d);
bool tube_type(const BdsDatum& d);

struct ClassificationRow {
  std::string family;    // table row, e.g. "so(2p,2l-2p+1)"
  std::string g0_label;  // instantiated, e.g. "so(6,3)"
  char type = 0;
  int rank = 0;
  int nu = 0;            // Bourbaki index, 1-based
  std::string k1_label, l1_label, l2_label, Y_label, X_label;
  int invariant_degree = 0;  // 0: the algebra is C
  bool quaternionic = false;
  bool tube_type = false;

  std::string algebra_text() const;
  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

// Golden rows keyed by (type, rank, nu 1-based); nullopt outside the tables.
std::optional<ClassificationRow> golden_row(char type, int rank, int nu1);
// nu 1-based after the diagram symmetry -w0 (E6: psi_5 -> psi_3).
int canonical_nu(const RootSystem& g, int nu0);
// Structural disagreements between the computed datum and its golden row; empty when consistent.
std::vector<std::string> classification_mismatches(const BdsDatum& d, const ClassificationRow& row);
// Golden row after structural verification; throws std::logic_error on disagreement.
ClassificationRow classify(const BdsDatum& d);
// Independent reading of which real forms have a trivial invariant algebra.
bool trivial_algebra_by_list(const std::string& g0_label);
// Dynkin types named by a compact label such as "sp(1)+so(5)", sorted; B2 and C2 both map to "B2".
std::vector<std::string> label_dynkin_types(const std::string& label);

struct NegativityCheck {
  bool holds = false;
  bool cond_mu = false;   // t < -1/2 <gamma0 + rho_g, mu>
  bool cond_nu = false;   // t < -<gamma0 + rho_g, w_l0(nu)>
  Rational bound_mu, bound_nu;
  std::string violated;   // text of the first violated inequality
};

// Negativity condition on gamma = gamma0 + t nu*. Throws std::invalid_argument when gamma0 is not l-dominant or not orthogonal to nu*.
NegativityCheck check_negativity(const BdsDatum& d, const Weight& gamma0, const Rational& t);
bool sufficiently_negative(const BdsDatum& d, const Weight& gamma0, const Rational& t);
// Quaternionic form: t < -(d/4)(|Delta_1|+2) and t < -<gamma0, w_l0 nu> - 1/2 sum a_i |psi_i|^2.
bool sufficiently_negative_quaternionic(const BdsDatum& d, const Weight& gamma0, const Rational& t);

// mu = d nu* with d in {1, 2}; throws for non-quaternionic data.
int quaternionic_d(const BdsDatum& d);

}  // namespace lie
