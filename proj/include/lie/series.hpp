#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie/decomp.hpp"
#include "lie/lspath.hpp"

namespace lie {

// Raised when the inputs fall outside the regime where the series are defined.
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// gamma = gamma0 + t nu*, gamma0 l-dominant and orthogonal to nu*.
struct SeriesParams {
  BdsDatum datum;
  Weight gamma0;
  Rational t;
  int m_max = 12;
  int r_max = 12;
  std::size_t guard = kDefaultGuard;

  Weight gamma() const { return gamma0 + t * datum.nu_star; }
};

// Validates integrality, l-dominance and the negativity condition; throws HypothesisViolation with the
// violated inequality.
SeriesParams make_series_params(const BdsDatum& d, const Weight& gamma0, const Rational& t, int m_max = 12,
                                int r_max = 12, std::size_t guard = kDefaultGuard);
// gamma0 from Dynkin labels on Psi \ {nu} (in index order), projected orthogonally to nu*.
Weight gamma0_from_labels(const BdsDatum& d, const std::vector<Rational>& labels);
// Largest t <= (the negativity bound) - margin, on a 1/12 grid, with gamma integral for k.
Rational most_negative_bound(const BdsDatum& d, const Weight& gamma0, int margin = 0);

struct QuaternionicDatum {
  int d = 0;       // mu = d nu*
  Weight mu_star;  // mu / 2
};
QuaternionicDatum quaternionic_datum(const BdsDatum& d);

// w_Y(kappa + rho_k) - rho_k; throws HypothesisViolation unless <kappa + rho_k, beta> < 0 on Delta_2.
Weight bwb_highest_weight(const Weight& kappa, const BdsDatum& d);

// K-types of the Borel-de Siebenthal series from the layers m = 0..m_max.
TypeMultiset bds_k_types(const SeriesParams& p);
// Same truncation through the sl2 x l' factorization of the quaternionic case.
TypeMultiset quaternionic_k_types(const SeriesParams& p, const QuaternionicDatum& qd);
// l-types of the holomorphic series of K* from S^r(u_-2), r = 0..r_max.
TypeMultiset holo_l_types(const SeriesParams& p);
// Quaternionic closed form: gamma0 + (2t/d - 2r) mu*, r = 0..r_max.
TypeMultiset quaternionic_holo_l_types(const SeriesParams& p, const QuaternionicDatum& qd);

struct CommonType {
  Weight weight;
  long long mult_bds = 0;   // at the full truncation
  long long mult_holo = 0;
  bool growth = false;      // strictly increasing over the three windows
  std::vector<int> windows;  // m (quaternionic) or j (tube) cutoffs
  std::vector<long long> window_mults;
  std::vector<int> certified_j;  // tube pipeline only
  std::vector<int> a;            // tube pipeline only: partition a_1 >= ... >= a_r
};

struct CommonReport {
  std::string pipeline;              // "quaternionic" or "tube"
  std::vector<CommonType> types;     // sorted by weight
  int m_max = 0, r_max = 0, j_max = 0;
  bool tube = false;
  int invariant_degree = 0;          // 0: none found within the scan
  Rational q;                        // weight of the relative invariant in units of eps*
  std::vector<std::string> notes;
};

// Growth windows for a truncation bound n: ceil(n/2), ceil(3n/4), n.
std::vector<int> growth_windows(int n);

// L-type gamma0 + (2t/d - 2r) mu* lies in layer m iff gamma0 occurs in
// E_gamma0 (x) S^m(E_{mu*-nu}) and (2t/d - 2r) mu* is a weight of U_{m-2t/d-2}.
CommonReport common_l_types_quaternionic(const SeriesParams& p, const QuaternionicDatum& qd);

struct TubeBounds {
  int a1_max = 3;        // partitions with a_1 <= a1_max and |a| <= r_max
  int j_extra = 4;       // j ranges over N' in [j0, j0 + j_extra]
  int j_max = -1;        // when >= 0, overrides j0 + j_extra
  int invariant_scan = 8;  // degrees searched for a relative invariant
};
CommonReport common_l_types_tube(const SeriesParams& p, const TubeBounds& b = {});

struct AdmissibilityEvidence {
  Weight isotype;                    // the gamma0-isotype watched across windows
  std::vector<int> windows;
  std::vector<long long> multiplicities;
  bool growth = false;               // EVIDENCE of non-admissibility
  bool stabilized = false;           // EVIDENCE of admissibility
  std::string label = "evidence only";
};
// Multiplicity of the L0' type gamma0 in the truncated BdS series (layers m <= window) on the
// side `side` ("bds" or "holo").
AdmissibilityEvidence admissibility_evidence(const SeriesParams& p, const std::string& side = "bds");

}  // namespace lie
