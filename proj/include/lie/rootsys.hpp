#pragma once

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lie/weight.hpp"

namespace lie {

// Simple reflections applied right to left: act({i, j}, w) = s_i(s_j(w)).
struct WeylWord {
  std::vector<int> word;

  std::size_t length() const { return word.size(); }
  bool empty() const { return word.empty(); }
  WeylWord inverse() const { return {std::vector<int>(word.rbegin(), word.rend())}; }
  // (u * v) acts as u after v.
  friend WeylWord operator*(const WeylWord& u, const WeylWord& v);
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

// Symmetric bilinear form on the ambient simple-root coordinates.
class Pairing {
 public:
  Pairing() = default;
  explicit Pairing(const std::vector<std::vector<Rational>>& gram);

  int dim() const { return n_; }
  const Rational& gram(int i, int j) const { return g_[i][j]; }
  Rational operator()(const Weight& a, const Weight& b) const;
  Pairing scaled(const Rational& f) const;

 private:
  std::array<std::array<Rational, kMaxRank>, kMaxRank> g_{};
  int n_ = 0;
};

// Rational linear algebra helpers. solve() throws std::domain_error when singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

// A root system spanned by a list of linearly independent roots of the ambient space.
// Used for g itself, for k (simple roots Psi \ {nu} plus eps) and for Levi factors.
// The ambient space may be larger than the span; the complement is the center.
class Subsystem {
 public:
  Subsystem() = default;
  Subsystem(Pairing form, std::vector<Weight> simple);

  const Pairing& form() const { return form_; }
  int ambient_rank() const { return form_.dim(); }
  int size() const { return static_cast<int>(simple_.size()); }
  const Weight& simple(int i) const { return simple_[i]; }
  const std::vector<Weight>& simples() const { return simple_; }
  const std::vector<Weight>& positive_roots() const { return pos_; }
  std::vector<Weight> roots() const;
  const Weight& rho() const { return rho_; }
  Weight zero() const { return Weight(ambient_rank()); }

  Rational pair(const Weight& a, const Weight& b) const { return form_(a, b); }
  Rational norm2(const Weight& a) const { return form_(a, a); }
  // <w, alpha_i^vee> = 2<w, alpha_i>/<alpha_i, alpha_i>
  Rational coroot(const Weight& w, int i) const;
  Rational coroot(const Weight& w, const Weight& alpha) const;
  Weight reflect(int i, const Weight& w) const;
  Weight reflect_by(const Weight& alpha, const Weight& w) const;
  Weight act(const WeylWord& u, const Weight& w) const;

  WeylWord longest_element(const std::vector<int>& subset) const;
  WeylWord longest_element() const { return longest_element(all_indices()); }
  std::pair<Weight, WeylWord> to_dominant(const Weight& w, const std::vector<int>& subset) const;
  std::pair<Weight, WeylWord> to_dominant(const Weight& w) const {
    return to_dominant(w, all_indices());
  }
  // Dominant representative only; *parity receives the length of the reducing word mod 2.
  Weight dominant_rep(Weight w, int* parity = nullptr) const;
  bool same_element(const WeylWord& u, const WeylWord& v) const;

  bool is_dominant(const Weight& w) const;
  bool is_integral(const Weight& w) const;
  std::vector<Rational> dynkin_labels(const Weight& w) const;
  // Coordinates of w in the basis simple(0..size-1); throws if w is not in their span.
  std::vector<Rational> coordinates(const Weight& w) const;
  bool in_span(const Weight& w) const;
  // Sum of simple-root coordinates for w in the span; linear, positive on positive roots.
  Rational height(const Weight& w) const { return form_(w, height_vec_); }
  bool is_root(const Weight& w) const { return roots_.count(w) > 0; }
  bool is_positive_root(const Weight& w) const;

  Subsystem sub(const std::vector<int>& subset) const;
  std::vector<int> all_indices() const;
  // Connected components of the Dynkin diagram, each sorted.
  std::vector<std::vector<int>> components() const;
  // Cartan type of a connected index set, e.g. "A3", "B2", "E7".
  std::string component_type(const std::vector<int>& comp) const;
  std::size_t weyl_group_order() const;

 private:
  Pairing form_;
  std::vector<Weight> simple_;
  std::vector<std::array<Rational, kMaxRank>> corow_;  // w -> <w, alpha_i^vee> as a covector
  std::vector<Weight> pos_;
  std::unordered_set<Weight, WeightHash> roots_;
  Weight rho_;
  Weight height_vec_;
};

// Simple Lie algebra root system with Bourbaki labeling (indices 0-based here, psi_{i+1}).
class RootSystem {
 public:
  RootSystem() = default;
  // Valid pairs: A l>=1, B l>=2, C l>=2, D l>=4, E 6..8, F 4, G 2. Throws std::invalid_argument.
  static RootSystem build(char type, int rank);
  static bool valid_pair(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const Rational& bilinear_scale() const { return scale_; }
  RootSystem rescaled(const Rational& factor) const;

  const Subsystem& full() const { return full_; }
  const Pairing& form() const { return full_.form(); }
  const std::vector<Weight>& all_roots() const { return all_; }
  const std::vector<Weight>& positive_roots() const { return full_.positive_roots(); }
  Weight simple_root(int i) const { return full_.simple(i); }
  Weight zero() const { return Weight(rank_); }

  Rational pair(const Weight& a, const Weight& b) const;
  Weight act(const WeylWord& u, const Weight& w) const { return full_.act(u, w); }
  WeylWord longest_element(const std::vector<int>& subset) const {
    return full_.longest_element(subset);
  }
  std::pair<Weight, WeylWord> to_dominant(const Weight& w, const std::vector<int>& subset) const {
    return full_.to_dominant(w, subset);
  }

  Weight highest_root() const { return highest_; }
  Weight rho() const { return full_.rho(); }
  Weight fundamental_weight(int i) const;
  std::vector<Rational> to_fundamental(const Weight& w) const { return full_.dynkin_labels(w); }
  Weight from_fundamental(const std::vector<Rational>& labels) const;

 private:
  char type_ = 0;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  Rational scale_{1};
  Subsystem full_;
  std::vector<Weight> all_;
  Weight highest_;
  std::vector<Weight> fund_;
};

}  // namespace lie
