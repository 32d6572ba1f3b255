#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lie/rational.hpp"

namespace lie {

inline constexpr int kMaxRank = 8;

// Coordinates in the simple-root basis of the ambient system.
// Inline storage: weights are created in large numbers by the character kernels.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank);
  Weight(std::initializer_list<Rational> coords);
  static Weight from_ints(const std::vector<long long>& coords);

  int rank() const { return n_; }
  Rational& operator[](int i) { return c_[i]; }
  const Rational& operator[](int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_integral() const;
  // Every coordinate >= 0 (resp. <= 0).
  bool nonnegative() const;
  bool nonpositive() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& r);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& r, Weight a) { return a *= r; }
  friend Weight operator*(Weight a, const Rational& r) { return a *= r; }
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b);
  // Lexicographic on coordinates; shorter rank sorts first.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  std::size_t hash() const;
  // "(1,2/3,0)"
  std::string str() const;
  std::vector<std::string> coord_strings() const;

 private:
  std::array<Rational, kMaxRank> c_{};
  int n_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace lie
