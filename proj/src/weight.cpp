#include "lie/weight.hpp"

#include <charconv>
#include <stdexcept>

namespace lie {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  return v;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  std::int64_t lo = 0, hi = 3037000499;  // floor(sqrt(2^63 - 1))
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (mid <= n / mid) lo = mid; else hi = mid - 1;
  }
  return lo;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  std::int64_t den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  return Rational(parse_int(s.substr(0, slash)), den);
}

bool exact_sqrt(const Rational& r, Rational& out) {
  if (r < 0) return false;
  std::int64_t a = isqrt(r.numerator()), b = isqrt(r.denominator());
  if (a * a != r.numerator() || b * b != r.denominator()) return false;
  out = Rational(a, b);
  return true;
}

Weight::Weight(int rank) : n_(rank) {
  if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("weight rank out of range");
}

Weight::Weight(std::initializer_list<Rational> coords) : Weight(static_cast<int>(coords.size())) {
  int i = 0;
  for (const auto& c : coords) c_[i++] = c;
}

Weight Weight::from_ints(const std::vector<long long>& coords) {
  Weight w(static_cast<int>(coords.size()));
  for (int i = 0; i < w.n_; ++i) w.c_[i] = Rational(coords[i]);
  return w;
}

bool Weight::is_zero() const {
  for (int i = 0; i < n_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Weight::is_integral() const {
  for (int i = 0; i < n_; ++i)
    if (c_[i].denominator() != 1) return false;
  return true;
}

bool Weight::nonnegative() const {
  for (int i = 0; i < n_; ++i)
    if (c_[i] < 0) return false;
  return true;
}

bool Weight::nonpositive() const {
  for (int i = 0; i < n_; ++i)
    if (c_[i] > 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.n_ != n_) throw std::invalid_argument("weight rank mismatch");
  for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.n_ != n_) throw std::invalid_argument("weight rank mismatch");
  for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& r) {
  for (int i = 0; i < n_; ++i) c_[i] *= r;
  return *this;
}

Weight Weight::operator-() const {
  Weight w(n_);
  for (int i = 0; i < n_; ++i) w.c_[i] = -c_[i];
  return w;
}

bool operator==(const Weight& a, const Weight& b) {
  if (a.n_ != b.n_) return false;
  for (int i = 0; i < a.n_; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (int i = 0; i < a.n_; ++i) {
    if (a.c_[i] < b.c_[i]) return std::strong_ordering::less;
    if (b.c_[i] < a.c_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Weight::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(n_);
  for (int i = 0; i < n_; ++i) {
    auto mix = static_cast<std::size_t>(c_[i].numerator()) * 0x100000001b3ULL +
               static_cast<std::size_t>(c_[i].denominator());
    h ^= mix + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Weight::str() const {
  std::string s = "(";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += to_string(c_[i]);
  }
  return s + ")";
}

std::vector<std::string> Weight::coord_strings() const {
  std::vector<std::string> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) out.push_back(to_string(c_[i]));
  return out;
}

}  // namespace lie
