#include "lie/cases.hpp"

#include <cstdio>
#include <stdexcept>

namespace lie {

namespace {

constexpr const char* kTypes = "ABCDEFG";

BdsDatum datum_at(char type, int rank, int nu1) {
  if (!RootSystem::valid_pair(type, rank))
    throw std::invalid_argument(std::string(1, type) + std::to_string(rank) + " is not a root system");
  RootSystem g = RootSystem::build(type, rank);
  if (nu1 < 1 || nu1 > rank) throw std::invalid_argument("node " + std::to_string(nu1) + " out of range");
  if (g.highest_root()[nu1 - 1] != 2)
    throw std::invalid_argument(g.label() + ":" + std::to_string(nu1) + " is not a Borel-de Siebenthal order");
  return build_datum(g, nu1 - 1);
}

}  // namespace

BdsDatum resolve_case(const std::string& name) {
  char type = 0;
  int rank = 0, nu1 = 0, a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(name.c_str(), "%c%d:%d%c", &type, &rank, &nu1, &tail) == 3) return datum_at(type, rank, nu1);
  if (name == "g2-split") return datum_at('G', 2, 2);
  if (std::sscanf(name.c_str(), "so(%d,%d)%c", &a, &b, &tail) == 2) {
    if (a % 2 != 0) std::swap(a, b);
    if (a % 2 != 0 || a < 4 || b < 1) throw std::invalid_argument("so(" + name.substr(3) + " has no datum here");
    const int p = a / 2;
    return b % 2 == 1 ? datum_at('B', p + (b - 1) / 2, p) : datum_at('D', p + b / 2, p);
  }
  if (std::sscanf(name.c_str(), "sp(%d,%d)%c", &a, &b, &tail) == 2) {
    if (a < 1 || b < 1) throw std::invalid_argument("sp(p,q) needs p, q >= 1");
    return datum_at('C', a + b, a);
  }
  for (char t : {'E', 'F', 'G'})
    for (int n = 2; n <= 8; ++n) {
      if (!RootSystem::valid_pair(t, n)) continue;
      for (int k = 1; k <= n; ++k) {
        auto row = golden_row(t, n, k);
        if (row && row->g0_label == name) return datum_at(t, n, k);
      }
    }
  throw std::invalid_argument("unknown case '" + name + "'");
}

std::vector<BdsDatum> all_data(int rank_max) {
  std::vector<BdsDatum> out;
  for (const char* t = kTypes; *t; ++t)
    for (int n = 1; n <= rank_max; ++n) {
      if (!RootSystem::valid_pair(*t, n)) continue;
      RootSystem g = RootSystem::build(*t, n);
      for (int nu : enumerate_bds_orders(g)) out.push_back(build_datum(g, nu));
    }
  return out;
}

std::vector<HermitianPair> all_hermitian_pairs(int rank_max) {
  std::vector<HermitianPair> out;
  for (const char* t = kTypes; *t; ++t)
    for (int n = 1; n <= rank_max; ++n) {
      if (!RootSystem::valid_pair(*t, n)) continue;
      RootSystem g = RootSystem::build(*t, n);
      for (int i = 0; i < n; ++i)
        if (g.highest_root()[i] == 1) out.push_back(hermitian_symmetric(*t, n, i));
    }
  return out;
}

}  // namespace lie
