#pragma once

#include <string>
#include <vector>

#include "lie/bds.hpp"

namespace lie {

// Resolves "C3:2" (Bourbaki index), real-form labels such as "so(4,5)", "sp(2,2)", "e7;A1,D6,2",
// and the alias "g2-split". Throws std::invalid_argument for an unknown or invalid case.
BdsDatum resolve_case(const std::string& name);

// Every Borel-de Siebenthal datum with rank <= rank_max, in (type, rank, nu) order.
std::vector<BdsDatum> all_data(int rank_max);

// Every irreducible compact Hermitian pair (simple K, cominuscule node) with rank <= rank_max.
std::vector<HermitianPair> all_hermitian_pairs(int rank_max);

}  // namespace lie
