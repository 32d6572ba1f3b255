#pragma once

#include "lie/decomp.hpp"

// Hot loops with an OpenMP version and a serial reference; both must agree exactly.
namespace lie::kernels {

enum class Exec { serial, parallel };

// Freudenthal recursion restricted to dominant weights, processed level by level.
Character dominant_multiplicities(const Weight& lambda, const Subsystem& a, Exec exec = Exec::parallel);
// Product of characters.
Character convolve(const Character& x, const Character& y, Exec exec = Exec::parallel);

int max_threads();

}  // namespace lie::kernels
