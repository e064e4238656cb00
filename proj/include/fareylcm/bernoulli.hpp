#pragma once

#include <gmpxx.h>

namespace fareylcm::hpreal {

// B_{2j} as an exact rational, j >= 1 (B_2 = 1/6, B_4 = -1/30, ...).
// Computed through the tangent-number triangle (integer-only recurrence)
// and B_{2j} = (-1)^(j-1) * T_j * 2j / (2^(2j) * (2^(2j) - 1)).
// Memoized; safe to call from concurrent threads.
mpq_class bernoulli_2j(int j);

}  // namespace fareylcm::hpreal
