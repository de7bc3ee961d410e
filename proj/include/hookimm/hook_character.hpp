#pragma once

#include <gmpxx.h>

#include <vector>

#include "hookimm/permutation.hpp"

namespace hookimm {

// chi_{(k,1^{n-k})} evaluated on the conjugacy class ct of S_n. The parts of
// ct must sum to n. Out-of-range k (k < 1 or k > n) gives 0 for n >= 1; the
// n = 0 group has a single (empty) shape whose character is 1, labeled k = 0.
// Memoized internally; safe to call from multiple threads.
mpz_class hook_character(int n, int k, const CycleType& ct);

// All partitions of n in ascending lexicographic order, e.g. for n = 3:
// [1,1,1], [2,1], [3]. partitions_of(0) = { [] }.
std::vector<std::vector<int>> partitions_of(int n);

mpz_class binomial(int n, int k);  // 0 outside 0 <= k <= n

}  // namespace hookimm
