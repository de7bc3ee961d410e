#pragma once

#include <vector>

#include "hookimm/matrix.hpp"
#include "hookimm/poly.hpp"

namespace hookimm {

inline constexpr int kMaxOracleOrder = 10;     // n! * n^2 rational ops beyond this
inline constexpr int kMaxPermanentOrder = 12;  // 2^n * n

// Hook immanant d_k by direct summation over all permutations. Returns 0 for
// k < 1 or k > order (order >= 1); the 0x0 matrix has d_0 = 1 and 0 otherwise.
Rational immanant_bruteforce(const RationalMatrix& m, int k);

// The polynomial d_k(x*I - m), same summation.
Poly hook_poly_bruteforce(const RationalMatrix& m, int k);

// One permutation sweep for every k at once. Index k holds the hook-k value;
// slot 0 stays zero for order >= 1 and holds the k = 0 value for order 0.
std::vector<Rational> immanants_bruteforce_all(const RationalMatrix& m);
std::vector<Poly> hook_polys_bruteforce_all(const RationalMatrix& m);

// Fraction-free (Bareiss) elimination; no permutation sum involved.
Rational determinant(const RationalMatrix& m);

// Ryser inclusion-exclusion with Gray-code row sums; order <= 12.
Rational permanent(const RationalMatrix& m);

}  // namespace hookimm
