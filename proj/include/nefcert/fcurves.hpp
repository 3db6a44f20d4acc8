#pragma once

#include <array>
#include <vector>

#include "nefcert/divisor_class.hpp"

namespace nefcert {

// A partition of [n] into four nonempty blocks, ordered by smallest
// element (so parts[0] contains vertex 1).
struct FCurve {
  std::array<Mask, 4> parts{};
  int n = 0;
};

// All set partitions of [n] into exactly four nonempty blocks (S(n,4) of
// them), in restricted-growth order.
std::vector<FCurve> enumerate_fcurves(int n);

// Intersection degree of the class with the F-curve: singleton parts pick
// up psi coefficients; the three pairings of blocks and the blocks of size
// >= 2 contribute boundary coefficients.
Rat fcurve_degree(const DivisorClass& a, const FCurve& f);

// Minimum degree over all F-curves with its first-attaining witness.
std::pair<Rat, FCurve> min_fcurve_degree(const DivisorClass& a);

}  // namespace nefcert
