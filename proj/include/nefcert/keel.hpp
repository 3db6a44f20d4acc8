#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nefcert/divisor_class.hpp"

namespace nefcert {

// The relation psi_i + psi_j - sum_{i in I, j in J} Delta_{I,J} ~ 0.
struct RelationVector {
  int i = 0;
  int j = 0;
  DivisorClass as_class;
};

RelationVector relation_vector(int i, int j, int n);

struct EquivalenceResult {
  bool equivalent = false;
  // When equivalent: coefficient on each relation (i, j), i < j, such that
  // A - B = sum w_{ij} * relation(i, j).
  std::vector<std::pair<std::pair<int, int>, Rat>> coefficients;
};

// Exact test of A ~ B via rational Gaussian elimination on the span of the
// C(n,2) Keel relations.
EquivalenceResult are_linearly_equivalent(const DivisorClass& a,
                                          const DivisorClass& b);

// Unique representative with boundary support only on partitions with both
// blocks of size >= 3. Requires n >= 5.
DivisorClass normal_form(const DivisorClass& a);

// Pure-boundary class sum_{I: i in I; j,k not in I} Delta_{I,J},
// linearly equivalent to psi_i.
DivisorClass psi_as_boundary(int i, int j, int k, int n);

}  // namespace nefcert
