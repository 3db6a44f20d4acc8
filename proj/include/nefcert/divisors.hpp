#pragma once

#include <vector>

#include "nefcert/degree_problem.hpp"
#include "nefcert/divisor_class.hpp"

namespace nefcert {

enum class DivisorFamily { D, E };

struct DivisorFamilyTag {
  DivisorFamily family = DivisorFamily::D;
  DegreeProblem problem;
};

// a_i = <d_i><m - d_i>,  b_{I,J} = <d(I)><d(J)>  (all brackets mod m).
DivisorClass divisor_D(const DegreeProblem& problem);

// divisor_D plus m * (sum_{m | d_i} psi_i - sum_{m | d(I)} Delta_{I,J}).
// Needs m >= 3.
DivisorClass divisor_E(const DegreeProblem& problem);

// (1 / 2m^2) * divisor_D((<j d_1>, ..., <j d_n>), m); the determinant of
// the j-th Hodge eigenbundle. j = 0 gives the zero class.
DivisorClass hodge_eigenbundle_det(const DegreeProblem& problem, long j);

struct ReducedProblem {
  DegreeProblem problem;     // degrees in [1, m-1] on the kept indices
  std::vector<int> dropped;  // original indices with <d_i> = 0
  std::vector<int> kept;     // original index of each reduced vertex
};

// Replace each d_i by <d_i> mod m, dropping indices that reduce to 0 (for
// family D the class is the pullback along the forgetful map dropping
// them; for family E the identity E = pullback + m*psi_i per dropped index
// holds). Throws DomainTooSmall when fewer than 4 indices survive;
// class construction does not depend on this reduction.
ReducedProblem reduce_degrees(const DegreeProblem& problem);

}  // namespace nefcert
