#pragma once

#include <vector>

#include "nefcert/degree_problem.hpp"
#include "nefcert/weighting.hpp"

namespace nefcert {

// A permutation of {1, ..., n} regarded up to rotation; slot 0 is anchored
// at sequence[0] to keep constructions deterministic.
struct CyclicOrder {
  std::vector<int> sequence;

  static CyclicOrder identity(int n) {
    CyclicOrder s;
    s.sequence.resize(n);
    for (int i = 0; i < n; ++i) s.sequence[i] = i + 1;
    return s;
  }
};

// ms circle slots, slot t holding a marked-point index; the d_i occurrences
// of index i sit in cyclically contiguous slots.
struct CircleArrangement {
  std::vector<int> slots;
  long s = 0;  // (sum d_i) / m
};

// A pairwise-compatible family of proper partitions (dual graph of a
// stable curve; empty family = interior point).
struct StableTree {
  int n = 0;
  std::vector<ProperPartition> nodes;
};

CircleArrangement build_circle(const DegreeProblem& problem,
                               const CyclicOrder& sigma);

// The chord weighting of the circle arrangement pushed down to the complete
// graph on [n]: +1 per chord joining distinct indices, -m per chord inside
// one of the m residue classes of slots.
Weighting standard_weighting(const DegreeProblem& problem,
                             const CyclicOrder& sigma);

// Occupancy counts of the block across the m slot classes take only the two
// values q, q+1 (with d(I) = mq + r, multiplicities m-r and r)?
bool is_balanced(const ProperPartition& p, const DegreeProblem& problem,
                 const CyclicOrder& sigma);

// A cyclic order in which one block of every tree partition is contiguous.
CyclicOrder sigma_for_stable_tree(const StableTree& tree, int n);

// A cyclic order with respect to which p is NOT balanced, so the standard
// weighting's flow across p jumps to at least 2m + <d(I)><d(J)>.
CyclicOrder sigma_unbalancing(const ProperPartition& p,
                              const DegreeProblem& problem);

}  // namespace nefcert
