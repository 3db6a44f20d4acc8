#pragma once

#include <vector>

#include "nefcert/degree_problem.hpp"
#include "nefcert/weighting.hpp"

namespace nefcert {

// Verification data for properties (P1)-(P3): vertex flows exactly
// d_i(m - d_i); partition flows at least <d(I)><d(J)>; m-partition flows
// at least m. Empty lists mean the weighting satisfies all three.
struct PropertyReport {
  struct VertexViolation {
    int vertex;
    Rat expected;
    Rat actual;
  };
  struct PartitionViolation {
    Mask block;
    Rat bound;
    Rat actual;
  };
  std::vector<VertexViolation> p1_violations;
  std::vector<PartitionViolation> p2_violations;
  std::vector<PartitionViolation> p3_violations;

  bool clean() const {
    return p1_violations.empty() && p2_violations.empty() &&
           p3_violations.empty();
  }
};

// All proper partitions with m | d(I), in enumeration order. Requires a
// reduced problem.
std::vector<ProperPartition> m_partitions(const DegreeProblem& problem);

// Copies w1 on edges inside the split's block, w2 inside the complement,
// zero on crossing edges. Both inputs are ambient-n weightings supported
// inside their respective blocks.
Weighting glue_weighting(const Weighting& w1, const Weighting& w2,
                         const ProperPartition& split);

// One glued weighting produced while recursing; `active` is the vertex set
// of the sub-problem, `side` the split side containing its lowest vertex.
struct GlueEvent {
  Mask active;
  Mask side;
  Weighting glued;
};

// A rational weighting satisfying (P1)-(P3), built by recursion on the
// total degree with averaging over glued sub-certificates. The optional
// trace records every glue performed.
Weighting inductive_weighting(const DegreeProblem& problem,
                              std::vector<GlueEvent>* trace = nullptr);

PropertyReport verify_P123(const Weighting& w, const DegreeProblem& problem);

}  // namespace nefcert
