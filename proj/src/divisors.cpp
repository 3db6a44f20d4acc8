#include "nefcert/divisors.hpp"

#include "nefcert/errors.hpp"

namespace nefcert {

DivisorClass divisor_D(const DegreeProblem& problem) {
  if (problem.n < 4) throw DomainTooSmall("divisor classes need n >= 4");
  const long m = problem.m;
  DivisorClass out(problem.n);
  for (int v = 1; v <= problem.n; ++v) {
    long d = mod_rep(problem.degree(v), m);
    out.set_psi(v, Rat(d * mod_rep(m - d, m)));
  }
  for (const auto& p : enumerate_proper_partitions(problem.n)) {
    long r = mod_rep(problem.block_degree(p.block), m);
    if (r != 0) out.set_boundary(p, Rat(r * (m - r)));
  }
  return out;
}

DivisorClass divisor_E(const DegreeProblem& problem) {
  if (problem.m < 3) throw ModulusTooSmall("family E needs m >= 3");
  const long m = problem.m;
  DivisorClass out = divisor_D(problem);
  for (int v = 1; v <= problem.n; ++v)
    if (problem.degree(v) % m == 0) out.add_psi(v, Rat(m));
  for (const auto& p : enumerate_proper_partitions(problem.n))
    if (problem.block_degree(p.block) % m == 0) out.add_boundary(p, Rat(m));
  return out;
}

DivisorClass hodge_eigenbundle_det(const DegreeProblem& problem, long j) {
  const long m = problem.m;
  std::vector<int> twisted(problem.degrees.size());
  for (size_t i = 0; i < twisted.size(); ++i)
    twisted[i] = static_cast<int>(mod_rep(j * problem.degrees[i], m));
  if (mod_rep(j, m) == 0) return DivisorClass(problem.n);
  DivisorClass base = divisor_D(DegreeProblem(twisted, problem.m));
  return combine(base, DivisorClass(problem.n), Rat(1, 2 * m * m), Rat(0));
}

ReducedProblem reduce_degrees(const DegreeProblem& problem) {
  ReducedProblem out;
  std::vector<int> reduced;
  for (size_t i = 0; i < problem.degrees.size(); ++i) {
    int r = static_cast<int>(mod_rep(problem.degrees[i], problem.m));
    if (r == 0) {
      out.dropped.push_back(static_cast<int>(i) + 1);
    } else {
      out.kept.push_back(static_cast<int>(i) + 1);
      reduced.push_back(r);
    }
  }
  if (reduced.size() < 4)
    throw DomainTooSmall("fewer than 4 marked points survive reduction");
  out.problem = DegreeProblem(reduced, problem.m);
  return out;
}

}  // namespace nefcert
