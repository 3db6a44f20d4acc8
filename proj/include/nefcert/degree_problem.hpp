#pragma once

#include <numeric>
#include <vector>

#include "nefcert/errors.hpp"
#include "nefcert/partition.hpp"

namespace nefcert {

// Representative of a residue in {0, ..., m-1}.
inline long mod_rep(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// Marked-point degrees (d_1, ..., d_n) with a modulus m dividing their sum.
struct DegreeProblem {
  int n = 0;
  std::vector<int> degrees;  // index 0 holds d_1
  int m = 0;

  DegreeProblem() = default;
  DegreeProblem(std::vector<int> d, int modulus)
      : n(static_cast<int>(d.size())), degrees(std::move(d)), m(modulus) {
    if (m < 2) throw ModulusTooSmall("modulus must be >= 2");
    // Sub-problems in the inductive construction may have as few as 2
    // vertices; surfaces that need proper partitions enforce n >= 4.
    if (n < 2) throw DomainTooSmall("need n >= 2 marked points");
    long sum = std::accumulate(degrees.begin(), degrees.end(), 0L);
    if (sum % m != 0) throw ModulusMismatch("m does not divide sum of degrees");
  }

  int degree(int vertex) const { return degrees[vertex - 1]; }

  long total_degree() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0L);
  }

  // s = (sum d_i) / m.
  long s() const { return total_degree() / m; }

  // d(I) for a vertex mask.
  long block_degree(Mask block) const {
    long sum = 0;
    for (int v = 1; v <= n; ++v)
      if (contains(block, v)) sum += degrees[v - 1];
    return sum;
  }

  bool m_divisible(Mask block) const { return block_degree(block) % m == 0; }

  // All d_i in [1, m-1]?
  bool is_reduced() const {
    for (int d : degrees)
      if (d < 1 || d > m - 1) return false;
    return true;
  }
};

}  // namespace nefcert
