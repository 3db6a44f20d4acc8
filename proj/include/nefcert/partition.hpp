#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "nefcert/errors.hpp"

namespace nefcert {

using Mask = std::uint32_t;

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }

inline int popcount(Mask m) { return std::popcount(m); }

// Vertex labels are 1..n; bit i-1 of a mask stands for vertex i.
inline Mask vertex_bit(int v) { return Mask{1} << (v - 1); }

inline bool contains(Mask m, int v) { return (m & vertex_bit(v)) != 0; }

inline std::vector<int> mask_to_vertices(Mask m) {
  std::vector<int> out;
  for (int v = 1; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

inline Mask vertices_to_mask(const std::vector<int>& vs, int n) {
  Mask m = 0;
  for (int v : vs) {
    if (v < 1 || v > n) throw InvalidPartition("vertex out of range");
    m |= vertex_bit(v);
  }
  return m;
}

// Unordered two-block partition {I, J} of [n], both blocks of size >= 2.
// The stored block is the side containing vertex 1.
struct ProperPartition {
  Mask block = 0;
  int n = 0;

  ProperPartition() = default;
  ProperPartition(Mask subset, int amb) : n(amb) {
    if (amb < 4) throw DomainTooSmall("proper partitions need n >= 4");
    Mask full = full_mask(amb);
    if ((subset & ~full) || subset == 0 || subset == full)
      throw InvalidPartition("subset not a proper nonempty subset");
    int sz = popcount(subset);
    if (sz < 2 || sz > amb - 2)
      throw InvalidPartition("block size out of [2, n-2]");
    block = (subset & 1) ? subset : (full & ~subset);
  }

  Mask complement() const { return full_mask(n) & ~block; }
  int block_size() const { return popcount(block); }
  // min(|I|, |J|): the symmetric "Delta_k" size label.
  int min_side() const {
    int s = block_size();
    return s < n - s ? s : n - s;
  }

  // Does the partition put a and b on opposite sides?
  bool separates(int a, int b) const {
    return contains(block, a) != contains(block, b);
  }

  friend bool operator==(const ProperPartition& a, const ProperPartition& b) {
    return a.n == b.n && a.block == b.block;
  }
  // Order: block size, then lexicographic on the sorted element list.
  friend bool operator<(const ProperPartition& a, const ProperPartition& b) {
    if (a.n != b.n) return a.n < b.n;
    int sa = popcount(a.block), sb = popcount(b.block);
    if (sa != sb) return sa < sb;
    Mask diff = a.block ^ b.block;
    if (!diff) return false;
    return ((diff & (~diff + 1)) & a.block) != 0;  // lowest differing vertex is in a
  }
};

inline ProperPartition canonical_partition(Mask subset, int n) {
  return ProperPartition(subset, n);
}

// All 2^(n-1) - n - 1 proper partitions, by block size then lexicographic
// on the canonical block.
inline std::vector<ProperPartition> enumerate_proper_partitions(int n) {
  if (n < 4) throw DomainTooSmall("need n >= 4");
  std::vector<ProperPartition> out;
  // Canonical blocks: subsets containing vertex 1 with 2 <= |I| <= n-2.
  for (Mask m = 1; m < full_mask(n); m += 2) {
    int sz = popcount(m);
    if (sz >= 2 && sz <= n - 2) out.emplace_back(m, n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Two partitions are compatible (nested) when one of the four pairwise
// block intersections is empty.
inline bool compatible(const ProperPartition& p, const ProperPartition& q) {
  Mask i = p.block, j = p.complement(), k = q.block, l = q.complement();
  return !(i & k) || !(i & l) || !(j & k) || !(j & l);
}

}  // namespace nefcert
