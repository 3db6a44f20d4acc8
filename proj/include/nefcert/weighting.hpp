#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nefcert/divisor_class.hpp"
#include "nefcert/errors.hpp"
#include "nefcert/partition.hpp"
#include "nefcert/rational.hpp"

namespace nefcert {

// Edge-weighting of the complete graph on {1, ..., n}. Dense storage over
// the n(n-1)/2 unordered edges; a weight of zero is simply zero.
class Weighting {
 public:
  Weighting() = default;
  explicit Weighting(int n) : n_(n), w_(static_cast<size_t>(n) * (n - 1) / 2) {
    if (n < 2) throw DomainTooSmall("weightings need n >= 2");
  }

  int ambient() const { return n_; }

  const Rat& at(int i, int j) const { return w_[index(i, j)]; }
  void set(int i, int j, Rat v) { w_[index(i, j)] = std::move(v); }
  void add(int i, int j, const Rat& v) { w_[index(i, j)] += v; }

  Weighting& operator+=(const Weighting& o) {
    if (o.n_ != n_) throw AmbientMismatch("weighting ambient mismatch");
    for (size_t k = 0; k < w_.size(); ++k) w_[k] += o.w_[k];
    return *this;
  }
  Weighting& operator*=(const Rat& s) {
    for (auto& v : w_) v *= s;
    return *this;
  }
  friend Weighting operator+(Weighting a, const Weighting& b) { return a += b; }
  friend Weighting operator*(Weighting a, const Rat& s) { return a *= s; }

  friend bool operator==(const Weighting& a, const Weighting& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  Rat total_weight() const {
    Rat sum(0);
    for (const auto& v : w_) sum += v;
    return sum;
  }

 private:
  size_t index(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
      throw InvalidPartition("bad edge endpoints");
    if (i > j) std::swap(i, j);
    // row i-1 (0-based) of the strict upper triangle
    size_t a = i - 1, b = j - 1;
    return a * (2 * n_ - a - 1) / 2 + (b - a - 1);
  }

  int n_ = 0;
  std::vector<Rat> w_;
};

// Sum of weights on edges incident to k.
inline Rat vertex_flow(const Weighting& w, int k) {
  if (k < 1 || k > w.ambient()) throw InvalidPartition("vertex out of range");
  Rat sum(0);
  for (int i = 1; i <= w.ambient(); ++i)
    if (i != k) sum += w.at(k, i);
  return sum;
}

// Sum of weights on edges crossing the partition.
inline Rat partition_flow(const Weighting& w, const ProperPartition& p) {
  if (p.n != w.ambient()) throw AmbientMismatch("partition ambient mismatch");
  Rat sum(0);
  for (int i = 1; i <= w.ambient(); ++i) {
    if (!contains(p.block, i)) continue;
    for (int j = 1; j <= w.ambient(); ++j)
      if (!contains(p.block, j)) sum += w.at(i, j);
  }
  return sum;
}

// Lemma-style rewrite: given a class A whose psi coefficients equal the
// vertex flows of w, the pure-boundary class with coefficients
// c_{I,J} = flow(I|J) - b_{I,J} is linearly equivalent to A.
inline std::map<ProperPartition, Rat> rewrite_to_boundary(
    const DivisorClass& a, const Weighting& w) {
  if (a.ambient() != w.ambient())
    throw AmbientMismatch("class/weighting ambient mismatch");
  for (int v = 1; v <= a.ambient(); ++v) {
    Rat flow = vertex_flow(w, v);
    if (flow != a.psi(v))
      throw FlowMismatch(v, "vertex flow " + rat_to_string(flow) +
                                " != psi coefficient " +
                                rat_to_string(a.psi(v)) + " at vertex " +
                                std::to_string(v));
  }
  std::map<ProperPartition, Rat> c;
  for (const auto& p : enumerate_proper_partitions(a.ambient()))
    c[p] = partition_flow(w, p) - a.boundary(p);
  return c;
}

}  // namespace nefcert
