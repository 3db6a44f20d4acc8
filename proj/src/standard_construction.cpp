#include "nefcert/standard_construction.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>

#include "nefcert/errors.hpp"

namespace nefcert {

namespace {

void check_reduced(const DegreeProblem& problem) {
  for (int d : problem.degrees)
    if (d < 1 || d > problem.m - 1)
      throw DegreesNotReduced("degrees must lie in [1, m-1]");
}

void check_sigma(const CyclicOrder& sigma, int n) {
  if (static_cast<int>(sigma.sequence.size()) != n)
    throw InvalidPartition("cyclic order has wrong length");
  std::vector<bool> seen(n + 1, false);
  for (int v : sigma.sequence) {
    if (v < 1 || v > n || seen[v])
      throw InvalidPartition("cyclic order is not a permutation of [n]");
    seen[v] = true;
  }
}

// Occupancy counts of `block` in the m residue classes of circle slots.
std::vector<long> occupancy(const ProperPartition& p,
                            const DegreeProblem& problem,
                            const CyclicOrder& sigma) {
  CircleArrangement circle = build_circle(problem, sigma);
  std::vector<long> x(problem.m, 0);
  for (size_t t = 0; t < circle.slots.size(); ++t)
    if (contains(p.block, circle.slots[t])) ++x[t % problem.m];
  return x;
}

bool balanced_counts(const std::vector<long>& x, long d_block, int m) {
  long q = d_block / m, r = d_block % m;
  long at_q = 0, at_q1 = 0;
  for (long v : x) {
    if (v == q)
      ++at_q;
    else if (v == q + 1)
      ++at_q1;
    else
      return false;
  }
  return at_q == m - r && at_q1 == r;
}

}  // namespace

CircleArrangement build_circle(const DegreeProblem& problem,
                               const CyclicOrder& sigma) {
  check_reduced(problem);
  check_sigma(sigma, problem.n);
  CircleArrangement out;
  out.s = problem.s();
  out.slots.reserve(problem.total_degree());
  for (int v : sigma.sequence)
    for (int rep = 0; rep < problem.degree(v); ++rep) out.slots.push_back(v);
  return out;
}

Weighting standard_weighting(const DegreeProblem& problem,
                             const CyclicOrder& sigma) {
  CircleArrangement circle = build_circle(problem, sigma);
  const int m = problem.m;
  const size_t total = circle.slots.size();
  Weighting w(problem.n);
  for (size_t p = 0; p < total; ++p) {
    for (size_t q = p + 1; q < total; ++q) {
      int i = circle.slots[p], j = circle.slots[q];
      long chord = 0;
      if (i != j) chord += 1;                       // w1
      if ((q - p) % m == 0) chord -= m;             // w2: same residue class
      if (chord == 0) continue;
      // Two slots of one index are never a full residue class apart
      // (runs have length <= m-1), so same-index chords carry weight 0.
      if (i == j) throw Error("same-index chord in a residue class");
      w.add(i, j, Rat(chord));
    }
  }
  return w;
}

bool is_balanced(const ProperPartition& p, const DegreeProblem& problem,
                 const CyclicOrder& sigma) {
  if (p.n != problem.n) throw AmbientMismatch("partition ambient mismatch");
  return balanced_counts(occupancy(p, problem, sigma),
                         problem.block_degree(p.block), problem.m);
}

CyclicOrder sigma_for_stable_tree(const StableTree& tree, int n) {
  for (size_t a = 0; a < tree.nodes.size(); ++a) {
    if (tree.nodes[a].n != n) throw AmbientMismatch("tree node ambient mismatch");
    for (size_t b = a + 1; b < tree.nodes.size(); ++b)
      if (!compatible(tree.nodes[a], tree.nodes[b]))
        throw NotATree("partitions are not pairwise compatible");
  }
  // The sides away from vertex 1 form a laminar family; a planar traversal
  // that keeps each laminar set contiguous gives the requisite order.
  std::set<Mask> lam;
  for (const auto& p : tree.nodes) lam.insert(p.complement());  // side without 1
  std::vector<Mask> sets(lam.begin(), lam.end());

  // emit(block): expand free vertices and maximal child sets, ordered by
  // smallest contained vertex.
  std::vector<int> seq;
  auto emit = [&](auto&& self, Mask scope) -> void {
    // maximal members of `sets` strictly inside scope
    std::vector<Mask> children;
    for (Mask s : sets) {
      if (s == scope || (s & ~scope)) continue;
      bool maximal = true;
      for (Mask t : sets)
        if (t != s && t != scope && !(t & ~scope) && (s & ~t) == 0) {
          maximal = false;
          break;
        }
      if (maximal) children.push_back(s);
    }
    Mask covered = 0;
    for (Mask c : children) covered |= c;
    struct Item {
      int key;
      Mask set;  // 0 for a free vertex
      int vertex;
    };
    std::vector<Item> items;
    for (int v = 1; v <= 32; ++v)
      if (contains(scope & ~covered, v)) items.push_back({v, 0, v});
    for (Mask c : children) items.push_back({mask_to_vertices(c)[0], c, 0});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.key < b.key; });
    for (const auto& it : items) {
      if (it.set == 0)
        seq.push_back(it.vertex);
      else
        self(self, it.set);
    }
  };
  emit(emit, full_mask(n));
  CyclicOrder out;
  out.sequence = std::move(seq);
  assert(static_cast<int>(out.sequence.size()) == n);
  return out;
}

CyclicOrder sigma_unbalancing(const ProperPartition& p,
                              const DegreeProblem& problem) {
  check_reduced(problem);
  if (p.n != problem.n) throw AmbientMismatch("partition ambient mismatch");
  const int n = problem.n;
  // Base order: block vertices first, then the complement, both ascending.
  std::vector<int> base = mask_to_vertices(p.block);
  const int k = static_cast<int>(base.size());
  for (int v : mask_to_vertices(p.complement())) base.push_back(v);

  auto try_order = [&](std::vector<int> seq) -> std::optional<CyclicOrder> {
    CyclicOrder s;
    s.sequence = std::move(seq);
    if (!is_balanced(p, problem, s)) return s;
    return std::nullopt;
  };

  // The transposition trick: swap the last block vertex with the first
  // complement vertex.
  {
    std::vector<int> seq = base;
    std::swap(seq[k - 1], seq[k]);
    if (auto s = try_order(std::move(seq))) return *s;
  }
  // Fallback: single swaps over the base order, then over rotations of it.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> seq = base;
      std::swap(seq[a], seq[b]);
      if (auto s = try_order(std::move(seq))) return *s;
    }
  for (int rot = 1; rot < n; ++rot) {
    std::vector<int> rbase(base.begin() + rot, base.end());
    rbase.insert(rbase.end(), base.begin(), base.begin() + rot);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::vector<int> seq = rbase;
        std::swap(seq[a], seq[b]);
        if (auto s = try_order(std::move(seq))) return *s;
      }
  }
  // Exhaustive fallback. Balance only depends on occupancy multiplicities,
  // which are invariant under rotating the whole circle, so fixing the
  // anchor vertex covers every cyclic order in (n-1)! trials.
  if (n <= 10) {
    std::vector<int> seq(base);
    std::sort(seq.begin(), seq.end());
    do {
      if (auto s = try_order(seq)) return *s;
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
  }
  throw UnbalanceNotFound("no cyclic order unbalances the partition");
}

}  // namespace nefcert
