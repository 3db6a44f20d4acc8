#include "nefcert/inductive.hpp"

#include <algorithm>
#include <optional>

#include "nefcert/errors.hpp"
#include "nefcert/standard_construction.hpp"

namespace nefcert {

namespace {

// Sub-problems are handled in the global frame: weightings stay ambient-n
// with support inside the active vertex set.
struct Frame {
  const DegreeProblem* problem;  // full ambient problem (reduced degrees)
  std::vector<GlueEvent>* trace;
};

int lowest_vertex(Mask m) { return mask_to_vertices(m)[0]; }

DegreeProblem residues(const DegreeProblem& problem) {
  std::vector<int> d(problem.degrees);
  for (int& v : d) v = static_cast<int>(mod_rep(v, problem.m));
  return DegreeProblem(d, problem.m);
}

Rat flow_between(const Weighting& w, Mask a, Mask b) {
  Rat sum(0);
  for (int i = 1; i <= w.ambient(); ++i) {
    if (!contains(a, i)) continue;
    for (int j = 1; j <= w.ambient(); ++j)
      if (contains(b, j)) sum += w.at(i, j);
  }
  return sum;
}

// Proper two-block partitions of `active`, as the side containing its
// lowest vertex. Deterministic order: size, then mask.
std::vector<Mask> proper_sides(Mask active) {
  int lo = lowest_vertex(active);
  int size = popcount(active);
  std::vector<Mask> out;
  for (Mask sub = active; sub; sub = (sub - 1) & active) {
    if (!contains(sub, lo)) continue;
    int s = popcount(sub);
    if (s >= 2 && s <= size - 2) out.push_back(sub);
  }
  std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
    if (popcount(x) != popcount(y)) return popcount(x) < popcount(y);
    return x < y;
  });
  return out;
}

std::vector<Mask> m_partition_sides(const Frame& f, Mask active) {
  std::vector<Mask> out;
  for (Mask side : proper_sides(active))
    if (f.problem->block_degree(side) % f.problem->m == 0) out.push_back(side);
  return out;
}

// Local view of the active set for the standard construction.
struct LocalView {
  std::vector<int> labels;  // local v -> labels[v-1]
  DegreeProblem local;
};

LocalView make_view(const DegreeProblem& problem, Mask active) {
  LocalView v;
  v.labels = mask_to_vertices(active);
  std::vector<int> degrees;
  degrees.reserve(v.labels.size());
  for (int g : v.labels) degrees.push_back(problem.degree(g));
  v.local = DegreeProblem(degrees, problem.m);
  return v;
}

Weighting lift(const Weighting& local, const LocalView& view, int ambient) {
  Weighting out(ambient);
  const int nloc = local.ambient();
  for (int i = 1; i <= nloc; ++i)
    for (int j = i + 1; j <= nloc; ++j)
      if (local.at(i, j) != 0)
        out.set(view.labels[i - 1], view.labels[j - 1], local.at(i, j));
  return out;
}

Mask to_local_mask(const LocalView& view, Mask global) {
  Mask m = 0;
  for (size_t i = 0; i < view.labels.size(); ++i)
    if (contains(global, view.labels[i])) m |= Mask{1} << i;
  return m;
}

bool transverse(Mask a_side, Mask b_side, Mask active) {
  Mask ac = active & ~a_side, bc = active & ~b_side;
  return (a_side & b_side) && (a_side & bc) && (ac & b_side) && (ac & bc);
}

// (P1)-(P3) restricted to the active set.
PropertyReport check_properties(const Weighting& w, const Frame& f,
                                Mask active) {
  const DegreeProblem& prob = *f.problem;
  const long m = prob.m;
  PropertyReport rep;
  for (int v : mask_to_vertices(active)) {
    long d = prob.degree(v);
    Rat expected(d * (m - d));
    Rat actual = vertex_flow(w, v);
    if (actual != expected) rep.p1_violations.push_back({v, expected, actual});
  }
  for (Mask side : proper_sides(active)) {
    Rat actual = flow_between(w, side, active & ~side);
    long r = mod_rep(prob.block_degree(side), m);
    Rat bound(r * (m - r));
    if (actual < bound) rep.p2_violations.push_back({side, bound, actual});
    if (r == 0 && actual < m) rep.p3_violations.push_back({side, Rat(m), actual});
  }
  return rep;
}

Weighting standard_on(const Frame& f, Mask active,
                      const std::optional<Mask>& unbalance_side) {
  LocalView view = make_view(*f.problem, active);
  CyclicOrder sigma = CyclicOrder::identity(view.local.n);
  if (unbalance_side) {
    ProperPartition p(to_local_mask(view, *unbalance_side), view.local.n);
    sigma = sigma_unbalancing(p, view.local);
  }
  return lift(standard_weighting(view.local, sigma), view,
              f.problem->n);
}

Weighting solve(const Frame& f, Mask active);

// w_{S1|S2} with recursive sub-certificates; records the glue.
Weighting glue(const Frame& f, Mask active, Mask side,
               std::optional<Weighting> side_override = std::nullopt) {
  Mask other = active & ~side;
  Weighting w = side_override ? std::move(*side_override) : solve(f, side);
  w += solve(f, other);
  if (f.trace) f.trace->push_back({active, side, w});
  return w;
}

Weighting average(std::vector<Weighting> ws) {
  Weighting sum = std::move(ws.front());
  for (size_t i = 1; i < ws.size(); ++i) sum += ws[i];
  return sum * Rat(1, static_cast<long>(ws.size()));
}

// Exhaustive search for a split of `active` into `parts` nonempty
// m-divisible pieces.
bool find_m_split(const Frame& f, Mask active, int parts,
                  std::vector<Mask>& out) {
  if (parts == 1) {
    if (f.problem->block_degree(active) % f.problem->m != 0) return false;
    out.push_back(active);
    return true;
  }
  int lo = lowest_vertex(active);
  for (Mask sub = active; sub; sub = (sub - 1) & active) {
    if (!contains(sub, lo) || sub == active) continue;
    if (f.problem->block_degree(sub) % f.problem->m != 0) continue;
    out.push_back(sub);
    if (find_m_split(f, active & ~sub, parts - 1, out)) return true;
    out.pop_back();
  }
  return false;
}

Weighting solve_uncached(const Frame& f, Mask active) {
  const DegreeProblem& prob = *f.problem;
  const long m = prob.m;
  const int size = popcount(active);
  const long total = prob.block_degree(active);

  // Leaves and the base case sum(d) = m have no proper m-partitions; the
  // standard construction already gives (P1)-(P2).
  if (size <= 3 || total == m)
    return standard_on(f, active, std::nullopt);

  std::vector<Mask> mparts = m_partition_sides(f, active);
  const size_t k = mparts.size();

  auto finish = [&](Weighting w) -> std::optional<Weighting> {
    if (check_properties(w, f, active).clean()) return w;
    return std::nullopt;
  };

  std::optional<Weighting> result;
  if (k == 0) {
    result = finish(standard_on(f, active, std::nullopt));
  } else if (k == 1) {
    result = finish(standard_on(f, active, mparts[0]));
  } else if (k == 2 && transverse(mparts[0], mparts[1], active)) {
    result = finish(average({standard_on(f, active, mparts[0]),
                             standard_on(f, active, mparts[1])}));
  } else {
    std::vector<Mask> four;
    std::vector<Mask> three;
    if (find_m_split(f, active, 4, four)) {
      Mask a = four[0], b = four[1], c = four[2], d = four[3];
      result = finish(average({glue(f, active, a | b), glue(f, active, a | c),
                               glue(f, active, a | d)}));
    } else if (m >= 4 && find_m_split(f, active, 3, three)) {
      Mask s1 = three[0], s2 = three[1], s3 = three[2];
      // Does each pairwise union have its split as unique m-partition?
      auto pair_mparts = [&](Mask x, Mask y) {
        return m_partition_sides(f, x | y);
      };
      bool all_unique = pair_mparts(s1, s2).size() == 1 &&
                        pair_mparts(s1, s3).size() == 1 &&
                        pair_mparts(s2, s3).size() == 1;
      if (all_unique) {
        // Reinforce the flow across S_i | S_j inside the pair to >= 2m.
        auto reinforced = [&](Mask x, Mask y) {
          Weighting pair_w = standard_on(f, x | y, x);
          return glue(f, active, x | y, std::move(pair_w));
        };
        result = finish(average({reinforced(s1, s2), reinforced(s1, s3),
                                 reinforced(s2, s3)}));
      } else {
        // Some pair has a second m-partition A | B, necessarily transverse
        // to its split; average four glued weightings.
        std::optional<Weighting> attempt;
        const std::pair<Mask, Mask> pairs[] = {{s1, s2}, {s1, s3}, {s2, s3}};
        for (auto [x, y] : pairs) {
          for (Mask a : pair_mparts(x, y)) {
            Mask b = (x | y) & ~a;
            if ((a == x && b == y) || (a == y && b == x)) continue;
            if (!transverse(a, x, x | y)) continue;
            attempt = finish(average({glue(f, active, x), glue(f, active, y),
                                      glue(f, active, a), glue(f, active, b)}));
            break;
          }
          if (attempt) break;
        }
        result = attempt;
      }
    }
    if (!result && k >= 3) {
      std::vector<Weighting> ws;
      ws.reserve(k);
      for (Mask side : mparts) ws.push_back(glue(f, active, side));
      result = finish(average(std::move(ws)));
    }
  }

  if (!result) {
    // Verified fallback: widen the averaged family.
    std::vector<Weighting> glued;
    for (Mask side : mparts) glued.push_back(glue(f, active, side));
    if (!glued.empty()) {
      result = finish(average(glued));
      if (!result) {
        std::vector<Weighting> wide = glued;
        for (Mask side : mparts)
          wide.push_back(standard_on(f, active, side));
        result = finish(average(std::move(wide)));
      }
    }
  }
  if (!result)
    throw CertificateSearchFailed(
        "no averaged weighting satisfies (P1)-(P3) on the sub-problem");
  return *result;
}

Weighting solve(const Frame& f, Mask active) { return solve_uncached(f, active); }

}  // namespace

std::vector<ProperPartition> m_partitions(const DegreeProblem& problem) {
  std::vector<ProperPartition> out;
  for (const auto& p : enumerate_proper_partitions(problem.n))
    if (problem.block_degree(p.block) % problem.m == 0) out.push_back(p);
  return out;
}

Weighting glue_weighting(const Weighting& w1, const Weighting& w2,
                         const ProperPartition& split) {
  if (w1.ambient() != split.n || w2.ambient() != split.n)
    throw AmbientMismatch("glue: weighting/split ambient mismatch");
  Mask s1 = split.block, s2 = split.complement();
  const int n = split.n;
  Weighting out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool in1 = contains(s1, i) && contains(s1, j);
      bool in2 = contains(s2, i) && contains(s2, j);
      if (in1)
        out.set(i, j, w1.at(i, j));
      else if (in2)
        out.set(i, j, w2.at(i, j));
      if (!in1 && w1.at(i, j) != 0)
        throw InvalidPartition("w1 has weight outside the first block");
      if (!in2 && w2.at(i, j) != 0)
        throw InvalidPartition("w2 has weight outside the second block");
    }
  return out;
}

Weighting inductive_weighting(const DegreeProblem& problem,
                              std::vector<GlueEvent>* trace) {
  if (problem.m < 3) throw ModulusTooSmall("family E needs m >= 3");
  // The construction depends only on the residues of the degrees.
  DegreeProblem reduced = residues(problem);
  if (!reduced.is_reduced())
    throw DegreesNotReduced(
        "inductive_weighting needs degrees nonzero mod m; drop m-divisible "
        "indices first");
  Frame f{&reduced, trace};
  Weighting w = solve(f, full_mask(reduced.n));
  PropertyReport rep = verify_P123(w, reduced);
  if (!rep.clean())
    throw CertificateSearchFailed("constructed weighting fails (P1)-(P3)");
  return w;
}

PropertyReport verify_P123(const Weighting& w, const DegreeProblem& problem) {
  if (w.ambient() != problem.n)
    throw AmbientMismatch("weighting ambient mismatch");
  DegreeProblem reduced = residues(problem);
  Frame f{&reduced, nullptr};
  return check_properties(w, f, full_mask(reduced.n));
}

}  // namespace nefcert
