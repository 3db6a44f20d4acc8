#include "nefcert/certify.hpp"

#include <algorithm>

#include "nefcert/errors.hpp"
#include "nefcert/inductive.hpp"

namespace nefcert {

namespace {

struct Reduction {
  ReducedProblem red;
  Mask kept_mask = 0;
};

Reduction reduce(const DegreeProblem& problem) {
  Reduction r;
  r.red = reduce_degrees(problem);
  for (int v : r.red.kept) r.kept_mask |= vertex_bit(v);
  return r;
}

int local_index(const std::vector<int>& kept, int global) {
  auto it = std::lower_bound(kept.begin(), kept.end(), global);
  return static_cast<int>(it - kept.begin()) + 1;
}

Mask to_local(const std::vector<int>& kept, Mask global) {
  Mask m = 0;
  for (size_t i = 0; i < kept.size(); ++i)
    if (contains(global, kept[i])) m |= Mask{1} << i;
  return m;
}

Weighting lift_local(const Weighting& local, const std::vector<int>& kept,
                     int ambient) {
  Weighting out(ambient);
  for (size_t i = 0; i < kept.size(); ++i)
    for (size_t j = i + 1; j < kept.size(); ++j) {
      const Rat& v = local.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
      if (v != 0) out.set(kept[i], kept[j], v);
    }
  return out;
}

// Induced partition of the kept set, when proper there.
std::optional<ProperPartition> induce(const ProperPartition& p,
                                      const Reduction& r) {
  Mask local = to_local(r.red.kept, p.block);
  int nloc = r.red.problem.n;
  int sz = popcount(local);
  if (sz < 2 || sz > nloc - 2) return std::nullopt;
  return ProperPartition(local, nloc);
}

// Weighting with vertex flow 1 at i and 0 elsewhere whose partition flows
// are all 0 or 1 (the boundary expression of psi_i through the pivots j, k).
Weighting psi_triangle(int i, int j, int k, int n) {
  Weighting w(n);
  w.set(i, j, Rat(1, 2));
  w.set(i, k, Rat(1, 2));
  w.set(j, k, Rat(-1, 2));
  return w;
}

CyclicOrder tree_sigma(const Reduction& r, const StableTree& tree) {
  StableTree local_tree;
  local_tree.n = r.red.problem.n;
  for (const auto& p : tree.nodes)
    if (auto q = induce(p, r)) local_tree.nodes.push_back(*q);
  return sigma_for_stable_tree(local_tree, local_tree.n);
}

Weighting certify_D_weighting(const DegreeProblem& problem,
                              const CertifyOptions& options, const Reduction& r,
                              std::vector<int>* sigma_out) {
  const auto& local = r.red.problem;
  CyclicOrder sigma = CyclicOrder::identity(local.n);

  std::optional<ProperPartition> pos_local;
  if (options.positive_on) {
    if (options.positive_on->n != problem.n)
      throw AmbientMismatch("positive-on partition ambient mismatch");
    auto q = induce(*options.positive_on, r);
    if (!q)
      throw CertificateSearchFailed(
          "forced-positive partition degenerates under reduction; its "
          "coefficient is pinned to zero");
    pos_local = q;
  }

  if (options.avoid_tree && options.positive_on) {
    for (const auto& node : options.avoid_tree->nodes)
      if (node == *options.positive_on)
        throw UnsupportedOptionCombo(
            "cannot force positivity on an avoided tree partition");
    sigma = tree_sigma(r, *options.avoid_tree);
    if (is_balanced(*pos_local, local, sigma)) {
      // Look for a transposition that keeps the tree balanced but
      // unbalances the forced partition.
      bool found = false;
      for (int a = 0; a < local.n && !found; ++a)
        for (int b = a + 1; b < local.n && !found; ++b) {
          CyclicOrder cand = sigma;
          std::swap(cand.sequence[a], cand.sequence[b]);
          if (is_balanced(*pos_local, local, cand)) continue;
          bool tree_ok = true;
          for (const auto& node : options.avoid_tree->nodes)
            if (auto q = induce(node, r))
              if (!is_balanced(*q, local, cand)) {
                tree_ok = false;
                break;
              }
          if (tree_ok) {
            sigma = cand;
            found = true;
          }
        }
      if (!found)
        throw UnsupportedOptionCombo(
            "no cyclic order avoids the tree and unbalances the partition");
    }
  } else if (options.avoid_tree) {
    sigma = tree_sigma(r, *options.avoid_tree);
  } else if (options.positive_on) {
    sigma = sigma_unbalancing(*pos_local, local);
  }

  if (sigma_out) {
    sigma_out->clear();
    for (int v : sigma.sequence) sigma_out->push_back(r.red.kept[v - 1]);
  }
  return lift_local(standard_weighting(local, sigma), r.red.kept, problem.n);
}

Weighting certify_E_weighting(const DegreeProblem& problem,
                              const Reduction& r) {
  Weighting w =
      lift_local(inductive_weighting(r.red.problem), r.red.kept, problem.n);
  // Dropped indices contribute m * psi_i; realize each via the triangle
  // weighting through the two smallest kept vertices.
  int j = r.red.kept[0], k = r.red.kept[1];
  for (int i : r.red.dropped)
    w += psi_triangle(i, j, k, problem.n) * Rat(problem.m);
  return w;
}

}  // namespace

std::string claim_name(Claim c) {
  switch (c) {
    case Claim::P1: return "P1";
    case Claim::P2: return "P2";
    case Claim::P3: return "P3";
    case Claim::Avoidance: return "avoidance";
    case Claim::Positivity: return "positivity";
  }
  throw Error("unknown claim");
}

Claim claim_from_name(const std::string& s) {
  if (s == "P1") return Claim::P1;
  if (s == "P2") return Claim::P2;
  if (s == "P3") return Claim::P3;
  if (s == "avoidance") return Claim::Avoidance;
  if (s == "positivity") return Claim::Positivity;
  throw ParseError("unknown claim: " + s);
}

DivisorClass family_class(const DegreeProblem& problem, DivisorFamily family) {
  return family == DivisorFamily::D ? divisor_D(problem) : divisor_E(problem);
}

EffectivityCertificate certify_effective(const DegreeProblem& problem,
                                         DivisorFamily family,
                                         const CertifyOptions& options) {
  if (problem.n < 4) throw DomainTooSmall("certification needs n >= 4");
  if (family == DivisorFamily::E && problem.m < 3)
    throw ModulusTooSmall("family E needs m >= 3");
  Reduction r = reduce(problem);

  EffectivityCertificate cert;
  cert.problem = problem;
  cert.family = family;
  cert.options = options;
  cert.claims = {Claim::P1, Claim::P2};

  if (family == DivisorFamily::D) {
    std::vector<int> sigma;
    cert.weighting = certify_D_weighting(problem, options, r, &sigma);
    cert.sigma = std::move(sigma);
    if (options.avoid_tree) cert.claims.push_back(Claim::Avoidance);
    if (options.positive_on) cert.claims.push_back(Claim::Positivity);
  } else {
    if (options.avoid_tree || options.positive_on)
      throw UnsupportedOptionCombo(
          "avoidance/positivity options apply to family D only");
    cert.weighting = certify_E_weighting(problem, r);
    cert.claims.push_back(Claim::P3);
  }

  DivisorClass cls = family_class(problem, family);
  cert.boundary_coefficients = rewrite_to_boundary(cls, cert.weighting);
  for (const auto& [p, c] : cert.boundary_coefficients)
    if (c < 0)
      throw CertificateSearchFailed("negative boundary coefficient produced");

  Verdict v = verify_certificate(cert);
  if (!v.accepted)
    throw CertificateSearchFailed("generated certificate failed verification: " +
                                  (v.issues.empty() ? std::string("?")
                                                    : v.issues[0].detail));
  return cert;
}

Verdict verify_certificate(const EffectivityCertificate& cert) {
  Verdict verdict;
  auto fail = [&](std::string code, std::string detail) {
    verdict.issues.push_back({std::move(code), std::move(detail)});
  };

  const DegreeProblem& problem = cert.problem;
  const int n = problem.n;
  const long m = problem.m;
  if (cert.weighting.ambient() != n) {
    fail("AmbientMismatch", "weighting ambient differs from n");
    return verdict;
  }

  DivisorClass cls = family_class(problem, cert.family);
  for (int v = 1; v <= n; ++v) {
    Rat flow = vertex_flow(cert.weighting, v);
    if (flow != cls.psi(v))
      fail("FlowMismatch", "vertex " + std::to_string(v) + ": flow " +
                               rat_to_string(flow) + " != " +
                               rat_to_string(cls.psi(v)));
  }

  bool claims_p2 = false, claims_p3 = false;
  for (Claim c : cert.claims) {
    claims_p2 |= c == Claim::P2;
    claims_p3 |= c == Claim::P3;
  }

  std::map<ProperPartition, Rat> recomputed;
  for (const auto& p : enumerate_proper_partitions(n)) {
    Rat flow = partition_flow(cert.weighting, p);
    Rat c = flow - cls.boundary(p);
    recomputed[p] = c;
    if (c < 0)
      fail("NegativeCoefficient",
           "coefficient " + rat_to_string(c) + " on a partition");
    long r = mod_rep(problem.block_degree(p.block), m);
    if (claims_p2 && flow < r * (m - r))
      fail("P2Violated", "flow below <d(I)><d(J)>");
    if (claims_p3 && r == 0 && flow < m)
      fail("P3Violated", "m-partition flow below m");
  }

  if (recomputed != cert.boundary_coefficients)
    fail("CoefficientMismatch",
         "stored boundary coefficients differ from recomputed ones");

  for (Claim c : cert.claims) {
    if (c == Claim::Avoidance) {
      if (!cert.options.avoid_tree) {
        fail("AvoidanceViolated", "avoidance claimed without a tree");
        continue;
      }
      for (const auto& node : cert.options.avoid_tree->nodes)
        if (recomputed.count(node) && recomputed.at(node) != 0)
          fail("AvoidanceViolated", "nonzero coefficient on a tree partition");
    } else if (c == Claim::Positivity) {
      if (!cert.options.positive_on) {
        fail("PositivityViolated", "positivity claimed without a partition");
        continue;
      }
      auto it = recomputed.find(*cert.options.positive_on);
      if (it == recomputed.end() || it->second <= 0)
        fail("PositivityViolated", "forced partition coefficient not positive");
    }
  }

  verdict.accepted = verdict.issues.empty();
  return verdict;
}

}  // namespace nefcert
