#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nefcert/divisors.hpp"
#include "nefcert/standard_construction.hpp"
#include "nefcert/weighting.hpp"

namespace nefcert {

enum class Claim { P1, P2, P3, Avoidance, Positivity };

std::string claim_name(Claim c);
Claim claim_from_name(const std::string& s);

struct CertifyOptions {
  std::optional<StableTree> avoid_tree;       // boundary point to miss
  std::optional<ProperPartition> positive_on; // coefficient forced positive
};

// Self-contained effectivity witness: a weighting whose vertex flows match
// the family class and whose partition flows dominate its boundary
// coefficients. Re-checkable from the degree data alone.
struct EffectivityCertificate {
  DegreeProblem problem;  // original degrees, before reduction
  DivisorFamily family = DivisorFamily::D;
  std::optional<std::vector<int>> sigma;  // cyclic order used, if any
  Weighting weighting;
  std::map<ProperPartition, Rat> boundary_coefficients;
  CertifyOptions options;
  std::vector<Claim> claims;
};

EffectivityCertificate certify_effective(const DegreeProblem& problem,
                                         DivisorFamily family,
                                         const CertifyOptions& options = {});

struct VerificationIssue {
  std::string code;    // FlowMismatch, NegativeCoefficient, ...
  std::string detail;
};

struct Verdict {
  bool accepted = false;
  std::vector<VerificationIssue> issues;
};

// Trusts nothing: recomputes the class, the flows, and the coefficients,
// then checks every claim.
Verdict verify_certificate(const EffectivityCertificate& cert);

// The family class of a certificate.
DivisorClass family_class(const DegreeProblem& problem, DivisorFamily family);

}  // namespace nefcert
