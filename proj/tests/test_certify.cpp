#include <doctest.h>

#include <algorithm>

#include "nefcert/certify.hpp"
#include "nefcert/errors.hpp"

using namespace nefcert;

namespace {

bool has_claim(const EffectivityCertificate& cert, Claim c) {
  return std::find(cert.claims.begin(), cert.claims.end(), c) !=
         cert.claims.end();
}

bool has_issue(const Verdict& v, const std::string& code) {
  for (const auto& issue : v.issues)
    if (issue.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("certify family D and verify the result") {
  EffectivityCertificate cert =
      certify_effective(DegreeProblem({1, 1, 1, 2, 2, 2}, 3), DivisorFamily::D);
  CHECK(has_claim(cert, Claim::P1));
  CHECK(has_claim(cert, Claim::P2));
  REQUIRE(cert.sigma.has_value());
  CHECK(cert.sigma->size() == 6);
  for (const auto& [p, c] : cert.boundary_coefficients) CHECK(c >= 0);
  CHECK(verify_certificate(cert).accepted);
}

TEST_CASE("certify with an avoided tree zeroes its coefficients") {
  DegreeProblem problem({1, 1, 1, 1, 1, 1}, 3);
  StableTree tree;
  tree.n = 6;
  tree.nodes = {ProperPartition(vertices_to_mask({1, 2, 3}, 6), 6),
                ProperPartition(vertices_to_mask({1, 2}, 6), 6)};
  CertifyOptions options;
  options.avoid_tree = tree;
  EffectivityCertificate cert =
      certify_effective(problem, DivisorFamily::D, options);
  CHECK(has_claim(cert, Claim::Avoidance));
  for (const auto& node : tree.nodes)
    CHECK(cert.boundary_coefficients.at(node) == 0);
  CHECK(verify_certificate(cert).accepted);
}

TEST_CASE("certify with a forced-positive partition") {
  DegreeProblem problem({1, 1, 1, 1, 1, 1}, 3);
  ProperPartition target(vertices_to_mask({1, 2, 3}, 6), 6);
  CertifyOptions options;
  options.positive_on = target;
  EffectivityCertificate cert =
      certify_effective(problem, DivisorFamily::D, options);
  CHECK(has_claim(cert, Claim::Positivity));
  CHECK(cert.boundary_coefficients.at(target) > 0);
  CHECK(verify_certificate(cert).accepted);
}

TEST_CASE("conflicting avoid/positive options are rejected") {
  DegreeProblem problem({1, 1, 1, 1, 1, 1}, 3);
  ProperPartition target(vertices_to_mask({1, 2, 3}, 6), 6);
  StableTree tree;
  tree.n = 6;
  tree.nodes = {target};
  CertifyOptions options;
  options.avoid_tree = tree;
  options.positive_on = target;
  CHECK_THROWS_AS(certify_effective(problem, DivisorFamily::D, options),
                  UnsupportedOptionCombo);
}

TEST_CASE("compatible avoid/positive options succeed together") {
  DegreeProblem problem({1, 1, 1, 1, 1, 1}, 3);
  StableTree tree;
  tree.n = 6;
  tree.nodes = {ProperPartition(vertices_to_mask({1, 2}, 6), 6)};
  CertifyOptions options;
  options.avoid_tree = tree;
  options.positive_on = ProperPartition(vertices_to_mask({1, 2, 3}, 6), 6);
  EffectivityCertificate cert =
      certify_effective(problem, DivisorFamily::D, options);
  CHECK(cert.boundary_coefficients.at(tree.nodes[0]) == 0);
  CHECK(cert.boundary_coefficients.at(*options.positive_on) > 0);
  CHECK(verify_certificate(cert).accepted);
}

TEST_CASE("certify family E via the inductive construction") {
  EffectivityCertificate cert = certify_effective(
      DegreeProblem({1, 1, 1, 1, 1, 1, 1, 1, 1}, 3), DivisorFamily::E);
  CHECK(has_claim(cert, Claim::P3));
  CHECK_FALSE(cert.sigma.has_value());
  for (const auto& [p, c] : cert.boundary_coefficients) CHECK(c >= 0);
  CHECK(verify_certificate(cert).accepted);
}

TEST_CASE("certify family E with m-divisible degrees present") {
  EffectivityCertificate cert = certify_effective(
      DegreeProblem({3, 1, 1, 1, 2, 1}, 3), DivisorFamily::E);
  CHECK(cert.weighting.ambient() == 6);
  CHECK(verify_certificate(cert).accepted);
  // vertex 1 carries the extra m * psi_1 flow
  CHECK(vertex_flow(cert.weighting, 1) == 3);
}

TEST_CASE("family E rejects m = 2 and D-only options") {
  CHECK_THROWS_AS(
      certify_effective(DegreeProblem({1, 1, 1, 1}, 2), DivisorFamily::E),
      ModulusTooSmall);
  CertifyOptions options;
  options.positive_on = ProperPartition(vertices_to_mask({1, 2}, 6), 6);
  CHECK_THROWS_AS(certify_effective(DegreeProblem({1, 1, 1, 1, 1, 1}, 3),
                                    DivisorFamily::E, options),
                  UnsupportedOptionCombo);
}

TEST_CASE("verification rejects a perturbed weighting") {
  EffectivityCertificate cert =
      certify_effective(DegreeProblem({1, 1, 1, 2, 2, 2}, 3), DivisorFamily::D);
  cert.weighting.add(1, 2, Rat(1, 7));
  Verdict v = verify_certificate(cert);
  CHECK_FALSE(v.accepted);
  CHECK(has_issue(v, "FlowMismatch"));
}

TEST_CASE("verification rejects tampered coefficients") {
  EffectivityCertificate cert =
      certify_effective(DegreeProblem({1, 1, 1, 2, 2, 2}, 3), DivisorFamily::D);
  cert.boundary_coefficients.begin()->second += 1;
  Verdict v = verify_certificate(cert);
  CHECK_FALSE(v.accepted);
  CHECK(has_issue(v, "CoefficientMismatch"));
}

TEST_CASE("verification rejects a fabricated avoidance claim") {
  DegreeProblem problem({1, 1, 1, 1, 1, 1}, 3);
  CertifyOptions options;
  options.positive_on = ProperPartition(vertices_to_mask({1, 2, 3}, 6), 6);
  EffectivityCertificate cert =
      certify_effective(problem, DivisorFamily::D, options);
  StableTree tree;
  tree.n = 6;
  tree.nodes = {*options.positive_on};
  cert.options.avoid_tree = tree;
  cert.claims.push_back(Claim::Avoidance);
  Verdict v = verify_certificate(cert);
  CHECK_FALSE(v.accepted);
  CHECK(has_issue(v, "AvoidanceViolated"));
}

TEST_CASE("verification rejects a fabricated positivity claim") {
  DegreeProblem problem({1, 1, 1, 1, 1, 1}, 3);
  StableTree tree;
  tree.n = 6;
  tree.nodes = {ProperPartition(vertices_to_mask({1, 2, 3}, 6), 6)};
  CertifyOptions options;
  options.avoid_tree = tree;
  EffectivityCertificate cert =
      certify_effective(problem, DivisorFamily::D, options);
  cert.options.positive_on = tree.nodes[0];
  cert.claims.push_back(Claim::Positivity);
  Verdict v = verify_certificate(cert);
  CHECK_FALSE(v.accepted);
  CHECK(has_issue(v, "PositivityViolated"));
}

TEST_CASE("certification requires four marked points") {
  CHECK_THROWS_AS(certify_effective(DegreeProblem({1, 1, 1}, 3),
                                    DivisorFamily::D),
                  DomainTooSmall);
}
