#pragma once

#include <map>
#include <optional>

#include "nefcert/divisor_class.hpp"

namespace nefcert {

// Symmetric profile of a class: equal psi coefficients and boundary
// coefficients depending only on the block size. Reported in
// Delta-coefficient terms (Sigma a psi + Sigma delta[k] Delta_k).
struct SymmetricProfile {
  Rat psi_coeff;
  std::map<int, Rat> delta;  // min block size -> coefficient
};

std::optional<SymmetricProfile> symmetrize_report(const DivisorClass& a);

// CLI entry point. Exit codes: 0 success/accept, 1 reject/not-equivalent,
// 2 usage error, 3 mathematical failure.
int run(int argc, const char* const* argv);

}  // namespace nefcert
