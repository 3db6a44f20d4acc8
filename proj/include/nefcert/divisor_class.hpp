#pragma once

#include <map>
#include <vector>

#include "nefcert/errors.hpp"
#include "nefcert/partition.hpp"
#include "nefcert/rational.hpp"

namespace nefcert {

// A divisor class written as  sum a_i psi_i - sum b_{I,J} Delta_{I,J}.
// Boundary storage is sparse; an absent partition has coefficient zero.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(int n) : n_(n), psi_(n, Rat(0)) {
    if (n < 4) throw DomainTooSmall("divisor classes need n >= 4");
  }

  int ambient() const { return n_; }

  const Rat& psi(int vertex) const { return psi_.at(vertex - 1); }
  void set_psi(int vertex, Rat value) { psi_.at(vertex - 1) = std::move(value); }
  void add_psi(int vertex, const Rat& value) { psi_.at(vertex - 1) += value; }

  Rat boundary(const ProperPartition& p) const {
    check_ambient(p);
    auto it = boundary_.find(p);
    return it == boundary_.end() ? Rat(0) : it->second;
  }
  Rat boundary(Mask block) const { return boundary(ProperPartition(block, n_)); }

  void set_boundary(const ProperPartition& p, Rat value) {
    check_ambient(p);
    if (value == 0)
      boundary_.erase(p);
    else
      boundary_[p] = std::move(value);
  }
  void add_boundary(const ProperPartition& p, const Rat& value) {
    set_boundary(p, boundary(p) + value);
  }

  const std::map<ProperPartition, Rat>& boundary_coeffs() const {
    return boundary_;
  }
  const std::vector<Rat>& psi_coeffs() const { return psi_; }

  bool is_zero() const {
    for (const auto& a : psi_)
      if (a != 0) return false;
    return boundary_.empty();
  }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.n_ == b.n_ && a.psi_ == b.psi_ && a.boundary_ == b.boundary_;
  }

 private:
  void check_ambient(const ProperPartition& p) const {
    if (p.n != n_) throw AmbientMismatch("partition ambient mismatch");
  }

  int n_ = 0;
  std::vector<Rat> psi_;
  std::map<ProperPartition, Rat> boundary_;
};

// Coefficient-wise s*A + t*B.
inline DivisorClass combine(const DivisorClass& a, const DivisorClass& b,
                            const Rat& s, const Rat& t) {
  if (a.ambient() != b.ambient())
    throw AmbientMismatch("combine: ambient mismatch");
  DivisorClass out(a.ambient());
  for (int v = 1; v <= a.ambient(); ++v)
    out.set_psi(v, s * a.psi(v) + t * b.psi(v));
  for (const auto& [p, c] : a.boundary_coeffs()) out.add_boundary(p, s * c);
  for (const auto& [p, c] : b.boundary_coeffs()) out.add_boundary(p, t * c);
  return out;
}

inline DivisorClass psi_class(int vertex, int n) {
  DivisorClass c(n);
  c.set_psi(vertex, Rat(1));
  return c;
}

}  // namespace nefcert
