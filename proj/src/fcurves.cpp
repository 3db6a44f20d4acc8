#include "nefcert/fcurves.hpp"

#include <algorithm>

#include "nefcert/errors.hpp"

namespace nefcert {

std::vector<FCurve> enumerate_fcurves(int n) {
  if (n < 4) throw DomainTooSmall("F-curves need n >= 4");
  std::vector<FCurve> out;
  // Restricted growth strings with exactly 4 blocks, vertex 1 in block 0.
  std::vector<int> assign(n, 0);
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == n) {
      if (used != 4) return;
      FCurve f;
      f.n = n;
      for (int i = 0; i < n; ++i) f.parts[assign[i]] |= vertex_bit(i + 1);
      out.push_back(f);
      return;
    }
    int limit = std::min(used + 1, 4);
    for (int b = 0; b < limit; ++b) {
      assign[v] = b;
      self(self, v + 1, std::max(used, b + 1));
    }
  };
  assign[0] = 0;
  rec(rec, 1, 1);
  return out;
}

Rat fcurve_degree(const DivisorClass& a, const FCurve& f) {
  if (a.ambient() != f.n) throw AmbientMismatch("fcurve ambient mismatch");
  Rat deg(0);
  for (Mask part : f.parts) {
    if (popcount(part) == 1)
      deg += a.psi(mask_to_vertices(part)[0]);
    else
      deg += a.boundary(part);
  }
  deg -= a.boundary(f.parts[0] | f.parts[1]);
  deg -= a.boundary(f.parts[0] | f.parts[2]);
  deg -= a.boundary(f.parts[0] | f.parts[3]);
  return deg;
}

std::pair<Rat, FCurve> min_fcurve_degree(const DivisorClass& a) {
  auto curves = enumerate_fcurves(a.ambient());
  Rat best;
  FCurve witness;
  bool first = true;
  for (const auto& f : curves) {
    Rat d = fcurve_degree(a, f);
    if (first || d < best) {
      best = d;
      witness = f;
      first = false;
    }
  }
  return {best, witness};
}

}  // namespace nefcert
