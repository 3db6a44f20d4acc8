#include "nefcert/keel.hpp"

#include <map>

#include "nefcert/errors.hpp"
#include "nefcert/partition.hpp"

namespace nefcert {

namespace {

// Solve M x = t exactly, M given column-wise. Returns the solution or
// nullopt when the system is inconsistent. Underdetermined systems get the
// free variables set to zero.
std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> cols,
                                            std::vector<Rat> target) {
  const size_t rows = target.size();
  const size_t ncols = cols.size();
  std::vector<int> pivot_col_of_row(rows, -1);
  std::vector<int> pivot_row_of_col(ncols, -1);
  size_t rank_row = 0;
  for (size_t c = 0; c < ncols && rank_row < rows; ++c) {
    // Find a pivot in column c at or below rank_row among untouched rows.
    size_t pr = rows;
    for (size_t r = 0; r < rows; ++r) {
      if (pivot_col_of_row[r] == -1 && cols[c][r] != 0) {
        pr = r;
        break;
      }
    }
    if (pr == rows) continue;
    Rat inv = 1 / cols[c][pr];
    for (size_t cc = 0; cc < ncols; ++cc)
      if (cols[cc][pr] != 0 || cc == c) cols[cc][pr] *= inv;
    target[pr] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || cols[c][r] == 0) continue;
      Rat f = cols[c][r];
      for (size_t cc = 0; cc < ncols; ++cc)
        if (cols[cc][pr] != 0) cols[cc][r] -= f * cols[cc][pr];
      target[r] -= f * target[pr];
    }
    pivot_col_of_row[pr] = static_cast<int>(c);
    pivot_row_of_col[c] = static_cast<int>(pr);
    ++rank_row;
  }
  // Consistency: rows with no pivot must have zero target.
  for (size_t r = 0; r < rows; ++r)
    if (pivot_col_of_row[r] == -1 && target[r] != 0) return std::nullopt;
  std::vector<Rat> x(ncols, Rat(0));
  for (size_t c = 0; c < ncols; ++c)
    if (pivot_row_of_col[c] != -1) x[c] = target[pivot_row_of_col[c]];
  return x;
}

// Flattened coordinates of a class: n psi entries followed by the boundary
// entries in enumeration order.
std::vector<Rat> coordinates(const DivisorClass& a,
                             const std::vector<ProperPartition>& parts) {
  std::vector<Rat> v;
  v.reserve(a.ambient() + parts.size());
  for (int i = 1; i <= a.ambient(); ++i) v.push_back(a.psi(i));
  for (const auto& p : parts) v.push_back(a.boundary(p));
  return v;
}

}  // namespace

RelationVector relation_vector(int i, int j, int n) {
  if (n < 4) throw DomainTooSmall("relations need n >= 4");
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw InvalidRelation("relation needs two distinct vertices in [n]");
  RelationVector r;
  r.i = i;
  r.j = j;
  r.as_class = DivisorClass(n);
  r.as_class.set_psi(i, Rat(1));
  r.as_class.set_psi(j, Rat(1));
  for (const auto& p : enumerate_proper_partitions(n))
    if (p.separates(i, j)) r.as_class.set_boundary(p, Rat(1));
  return r;
}

EquivalenceResult are_linearly_equivalent(const DivisorClass& a,
                                          const DivisorClass& b) {
  if (a.ambient() != b.ambient())
    throw AmbientMismatch("equivalence: ambient mismatch");
  const int n = a.ambient();
  const auto parts = enumerate_proper_partitions(n);
  DivisorClass diff = combine(a, b, Rat(1), Rat(-1));
  std::vector<Rat> target = coordinates(diff, parts);

  std::vector<std::pair<int, int>> rels;
  std::vector<std::vector<Rat>> cols;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      rels.emplace_back(i, j);
      cols.push_back(coordinates(relation_vector(i, j, n).as_class, parts));
    }

  EquivalenceResult out;
  auto sol = solve_exact(std::move(cols), std::move(target));
  if (!sol) return out;
  out.equivalent = true;
  for (size_t k = 0; k < rels.size(); ++k)
    if ((*sol)[k] != 0) out.coefficients.push_back({rels[k], (*sol)[k]});
  return out;
}

DivisorClass normal_form(const DivisorClass& a) {
  const int n = a.ambient();
  if (n < 5)
    throw NormalFormUnavailable(
        "normal form needs n >= 5 (the elimination system is singular at n=4)");
  // Unknown u_{kl} per relation; the coefficient of Delta_{{i,j}} in
  // relation (k,l) is 1 exactly when |{k,l} n {i,j}| = 1.  Solving
  // sum_{sep} u = b_{{i,j}}(A) over all size-2 blocks kills every size-2
  // boundary coordinate of A - sum u * relation.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  const size_t dim = pairs.size();

  std::vector<std::vector<Rat>> cols(dim, std::vector<Rat>(dim, Rat(0)));
  std::vector<Rat> target(dim, Rat(0));
  for (size_t row = 0; row < dim; ++row) {
    auto [i, j] = pairs[row];
    ProperPartition p(vertex_bit(i) | vertex_bit(j), n);
    target[row] = a.boundary(p);
    for (size_t col = 0; col < dim; ++col) {
      auto [k, l] = pairs[col];
      if (p.separates(k, l)) cols[col][row] = Rat(1);
    }
  }
  auto sol = solve_exact(std::move(cols), std::move(target));
  if (!sol)
    throw NormalFormUnavailable("size-2 elimination system is singular");
  // Verify the square system really pinned every unknown (invertibility).
  DivisorClass out = a;
  for (size_t k = 0; k < dim; ++k) {
    if ((*sol)[k] == 0) continue;
    auto [i, j] = pairs[k];
    out = combine(out, relation_vector(i, j, n).as_class, Rat(1), -(*sol)[k]);
  }
  for (const auto& [p, c] : out.boundary_coeffs())
    if (p.min_side() < 3)
      throw NormalFormUnavailable("elimination left a size-2 coordinate");
  return out;
}

DivisorClass psi_as_boundary(int i, int j, int k, int n) {
  if (i == j || i == k || j == k)
    throw InvalidRelation("psi_as_boundary needs three distinct vertices");
  if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
    throw InvalidRelation("vertex out of range");
  DivisorClass out(n);
  for (const auto& p : enumerate_proper_partitions(n)) {
    Mask side = contains(p.block, i) ? p.block : p.complement();
    if (!contains(side, j) && !contains(side, k))
      out.set_boundary(p, Rat(-1));  // class coefficient +1 on Delta
  }
  return out;
}

}  // namespace nefcert
