#include <doctest.h>

#include "nefcert/divisors.hpp"
#include "nefcert/errors.hpp"

using namespace nefcert;

TEST_CASE("divisor_D coefficients: a_i = <d_i><m-d_i>, b = r(m-r)") {
  DivisorClass d = divisor_D(DegreeProblem({1, 2, 2, 1}, 3));
  for (int v = 1; v <= 4; ++v) CHECK(d.psi(v) == 2);
  CHECK(d.boundary(vertices_to_mask({1, 2}, 4)) == 0);  // d(I) = 3
  CHECK(d.boundary(vertices_to_mask({1, 3}, 4)) == 0);
  CHECK(d.boundary(vertices_to_mask({1, 4}, 4)) == 2);  // r = 2
}

TEST_CASE("divisor_D on the unit-degree families") {
  DivisorClass a = divisor_D(DegreeProblem({1, 1, 1, 1}, 2));
  for (int v = 1; v <= 4; ++v) CHECK(a.psi(v) == 1);
  CHECK(a.boundary_coeffs().empty());  // every block degree is even

  DivisorClass b = divisor_D(DegreeProblem({1, 1, 1, 1, 1, 1}, 3));
  for (int v = 1; v <= 6; ++v) CHECK(b.psi(v) == 2);
  for (const auto& p : enumerate_proper_partitions(6))
    CHECK(b.boundary(p) == (p.min_side() == 3 ? 0 : 2));
}

TEST_CASE("divisor_D depends only on degrees mod m") {
  CHECK(divisor_D(DegreeProblem({3, 1, 1, 1}, 2)) ==
        divisor_D(DegreeProblem({1, 1, 1, 1}, 2)));
  CHECK(divisor_D(DegreeProblem({4, 1, 1, 2, 4}, 3)) ==
        divisor_D(DegreeProblem({1, 1, 1, 2, 1}, 3)));
}

TEST_CASE("divisor_E adds m psi on m-divisible degrees and m Delta on "
          "m-divisible blocks") {
  DivisorClass e = divisor_E(DegreeProblem({1, 1, 1, 2, 1, 3}, 3));
  CHECK(e.psi(1) == 2);
  CHECK(e.psi(6) == 3);  // <3> = 0, so a_6 = 0 + m
  CHECK(e.boundary(vertices_to_mask({1, 2, 3}, 6)) == 3);
  CHECK(e.boundary(vertices_to_mask({1, 2}, 6)) == 2);
}

TEST_CASE("divisor_E minus divisor_D is supported on the m-divisible data") {
  DegreeProblem problem({1, 1, 1, 1, 1, 1, 1, 1, 1}, 3);
  DivisorClass diff =
      combine(divisor_E(problem), divisor_D(problem), Rat(1), Rat(-1));
  for (int v = 1; v <= 9; ++v) CHECK(diff.psi(v) == 0);
  for (const auto& [p, c] : diff.boundary_coeffs()) {
    CHECK(problem.m_divisible(p.block));
    CHECK(c == 3);
  }
  CHECK(diff.boundary_coeffs().size() == enumerate_proper_partitions(9).size() -
                                             divisor_D(problem)
                                                 .boundary_coeffs()
                                                 .size());
}

TEST_CASE("divisor_E requires m >= 3") {
  CHECK_THROWS_AS(divisor_E(DegreeProblem({1, 1, 1, 1}, 2)), ModulusTooSmall);
}

TEST_CASE("hodge_eigenbundle_det scaling and symmetry") {
  DegreeProblem problem({1, 1, 1, 1}, 2);
  DivisorClass h = hodge_eigenbundle_det(problem, 1);
  for (int v = 1; v <= 4; ++v) CHECK(h.psi(v) == Rat(1, 8));

  DegreeProblem six({1, 1, 1, 1, 1, 1}, 3);
  CHECK(hodge_eigenbundle_det(six, 0).is_zero());
  CHECK(hodge_eigenbundle_det(six, 3).is_zero());
  CHECK(hodge_eigenbundle_det(six, 1) == hodge_eigenbundle_det(six, 2));
  CHECK(hodge_eigenbundle_det(six, 1) == hodge_eigenbundle_det(six, 5));

  DegreeProblem mixed({1, 2, 2, 1, 3}, 3);
  CHECK(hodge_eigenbundle_det(mixed, 1) == hodge_eigenbundle_det(mixed, 2));
  // <1*d> = (1,2,2,1,0): divisor_D of that, scaled by 1/18
  DivisorClass base = divisor_D(DegreeProblem({1, 2, 2, 1, 0}, 3));
  CHECK(hodge_eigenbundle_det(mixed, 1) ==
        combine(base, DivisorClass(5), Rat(1, 18), Rat(0)));
}

TEST_CASE("reduce_degrees drops m-divisible indices") {
  ReducedProblem r = reduce_degrees(DegreeProblem({3, 1, 1, 1, 2, 1}, 3));
  CHECK(r.dropped == std::vector<int>{1});
  CHECK(r.kept == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(r.problem.degrees == std::vector<int>{1, 1, 1, 2, 1});
  CHECK(r.problem.m == 3);
  CHECK(r.problem.is_reduced());

  ReducedProblem id = reduce_degrees(DegreeProblem({1, 1, 1, 1}, 2));
  CHECK(id.dropped.empty());
  CHECK(id.kept == std::vector<int>{1, 2, 3, 4});

  // residues above m get reduced in place
  ReducedProblem big = reduce_degrees(DegreeProblem({4, 1, 1, 2, 4}, 3));
  CHECK(big.dropped.empty());
  CHECK(big.problem.degrees == std::vector<int>{1, 1, 1, 2, 1});
}

TEST_CASE("reduce_degrees needs four surviving indices") {
  CHECK_THROWS_AS(reduce_degrees(DegreeProblem({7, 1, 1, 3}, 3)),
                  DomainTooSmall);
}
