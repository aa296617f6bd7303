#include <doctest.h>

#include <algorithm>
#include <random>

#include "lsb/cocycle_solver.hpp"

using namespace lsb;

namespace {

RationalMatrix M(std::vector<RationalVector> rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return RationalMatrix(std::move(rows), cols);
}

bool spans_equal(const std::vector<RationalVector>& x, const std::vector<RationalVector>& y) {
  for (const auto& v : x)
    if (!in_span(y, v)) return false;
  for (const auto& v : y)
    if (!in_span(x, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("nullspace basics") {
  CHECK(nullspace(RationalMatrix::identity(3)).empty());
  auto n = nullspace(M({{1, 1}, {2, 2}}));
  REQUIRE(n.size() == 1);
  CHECK(n[0] == RationalVector{-1, 1});
  auto z = nullspace(RationalMatrix(0, 2));
  CHECK(z.size() == 2);
  auto f = nullspace(M({{Rational(1, 2), Rational(1, 3), 1}}));
  REQUIRE(f.size() == 2);
  for (const auto& v : f) CHECK(M({{Rational(1, 2), Rational(1, 3), 1}}).multiply(v) == RationalVector{0});
  CHECK(rank(M({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})) == 2);
}

TEST_CASE("property: nullspace vectors are exact and complete") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dim(1, 7), val(-3, 3), den(1, 4), zero(0, 2);
  for (int n = 0; n < 200; ++n) {
    std::size_t r = dim(rng), c = dim(rng);
    RationalMatrix A(r, c);
    for (auto& row : A.rows)
      for (auto& q : row) q = zero(rng) == 0 ? Rational(0) : Rational(val(rng), den(rng));
    for (auto& q : A.rows) for (auto& x : q) x.canonicalize();
    auto basis = nullspace(A);
    CHECK(basis.size() + rank(A) == c);
    for (const auto& v : basis) {
      RationalVector image = A.multiply(v);
      CHECK(std::all_of(image.begin(), image.end(), [](const Rational& q) { return q == 0; }));
    }
    // a second elimination with permuted columns spans the same kernel
    std::vector<std::size_t> perm(c);
    for (std::size_t j = 0; j < c; ++j) perm[j] = j;
    std::shuffle(perm.begin(), perm.end(), rng);
    RationalMatrix P(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) P.rows[i][j] = A.rows[i][perm[j]];
    std::vector<RationalVector> back;
    for (const auto& w : nullspace(P)) {
      RationalVector v(c);
      for (std::size_t j = 0; j < c; ++j) v[perm[j]] = w[j];
      back.push_back(v);
    }
    CHECK(spans_equal(basis, back));
  }
}

TEST_CASE("unknown enumeration") {
  for (const char* name : {"osp12", "super_e2"}) {
    SuperLieAlgebra A = builtin(name);
    auto u = cobracket_unknowns(A);
    // even generators: 3 even-even pairs + 3 odd symmetric pairs; odd generators: 6 even-odd pairs
    CHECK(u.size() == 3 * 6 + 2 * 6);
    CHECK(std::is_sorted(u.begin(), u.end(), [](const Unknown& x, const Unknown& y) {
      return std::tie(x.i, x.k, x.l) < std::tie(y.i, y.k, y.l);
    }));
    LinearSystem sys = build_cocycle_system(A);
    CHECK(sys.equations.size() == 625);
    CHECK(sys.matrix.cols == 30);
  }
}

TEST_CASE("abelian algebra: every admissible cobracket is a cocycle") {
  SuperLieAlgebra A("abelian", {{"X", Grade::Even}, {"Y", Grade::Even}, {"Q", Grade::Odd}});
  LinearSystem sys = build_cocycle_system(A);
  for (const auto& row : sys.matrix.rows)
    for (const auto& q : row) CHECK(q == 0);
  CHECK(solve_cocycle(A, sys).nullity() == sys.unknowns.size());
  CHECK(coboundary_space(A).empty());
}

TEST_CASE("osp(1|2): cocycles are exactly the coboundaries") {
  SuperLieAlgebra A = builtin("osp12");
  LinearSystem sys = build_cocycle_system(A);
  SolutionFamily F = solve_cocycle(A, sys);
  CHECK(rank(sys.matrix) == 24);
  CHECK(F.nullity() == 6);
  auto cob = coboundary_space(A);
  CHECK(cob.size() == 6);
  std::vector<RationalVector> cv;
  for (const auto& d : cob) cv.push_back(*rational_coordinates(A, sys.unknowns, d));
  CHECK(spans_equal(cv, F.basis));
  for (const auto& v : F.basis) {
    auto r = sys.matrix.multiply(v);
    CHECK(std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; }));
  }
}

TEST_CASE("super-e(2): coboundaries form a proper subspace") {
  SuperLieAlgebra A = builtin("super_e2");
  LinearSystem sys = build_cocycle_system(A);
  SolutionFamily F = solve_cocycle(A, sys);
  CHECK(rank(sys.matrix) == 23);
  CHECK(F.nullity() == 7);
  auto cob = coboundary_space(A);
  CHECK(cob.size() == 5);
  for (const auto& d : cob) CHECK(in_span(F.basis, *rational_coordinates(A, sys.unknowns, d)));
  // delta(H) = P+^P- is a cocycle but no coboundary
  Cobracket i = specialize(family::e2_case("i"), {{"c", 1}});
  std::vector<RationalVector> cv;
  for (const auto& d : cob) cv.push_back(*rational_coordinates(A, sys.unknowns, d));
  CHECK(in_span(F.basis, *rational_coordinates(A, sys.unknowns, i)));
  CHECK_FALSE(in_span(cv, *rational_coordinates(A, sys.unknowns, i)));
}

TEST_CASE("co-Jacobi constraints single out the bialgebras") {
  SuperLieAlgebra A = builtin("super_e2");
  SolutionFamily F = solve_cocycle(A, build_cocycle_system(A));
  auto cons = cojacobi_constraints(A, F);
  CHECK_FALSE(cons.empty());
  SuperScalar a = param("a"), b = param("b"), c = param("c"), d = param("d"), m = param("m");
  for (int branch : {1, -1}) {
    auto p = family_point(A, F, family::e2_case_A(a, b, c, m, branch));
    REQUIRE(p);
    CHECK(satisfies(cons, *p, parameter_relations()));
  }
  auto pc = family_point(A, F, family::e2_case_B(a, b, 0, d));
  REQUIRE(pc);
  CHECK(satisfies(cons, *pc));
  auto bad = family_point(A, F, family::e2_case_B(a, b, 1, 1));
  REQUIRE(bad);
  CHECK_FALSE(satisfies(cons, *bad));
  auto zero = family_point(A, F, Cobracket(5));
  REQUIRE(zero);
  CHECK(satisfies(cons, *zero));
  // the typeset case A is not even a cocycle
  CHECK_FALSE(family_point(A, F, family::e2_case_A_as_printed(a, b, c, m, 1)));
}

TEST_CASE("osp(1|2) coboundary families satisfy the constraints") {
  SuperLieAlgebra A = builtin("osp12");
  SolutionFamily F = solve_cocycle(A, build_cocycle_system(A));
  auto cons = cojacobi_constraints(A, F);
  for (const auto& r : {family::osp_r_a(param("x"), param("y"), param("z")), family::osp_r_b(param("p"), param("q")),
                        family::osp_r3(param("t"))}) {
    auto p = family_point(A, F, coboundary_delta(A, r));
    REQUIRE(p);
    CHECK(satisfies(cons, *p));
  }
  // a coboundary of a non-solution of the modified equation fails
  RMatrix bad(A, wedge(A, 0, 1) + wedge(A, 3, 4));
  auto p = family_point(A, F, coboundary_delta(A, bad));
  REQUIRE(p);
  CHECK_FALSE(satisfies(cons, *p));
}
