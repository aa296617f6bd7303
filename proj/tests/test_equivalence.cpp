#include <doctest.h>

#include <random>

#include "lsb/equivalence.hpp"

using namespace lsb;

namespace {

const SuperLieAlgebra& e2() {
  static const SuperLieAlgebra A = builtin("super_e2");
  return A;
}
const SuperLieAlgebra& osp() {
  static const SuperLieAlgebra A = builtin("osp12");
  return A;
}

RMatrix random_r(const SuperLieAlgebra& A, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  GradedTensor t(2);
  for (int k = 0; k < A.dim(); ++k)
    for (int l = k; l < A.dim(); ++l) {
      if (A.grade(k) != A.grade(l) || (k == l && A.grade(k) == 0)) continue;
      int v = coef(rng);
      if (v) t += SuperScalar(v) * wedge(A, k, l);
    }
  return RMatrix(A, t);
}

// SL(2,Z) element as a product of elementary matrices.
std::array<int, 4> random_sl2(std::mt19937& rng) {
  std::uniform_int_distribution<int> step(-2, 2), pick(0, 1);
  std::array<int, 4> m{1, 0, 0, 1};
  for (int n = 0; n < 3; ++n) {
    int s = step(rng);
    if (pick(rng))
      m = {m[0] + s * m[2], m[1] + s * m[3], m[2], m[3]};
    else
      m = {m[0], m[1], m[2] + s * m[0], m[3] + s * m[1]};
  }
  return m;
}

Automorphism random_e2(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 2), small(-2, 2), nonzero(1, 3);
  switch (kind(rng)) {
    case 0:
      return e2_shift(small(rng), Rational(small(rng), 2));
    case 1:
      return e2_flip();
    default:
      return e2_scale(nonzero(rng), -nonzero(rng));
  }
}

}  // namespace

TEST_CASE("osp automorphisms preserve the brackets exactly when ad - bc = 1") {
  auto a = param("a"), b = param("b"), c = param("c"), d = param("d");
  Automorphism phi = osp_automorphism(a, b, c, d);
  CHECK(check_automorphism(osp(), phi).ok());
  CHECK(check_automorphism(osp(), osp_automorphism(1, 1, 0, 1)).ok());

  Automorphism id = osp_automorphism(1, 0, 0, 1);
  CHECK(id.matrix() == identity_automorphism(osp()).matrix());

  // ad - bc = 2: the exact inverse exists but the brackets are not preserved
  ScalarMatrix m = osp_automorphism_matrix(2, 0, 0, 1), inv = osp_automorphism_matrix(Rational(1, 2), 0, 0, 1);
  AxiomReport rep = check_automorphism(osp(), m, inv);
  CHECK_FALSE(rep.ok());
  for (const auto& v : rep.violations) CHECK(v.axiom == "brackets");
  CHECK_THROWS_AS(osp_automorphism(2, 0, 0, 1), PreconditionError);
  CHECK_THROWS_WITH_AS(osp_automorphism(1, 1, 1, 1), doctest::Contains("-1"), PreconditionError);
}

TEST_CASE("super-e(2) generators preserve the brackets") {
  auto a = param("a"), b = param("b");
  CHECK(check_automorphism(e2(), e2_shift(a, b)).ok());
  CHECK(check_automorphism(e2(), e2_flip()).ok());
  CHECK(check_automorphism(e2(), e2_scale(2, -3)).ok());
  CHECK_THROWS_AS(e2_scale(0, 1), PreconditionError);
  // shift with a bosonic coefficient on a fermion would mix blocks
  ScalarMatrix bad = identity_automorphism(e2()).matrix();
  bad[0][3] = 1;
  CHECK_THROWS_AS(Automorphism(e2(), bad, bad), PreconditionError);
}

TEST_CASE("transform basics") {
  RMatrix r = family::osp_r_a(1, 2, 3);
  CHECK(transform(osp(), identity_automorphism(osp()), r).tensor() == r.tensor());
  Cobracket d = family::e2_case("vi");
  CHECK(transform(e2(), identity_automorphism(e2()), d) == d);
  Automorphism s = e2_scale(2, 3);
  CHECK(change_basis(e2(), s, transform(e2(), s, d)) == d);
}

TEST_CASE("r_a congruence with a unipotent automorphism") {
  // fermion block [[1,0],[1,1]] is M^T for M = [[1,1],[0,1]]:
  // S = [[y,-x],[-x,z]] -> M S M^T = [[y - 2x + z, z - x], [z - x, z]]
  auto x = param("x"), y = param("y"), z = param("z");
  RMatrix image = transform(osp(), osp_automorphism(1, 0, 1, 1), family::osp_r_a(x, y, z));
  CHECK(image.tensor() == family::osp_r_a(x - z, y - 2 * x + z, z).tensor());
}

TEST_CASE("property: transform is functorial") {
  std::mt19937 rng(11);
  for (int n = 0; n < 40; ++n) {
    auto m1 = random_sl2(rng), m2 = random_sl2(rng);
    Automorphism phi = osp_automorphism(m1[0], m1[1], m1[2], m1[3]);
    Automorphism psi = osp_automorphism(m2[0], m2[1], m2[2], m2[3]);
    RMatrix r = random_r(osp(), rng);
    CHECK(transform(osp(), phi.after(psi), r).tensor() == transform(osp(), phi, transform(osp(), psi, r)).tensor());
    Cobracket d = coboundary_delta(osp(), r);
    CHECK(transform(osp(), phi.after(psi), d) == transform(osp(), phi, transform(osp(), psi, d)));
  }
  for (int n = 0; n < 40; ++n) {
    Automorphism phi = random_e2(rng), psi = random_e2(rng);
    Cobracket d = coboundary_delta(e2(), random_r(e2(), rng)) + family::e2_case_A(1, 0, n, 0, 1);
    CHECK(transform(e2(), phi.after(psi), d) == transform(e2(), phi, transform(e2(), psi, d)));
  }
}

TEST_CASE("property: transport commutes with the coboundary map and keeps bialgebras") {
  std::mt19937 rng(5);
  for (int n = 0; n < 25; ++n) {
    auto m = random_sl2(rng);
    Automorphism phi = osp_automorphism(m[0], m[1], m[2], m[3]);
    RMatrix r = random_r(osp(), rng);
    CHECK(transform(osp(), phi, coboundary_delta(osp(), r)) == coboundary_delta(osp(), transform(osp(), phi, r)));
    CHECK(cybe_status(osp(), r) == cybe_status(osp(), transform(osp(), phi, r)));
  }
  for (const char* roman : {"i", "ii", "iii", "iv", "v", "vi"}) {
    Automorphism phi = e2_shift(1, 2).after(e2_scale(2, 3)).after(e2_flip());
    CHECK(check_cobracket(e2(), transform(e2(), phi, family::e2_case(roman))).ok());
  }
}

TEST_CASE("symbolic shift normalizes case B") {
  auto a = param("a"), b = param("b");
  Cobracket image = transform(e2(), e2_shift(Rational(1, 2) * a, Rational(1, 2) * b), family::e2_case_B(a, b, 0, 1));
  CHECK(image == family::e2_case_B(0, 0, 0, 1));
}

TEST_CASE("frozen witness search results") {
  auto w = search_osp_witness(family::osp_r_b(1, 1), family::osp_r1(), 3);
  REQUIRE(w);
  CHECK(std::array<int, 4>{w->a, w->b, w->c, w->d} == std::array<int, 4>{-3, -1, -2, -1});
  CHECK(w->factor == 1);
  w = search_osp_witness(family::osp_r_a(1, 2, 1), family::osp_r3(1), 3);
  REQUIRE(w);
  CHECK(std::array<int, 4>{w->a, w->b, w->c, w->d} == std::array<int, 4>{-1, 0, -1, -1});
  // x^2 - yz = 1 > 0 would need imaginary t
  CHECK_FALSE(search_osp_witness(family::osp_r_a(1, 0, 0), family::osp_r3(1), 2));
}

TEST_CASE("orbit claims all pass") {
  auto claims = verify_orbit_claims();
  CHECK(claims.size() == 25);
  for (const auto& c : claims) {
    INFO(c.id << ": " << c.detail);
    CHECK(c.passed);
    CHECK_FALSE(c.witness.empty());
  }
}
