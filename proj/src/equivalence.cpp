#include "lsb/equivalence.hpp"

#include <array>
#include <sstream>

namespace lsb {
namespace {

ScalarMatrix multiply(const ScalarMatrix& x, const ScalarMatrix& y, std::span<const Relation> relations) {
  const std::size_t n = x.size();
  ScalarMatrix out(n, std::vector<SuperScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!y[k][j].is_zero()) out[i][j] += x[i][k] * y[k][j];
    }
  for (auto& row : out)
    for (auto& v : row) v = reduce_all(v, relations);
  return out;
}

const SuperLieAlgebra& osp() {
  static const SuperLieAlgebra A = builtin("osp12");
  return A;
}
const SuperLieAlgebra& e2() {
  static const SuperLieAlgebra A = builtin("super_e2");
  return A;
}

ScalarMatrix identity_matrix(int n) {
  ScalarMatrix m(n, std::vector<SuperScalar>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

Automorphism::Automorphism(const SuperLieAlgebra& A, ScalarMatrix phi, ScalarMatrix inverse,
                           std::vector<Relation> relations)
    : phi_(std::move(phi)), inv_(std::move(inverse)), relations_(std::move(relations)) {
  const std::size_t n = A.dim();
  if (phi_.size() != n || inv_.size() != n) throw PreconditionError("automorphism matrix has the wrong size");
  for (std::size_t b = 0; b < n; ++b) {
    if (phi_[b].size() != n || inv_[b].size() != n) throw PreconditionError("automorphism matrix is not square");
    for (std::size_t k = 0; k < n; ++k)
      for (const ScalarMatrix* m : {&phi_, &inv_}) {
        const SuperScalar& v = (*m)[b][k];
        if (v.is_zero()) continue;
        if (v.parity().value_or(1) != 0) throw ParityError("automorphism entries must be even");
        if (A.grade(b) != A.grade(k)) throw PreconditionError("automorphisms cannot mix even and odd elements");
      }
  }
  ScalarMatrix prod = multiply(phi_, inv_, relations_);
  if (prod != identity_matrix(n)) throw PreconditionError("matrix and inverse do not multiply to the identity");
}

Automorphism Automorphism::inverse() const {
  Automorphism out;
  out.phi_ = inv_;
  out.inv_ = phi_;
  out.relations_ = relations_;
  return out;
}

Automorphism Automorphism::after(const Automorphism& other) const {
  Automorphism out;
  out.relations_ = relations_;
  for (const auto& r : other.relations_) out.relations_.push_back(r);
  out.phi_ = multiply(other.phi_, phi_, out.relations_);
  out.inv_ = multiply(inv_, other.inv_, out.relations_);
  return out;
}

GradedTensor Automorphism::apply(const GradedTensor& t) const {
  GradedTensor out(t.rank());
  const int n = dim();
  for (const auto& [key, c] : t.coefficients()) {
    // expand slot by slot
    std::vector<std::pair<GradedTensor::Key, SuperScalar>> partial{{{-1, -1, -1}, c}};
    for (int s = 0; s < t.rank(); ++s) {
      std::vector<std::pair<GradedTensor::Key, SuperScalar>> next;
      for (const auto& [k, v] : partial)
        for (int l = 0; l < n; ++l) {
          const SuperScalar& e = phi_[key[s]][l];
          if (e.is_zero()) continue;
          GradedTensor::Key nk = k;
          nk[s] = l;
          next.emplace_back(nk, v * e);
        }
      partial = std::move(next);
    }
    for (const auto& [k, v] : partial) out.add(k, v);
  }
  return out.map([&](const SuperScalar& x) { return reduce(x); });
}

AxiomReport check_automorphism(const SuperLieAlgebra& A, const ScalarMatrix& phi, const ScalarMatrix& inverse,
                               std::span<const Relation> relations) {
  AxiomReport report;
  report.axioms = {"grading", "inverse", "brackets"};
  const int n = A.dim();
  for (int b = 0; b < n; ++b)
    for (int k = 0; k < n; ++k)
      if (A.grade(b) != A.grade(k) && !phi[b][k].is_zero()) report.violations.push_back({"grading", {b, k}, phi[b][k]});
  ScalarMatrix prod = multiply(phi, inverse, relations);
  for (int b = 0; b < n; ++b)
    for (int k = 0; k < n; ++k) {
      SuperScalar r = prod[b][k] - (b == k ? 1 : 0);
      if (!r.is_zero()) report.violations.push_back({"inverse", {b, k}, r});
    }
  auto image = [&](int b) {
    GradedTensor t(1);
    for (int k = 0; k < n; ++k) t.add({k, -1, -1}, phi[b][k]);
    return t;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GradedTensor lhs = bracket(A, image(i), image(j));
      for (int k = 0; k < n; ++k)
        if (!A.c(i, j, k).is_zero()) lhs -= A.c(i, j, k) * image(k);
      for (const auto& [key, v] : lhs.coefficients()) {
        SuperScalar r = reduce_all(v, relations);
        if (!r.is_zero()) report.violations.push_back({"brackets", {i, j, key[0]}, r});
      }
    }
  return report;
}

AxiomReport check_automorphism(const SuperLieAlgebra& A, const Automorphism& phi) {
  return check_automorphism(A, phi.matrix(), phi.inverse_matrix(), phi.relations());
}

ScalarMatrix osp_automorphism_matrix(const SuperScalar& a, const SuperScalar& b, const SuperScalar& c,
                                     const SuperScalar& d) {
  ScalarMatrix m(5, std::vector<SuperScalar>(5));
  m[0] = {a * d + b * c, -(a * c), b * d, 0, 0};
  m[1] = {-2 * (a * b), a * a, -(b * b), 0, 0};
  m[2] = {2 * (c * d), -(c * c), d * d, 0, 0};
  m[3] = {0, 0, 0, a, b};
  m[4] = {0, 0, 0, c, d};
  return m;
}

Automorphism osp_automorphism(const SuperScalar& a, const SuperScalar& b, const SuperScalar& c, const SuperScalar& d) {
  SuperScalar det1 = a * d - b * c - 1;
  std::vector<Relation> rels;
  if (!det1.is_zero()) {
    if (det1.is_constant())
      throw PreconditionError("osp automorphism needs ad - bc = 1; ad - bc - 1 = " + det1.str());
    SuperScalar ad = a * d;
    if (ad.size() != 1 || ad.terms().begin()->second != 1)
      throw PreconditionError("cannot impose ad - bc = 1 for these parameters: ad - bc - 1 = " + det1.str());
    try {
      rels.emplace_back(det1, monomial_of(ad));
    } catch (const Error& e) {
      throw PreconditionError(std::string("cannot impose ad - bc = 1: ") + e.what());
    }
  }
  return Automorphism(osp(), osp_automorphism_matrix(a, b, c, d), osp_automorphism_matrix(d, -b, -c, a), rels);
}

Automorphism e2_shift(const SuperScalar& alpha, const SuperScalar& beta) {
  ScalarMatrix m = identity_matrix(5), inv = identity_matrix(5);
  m[0] = {1, alpha, beta, 0, 0};
  inv[0] = {1, -alpha, -beta, 0, 0};
  return Automorphism(e2(), m, inv);
}

Automorphism e2_flip() {
  ScalarMatrix m(5, std::vector<SuperScalar>(5));
  m[0][0] = -1;
  m[1][2] = 1;
  m[2][1] = 1;
  m[3][4] = 1;
  m[4][3] = 1;
  return Automorphism(e2(), m, m);
}

Automorphism e2_scale(const SuperScalar& alpha, const SuperScalar& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw PreconditionError("scale parameters must be nonzero");
  SuperScalar ia = pow(alpha, -1), ib = pow(beta, -1);
  ScalarMatrix m = identity_matrix(5), inv = identity_matrix(5);
  m[1][1] = alpha * alpha;
  m[3][3] = alpha;
  m[2][2] = beta * beta;
  m[4][4] = beta;
  inv[1][1] = ia * ia;
  inv[3][3] = ia;
  inv[2][2] = ib * ib;
  inv[4][4] = ib;
  return Automorphism(e2(), m, inv);
}

Automorphism identity_automorphism(const SuperLieAlgebra& A) {
  return Automorphism(A, identity_matrix(A.dim()), identity_matrix(A.dim()));
}

RMatrix transform(const SuperLieAlgebra& A, const Automorphism& phi, const RMatrix& r) {
  return RMatrix(A, phi.apply(r.tensor()));
}

Cobracket transform(const SuperLieAlgebra& A, const Automorphism& phi, const Cobracket& d) {
  if (d.dim() != A.dim() || phi.dim() != A.dim()) throw PreconditionError("dimension mismatch in transform");
  std::vector<GradedTensor> pushed;
  for (int b = 0; b < A.dim(); ++b) pushed.push_back(phi.apply(d.row(b)));
  std::vector<GradedTensor> rows;
  for (int i = 0; i < A.dim(); ++i) {
    GradedTensor row(2);
    for (int b = 0; b < A.dim(); ++b)
      if (!phi.inverse_matrix()[i][b].is_zero()) row += phi.inverse_matrix()[i][b] * pushed[b];
    rows.push_back(row.map([&](const SuperScalar& x) { return phi.reduce(x); }));
  }
  return Cobracket::from_rows(rows);
}

RMatrix change_basis(const SuperLieAlgebra& A, const Automorphism& phi, const RMatrix& r) {
  return transform(A, phi.inverse(), r);
}

Cobracket change_basis(const SuperLieAlgebra& A, const Automorphism& phi, const Cobracket& d) {
  return transform(A, phi.inverse(), d);
}

std::optional<OspWitness> search_osp_witness(const RMatrix& from, const RMatrix& to, int bound) {
  // pick a reference coefficient of `to`
  if (to.is_zero()) return std::nullopt;
  const auto& [ref_key, ref_val] = *to.tensor().coefficients().begin();
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          if (a * d - b * c != 1) continue;
          GradedTensor image = transform(osp(), osp_automorphism(a, b, c, d), from).tensor();
          SuperScalar v = image.coefficient(ref_key[0], ref_key[1]);
          if (v.is_zero() || !v.is_constant() || !ref_val.is_constant()) continue;
          Rational factor = v.constant_term() / ref_val.constant_term();
          if (image == SuperScalar(factor) * to.tensor()) return OspWitness{a, b, c, d, factor};
        }
  return std::nullopt;
}

namespace {

std::string witness_text(const OspWitness& w) {
  std::ostringstream os;
  os << "a,b,c,d = " << w.a << "," << w.b << "," << w.c << "," << w.d;
  if (w.factor != 1) os << ", factor " << w.factor;
  return os.str();
}

// transform(phi, from) == factor * to, with the CYBE class preserved.
OrbitClaim osp_witness_claim(std::string id, std::string statement, const RMatrix& from, const RMatrix& to,
                             const OspWitness& w) {
  OrbitClaim claim{std::move(id), std::move(statement), witness_text(w), false, {}};
  RMatrix image = transform(osp(), osp_automorphism(w.a, w.b, w.c, w.d), from);
  GradedTensor diff = image.tensor() - SuperScalar(w.factor) * to.tensor();
  CybeStatus s_from = cybe_status(osp(), from), s_to = cybe_status(osp(), to);
  claim.passed = diff.is_zero() && s_from == s_to;
  if (!diff.is_zero())
    claim.detail = "image - target = " + render_wedge(osp(), diff);
  else if (s_from != s_to)
    claim.detail = "class changed: " + to_string(s_from) + " vs " + to_string(s_to);
  else
    claim.detail = "class " + to_string(s_from);
  return claim;
}

OrbitClaim e2_claim(std::string id, std::string statement, std::string witness, const Cobracket& image,
                    const Cobracket& target) {
  OrbitClaim claim{std::move(id), std::move(statement), std::move(witness), false, {}};
  claim.passed = image == target;
  claim.detail = claim.passed ? "exact match" : "image:\n" + render_cobracket(e2(), image);
  return claim;
}

OrbitClaim congruence_claim() {
  // r_a(x,y,z) <-> S = [[y,-x],[-x,z]]; the map with fermion block
  // [[a,c],[b,d]] sends S to M S M^T with M = [[a,b],[c,d]].
  OrbitClaim claim{"osp-ra-congruence", "r_a transforms by S -> M S M^T, M in SL(2)",
                   "osp_automorphism(a,c,b,d), symbolic, ad - bc = 1", false, {}};
  SuperScalar a = param("a"), b = param("b"), c = param("c"), d = param("d");
  SuperScalar x = param("x"), y = param("y"), z = param("z");
  Automorphism phi = osp_automorphism(a, c, b, d);
  SuperScalar s00 = y, s01 = -x, s11 = z;
  SuperScalar n00 = a * a * s00 + 2 * (a * b * s01) + b * b * s11;
  SuperScalar n01 = a * c * s00 + (a * d + b * c) * s01 + b * d * s11;
  SuperScalar n11 = c * c * s00 + 2 * (c * d * s01) + d * d * s11;
  GradedTensor diff = transform(osp(), phi, family::osp_r_a(x, y, z)).tensor() -
                      family::osp_r_a(-n01, n00, n11).tensor();
  diff = diff.map([&](const SuperScalar& v) { return phi.reduce(v); });
  claim.passed = diff.is_zero();
  claim.detail = claim.passed ? "identity holds modulo ad - bc = 1" : "residual " + render_wedge(osp(), diff);
  return claim;
}

}  // namespace

std::vector<OrbitClaim> verify_orbit_claims() {
  std::vector<OrbitClaim> out;
  out.push_back(congruence_claim());

  struct OspCase {
    const char* id;
    std::array<int, 3> xyz;
    OspWitness w;
  };
  for (const OspCase& k : {OspCase{"osp-ra-r2-1", {-2, 1, 4}, {-3, -2, 2, 1, 1}},
                           OspCase{"osp-ra-r2-2", {1, 1, 1}, {-3, -1, -2, -1, 1}},
                           OspCase{"osp-ra-r2-3", {2, 1, 4}, {-3, -2, -1, -1, 1}}}) {
    std::ostringstream st;
    st << "r_a(" << k.xyz[0] << "," << k.xyz[1] << "," << k.xyz[2] << ") ~ r2";
    out.push_back(osp_witness_claim(k.id, st.str(), family::osp_r_a(k.xyz[0], k.xyz[1], k.xyz[2]),
                                    family::osp_r2(), k.w));
  }
  struct R3Case {
    const char* id;
    std::array<int, 3> xyz;
    int t;
    OspWitness w;
  };
  for (const R3Case& k : {R3Case{"osp-ra-r3-1", {1, 2, 1}, 1, {-1, 0, -1, -1, 1}},
                          R3Case{"osp-ra-r3-2", {0, 1, 1}, 1, {-1, 0, 0, -1, 1}},
                          R3Case{"osp-ra-r3-3", {2, 5, 1}, 1, {-1, 0, -2, -1, 1}},
                          R3Case{"osp-ra-r3-4", {2, 4, 2}, 2, {-1, 0, -1, -1, 1}},
                          R3Case{"osp-ra-r3-5", {-1, -2, -1}, -1, {-1, 0, -1, -1, 1}}}) {
    std::ostringstream st;
    st << "r_a(" << k.xyz[0] << "," << k.xyz[1] << "," << k.xyz[2] << ") ~ r3(" << k.t << ")";
    out.push_back(osp_witness_claim(k.id, st.str(), family::osp_r_a(k.xyz[0], k.xyz[1], k.xyz[2]),
                                    family::osp_r3(k.t), k.w));
  }
  struct R1Case {
    const char* id;
    int p, q;
    OspWitness w;
  };
  for (const R1Case& k : {R1Case{"osp-rb-r1-1", 1, 1, {-3, -1, -2, -1, 1}},
                          R1Case{"osp-rb-r1-2", 1, -1, {-3, 1, 2, -1, 1}},
                          R1Case{"osp-rb-r1-3", 1, 2, {-3, -2, -1, -1, 1}},
                          R1Case{"osp-rb-r1-4", 2, 1, {-2, -1, -3, -2, 1}},
                          R1Case{"osp-rb-r1-5", 0, 1, {-3, -1, 1, 0, 1}},
                          R1Case{"osp-rb-r1-6", 2, 3, {-2, -3, -1, -2, 1}}}) {
    std::ostringstream st;
    st << "r_b with sqrt(u)=" << k.p << ", sqrt(v)=" << k.q << " ~ r1";
    out.push_back(osp_witness_claim(k.id, st.str(), family::osp_r_b(k.p, k.q), family::osp_r1(), k.w));
  }

  SuperScalar a = param("a"), b = param("b"), c = param("c");
  out.push_back(e2_claim("e2-B-shift", "case B(a,b,0,1) ~ (iv) at d = 1", "transform by H -> H + a/2 P+ + b/2 P-",
                         transform(e2(), e2_shift(Rational(1, 2) * a, Rational(1, 2) * b), family::e2_case_B(a, b, 0, 1)),
                         family::e2_case_B(0, 0, 0, 1)));
  out.push_back(e2_claim("e2-B-shift-d2", "case B(2,4,0,2) ~ (iv) at d = 2", "transform by H -> H + 1/2 P+ + P-",
                         transform(e2(), e2_shift(Rational(1, 2), 1), family::e2_case_B(2, 4, 0, 2)),
                         family::e2_case_B(0, 0, 0, 2)));
  out.push_back(e2_claim("e2-B-zero", "case B(0,0,c,0) = (i)", "identity", family::e2_case_B(0, 0, c, 0),
                         family::e2_case_A(0, 0, c, 0, 1)));
  out.push_back(e2_claim("e2-A-scale-ii", "case A(4,0,c) ~ (ii) with c/4", "basis P+ -> 4 P+, D+ -> 2 D+",
                         change_basis(e2(), e2_scale(2, 1), family::e2_case_A(4, 0, c, 0, 1)),
                         family::e2_case_A(1, 0, Rational(1, 4) * c, 0, 1)));
  out.push_back(e2_claim("e2-A-flip-ii", "case A(0,4,c) ~ (ii) with c/4", "basis flip, then P+ -> 4 P+, D+ -> 2 D+",
                         change_basis(e2(), e2_flip().after(e2_scale(2, 1)), family::e2_case_A(0, 4, c, 0, 1)),
                         family::e2_case_A(1, 0, Rational(1, 4) * c, 0, 1)));
  out.push_back(e2_claim("e2-A-scale-iii", "case A(4,9,c), sqrt(ab) = 6 ~ (iii) with c/36",
                         "basis P+ -> 4 P+, P- -> 9 P-, D+ -> 2 D+, D- -> 3 D-",
                         change_basis(e2(), e2_scale(2, 3), family::e2_case_A(4, 9, c, 6, 1)),
                         family::e2_case_A(1, 1, Rational(1, 36) * c, 1, 1)));
  out.push_back(e2_claim("e2-A-branch", "case A(1,1,c) on the minus branch ~ (iii)", "basis D- -> -D-",
                         change_basis(e2(), e2_scale(1, -1), family::e2_case_A(1, 1, c, 1, -1)),
                         family::e2_case_A(1, 1, c, 1, 1)));
  out.push_back(e2_claim("e2-B-scale-v", "case B(4,0,c,0) ~ (v) with c/4", "basis P+ -> 4 P+, D+ -> 2 D+",
                         change_basis(e2(), e2_scale(2, 1), family::e2_case_B(4, 0, c, 0)),
                         family::e2_case_B(1, 0, Rational(1, 4) * c, 0)));
  out.push_back(e2_claim("e2-B-flip-v", "case B(0,1,c,0) ~ (v)", "basis flip",
                         change_basis(e2(), e2_flip(), family::e2_case_B(0, 1, c, 0)), family::e2_case_B(1, 0, c, 0)));
  out.push_back(e2_claim("e2-B-scale-vi", "case B(4,9,c,0) ~ (vi) with c/36",
                         "basis P+ -> 4 P+, P- -> 9 P-, D+ -> 2 D+, D- -> 3 D-",
                         change_basis(e2(), e2_scale(2, 3), family::e2_case_B(4, 9, c, 0)),
                         family::e2_case_B(1, 1, Rational(1, 36) * c, 0)));
  return out;
}

}  // namespace lsb
