#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsb/cotensor.hpp"

namespace lsb {

/// delta(g_i) = f_i^{kl} g_k (x) g_l, stored densely.
class Cobracket {
 public:
  explicit Cobracket(int dim = 0);
  /// Rows are the rank-2 tensors delta(g_0), ..., delta(g_{n-1}).
  static Cobracket from_rows(const std::vector<GradedTensor>& rows);

  int dim() const { return dim_; }
  const SuperScalar& f(int i, int k, int l) const { return f_[at(i, k, l)]; }
  void set(int i, int k, int l, const SuperScalar& value) { f_[at(i, k, l)] = value; }
  GradedTensor row(int i) const;
  bool is_zero() const;

  Cobracket map(const std::function<SuperScalar(const SuperScalar&)>& fn) const;
  Cobracket& operator+=(const Cobracket& other);
  friend Cobracket operator+(Cobracket x, const Cobracket& y) { return x += y; }
  friend Cobracket operator*(const SuperScalar& s, const Cobracket& d);
  bool operator==(const Cobracket& other) const;
  bool operator!=(const Cobracket& other) const { return !(*this == other); }

 private:
  std::size_t at(int i, int k, int l) const {
    return (static_cast<std::size_t>(i) * dim_ + k) * dim_ + l;
  }
  int dim_;
  std::vector<SuperScalar> f_;
};

/// Grading, graded antisymmetry, co-Jacobi and the cocycle condition
/// c_ij^k f_k^lm = f_i^lk c_kj^m + c_kj^l f_i^km z(m,j) + c_ik^l f_j^km + f_j^lk c_ik^m z(i,l).
/// Residuals are reduced modulo `relations` before the zero test.
AxiomReport check_cobracket(const SuperLieAlgebra& A, const Cobracket& d, std::span<const Relation> relations = {});

/// Left-hand side of co-Jacobi at (i; k,l,m) and lhs - rhs of the cocycle
/// condition at (i,j; l,m), unreduced.
SuperScalar cojacobi_residual(const SuperLieAlgebra& A, const Cobracket& d, int i, int k, int l, int m);
SuperScalar cocycle_residual(const SuperLieAlgebra& A, const Cobracket& d, int i, int j, int l, int m);

/// The Lie superalgebra on the dual space: c*_{kl}^i = f_i^{kl}.  Basis names get a trailing '*'.
SuperLieAlgebra dual_algebra(const SuperLieAlgebra& A, const Cobracket& d);

/// delta(g) = [g(x)1 + 1(x)g, r].
Cobracket coboundary_delta(const SuperLieAlgebra& A, const RMatrix& r);

enum class CybeStatus { Cybe, ModifiedOnly, Neither };
std::string to_string(CybeStatus s);

/// Zero Schouten bracket: Cybe; ad-invariant nonzero bracket: ModifiedOnly.
CybeStatus cybe_status(const SuperLieAlgebra& A, const RMatrix& r, std::span<const Relation> relations = {});

/// Cobracket file rows, e.g. "delta H = 1 P+^P-"; generators without a row map to 0.
Cobracket parse_cobracket(const SuperLieAlgebra& A, const Ring& ring, std::string_view text);
std::string render_cobracket(const SuperLieAlgebra& A, const Cobracket& d);

// ---------------------------------------------------------------------------
// Named structures.  Coefficients live in a shared parameter ring with
// commuting parameters a b c d f m p q t u v x y z.  Square roots are
// replaced by parameters: sqrt(ab) = m with m^2 = ab, and in r_b
// u = p^2, v = q^2, sqrt(uv) = p q (the sign branch is the sign of q).

Ring parameter_ring();
/// { m^2 - a b } with leading monomial m^2.
std::span<const Relation> parameter_relations();
SuperScalar param(std::string_view name);

/// Substitutes `values` (e.g. {"a", 1}) into every coefficient.
Cobracket specialize(const Cobracket& d, const Bindings& values);
RMatrix specialize(const SuperLieAlgebra& A, const RMatrix& r, const Bindings& values);

namespace family {

// osp(1|2)
RMatrix osp_r_a(const SuperScalar& x, const SuperScalar& y, const SuperScalar& z);
RMatrix osp_r_b(const SuperScalar& p, const SuperScalar& q);
RMatrix osp_r1();
RMatrix osp_r2();
RMatrix osp_r3(const SuperScalar& t);

// super-e(2); `branch` is +1 or -1 for the sign in front of sqrt(ab)
Cobracket e2_case_A(const SuperScalar& a, const SuperScalar& b, const SuperScalar& c, const SuperScalar& m,
                    int branch);
/// Case A exactly as typeset, with +1/2 in the delta(D-) row.
Cobracket e2_case_A_as_printed(const SuperScalar& a, const SuperScalar& b, const SuperScalar& c,
                               const SuperScalar& m, int branch);
Cobracket e2_case_B(const SuperScalar& a, const SuperScalar& b, const SuperScalar& c, const SuperScalar& d);
/// Families (i)..(vi) with the remaining free parameter (c, or d for (iv)) left symbolic.
Cobracket e2_case(std::string_view roman);

RMatrix e2_r_A(const SuperScalar& a, const SuperScalar& b, const SuperScalar& f, const SuperScalar& m, int branch);
RMatrix e2_r_B(const SuperScalar& a, const SuperScalar& b, const SuperScalar& f);
/// r_(ii), r_(iii), r_(v), r_(vi)
RMatrix e2_r(std::string_view roman);

}  // namespace family

/// Looks up a family by CLI id (e.g. "e2-case-A", "osp-r3") with parameter
/// values "a=1,b=0"; unspecified parameters stay symbolic.  Exactly one of
/// the two results is set.
struct FamilyValue {
  std::string algebra;  // "osp12" or "super_e2"
  std::optional<RMatrix> r;
  std::optional<Cobracket> delta;
  /// m^2 = ab after substituting the given values (empty when m drops out).
  std::vector<Relation> relations;
};
FamilyValue lookup_family(std::string_view id, const Bindings& params);
std::vector<std::string> family_ids();

}  // namespace lsb
