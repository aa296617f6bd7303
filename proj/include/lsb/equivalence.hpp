#pragma once

#include <string>
#include <vector>

#include "lsb/bialgebra.hpp"

namespace lsb {

using ScalarMatrix = std::vector<std::vector<SuperScalar>>;

/// Grade-preserving linear map phi(g_b) = sum_k phi[b][k] g_k together with
/// its inverse.  Entries are even scalars; `relations` (e.g. ad - bc = 1)
/// are applied to every computed coefficient.
class Automorphism {
 public:
  Automorphism(const SuperLieAlgebra& A, ScalarMatrix phi, ScalarMatrix inverse, std::vector<Relation> relations = {});

  int dim() const { return static_cast<int>(phi_.size()); }
  const ScalarMatrix& matrix() const { return phi_; }
  const ScalarMatrix& inverse_matrix() const { return inv_; }
  const std::vector<Relation>& relations() const { return relations_; }

  Automorphism inverse() const;
  /// (*this o other)(g) = phi(other(g)).
  Automorphism after(const Automorphism& other) const;

  SuperScalar reduce(const SuperScalar& x) const { return reduce_all(x, relations_); }
  /// Pushes a tensor of rank 1..3 forward: g_a (x) g_b -> phi(g_a) (x) phi(g_b).
  GradedTensor apply(const GradedTensor& t) const;

 private:
  Automorphism() = default;
  ScalarMatrix phi_, inv_;
  std::vector<Relation> relations_;
};

/// Checks block structure, phi * inverse = 1 and [phi g_i, phi g_j] = c_ij^k phi g_k.
AxiomReport check_automorphism(const SuperLieAlgebra& A, const ScalarMatrix& phi, const ScalarMatrix& inverse,
                               std::span<const Relation> relations = {});
AxiomReport check_automorphism(const SuperLieAlgebra& A, const Automorphism& phi);

/// Rows of the map V+ -> a V+ + b V-, V- -> c V+ + d V- on osp(1|2), with the
/// induced action on H, X+, X-.  No determinant check.
ScalarMatrix osp_automorphism_matrix(const SuperScalar& a, const SuperScalar& b, const SuperScalar& c,
                                     const SuperScalar& d);
/// Requires ad - bc = 1: identically, or imposed as a relation with leading
/// monomial ad when the parameters are symbolic.  Throws PreconditionError
/// with the residual otherwise.
Automorphism osp_automorphism(const SuperScalar& a, const SuperScalar& b, const SuperScalar& c, const SuperScalar& d);

/// super-e(2) generators: H -> H + alpha P+ + beta P-; the flip H -> -H,
/// P+- -> P-+, D+- -> D-+; and P+ -> alpha^2 P+, D+ -> alpha D+, P- -> beta^2 P-,
/// D- -> beta D- (alpha, beta invertible).
Automorphism e2_shift(const SuperScalar& alpha, const SuperScalar& beta);
Automorphism e2_flip();
Automorphism e2_scale(const SuperScalar& alpha, const SuperScalar& beta);

Automorphism identity_automorphism(const SuperLieAlgebra& A);

/// Active transport: r -> (phi (x) phi) r and delta -> (phi (x) phi) o delta o phi^-1.
RMatrix transform(const SuperLieAlgebra& A, const Automorphism& phi, const RMatrix& r);
Cobracket transform(const SuperLieAlgebra& A, const Automorphism& phi, const Cobracket& d);

/// Coefficients of x in the new basis g~_b = phi(g_b); equals transform(phi^-1, x).
RMatrix change_basis(const SuperLieAlgebra& A, const Automorphism& phi, const RMatrix& r);
Cobracket change_basis(const SuperLieAlgebra& A, const Automorphism& phi, const Cobracket& d);

/// Searches osp automorphisms with integer a,b,c,d in [-bound, bound], ad - bc = 1,
/// for one carrying `from` to a nonzero rational multiple of `to`.
struct OspWitness {
  int a, b, c, d;
  Rational factor;  // transform(phi, from) = factor * to
};
std::optional<OspWitness> search_osp_witness(const RMatrix& from, const RMatrix& to, int bound = 3);

/// One executable equivalence statement with its frozen witness.
struct OrbitClaim {
  std::string id;
  std::string statement;
  std::string witness;
  bool passed = false;
  std::string detail;
};

/// Congruence law for r_a, r_a -> r2, r_a -> r3(t), r_b -> r1 and the
/// reductions of cases A and B to the families (i)-(vi).
std::vector<OrbitClaim> verify_orbit_claims();

}  // namespace lsb
