#pragma once

#include <string>
#include <string_view>

#include "lsb/graded_tensor.hpp"
#include "lsb/superalgebra.hpp"

namespace lsb {

/// x^y := x(x)y - z(x,y) y(x)x (no 1/2).  For two odd elements this is the
/// symmetrization x(x)y + y(x)x, so V+^V+ = 2 V+(x)V+.
GradedTensor wedge(const SuperLieAlgebra& A, int x, int y);

/// Tensor product with Koszul signs for the right factor's coefficients.
GradedTensor tensor(const SuperLieAlgebra& A, const GradedTensor& x, const GradedTensor& y);

/// [g(x)1 + 1(x)g, t] for rank 2 and the three-slot analogue for rank 3.
GradedTensor ad_action(const SuperLieAlgebra& A, int g, const GradedTensor& t);

/// Even, graded-antisymmetric element of (G_B ^ G_B) + (G_F ^ G_F).
class RMatrix {
 public:
  RMatrix(const SuperLieAlgebra& A, GradedTensor r);
  static RMatrix zero() { return RMatrix(); }

  const GradedTensor& tensor() const { return r_; }
  bool is_zero() const { return r_.is_zero(); }

 private:
  RMatrix() : r_(2) {}
  GradedTensor r_;
};

/// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23].
GradedTensor schouten(const SuperLieAlgebra& A, const RMatrix& r);

/// Supercommutator of two rank-2 tensors embedded into three slots; slot
/// pairs are 0-based, e.g. {0,1} for r12.  Exactly one slot may be shared.
/// Coefficients must be even.
GradedTensor embedded_commutator(const SuperLieAlgebra& A, const GradedTensor& x, std::array<int, 2> x_slots,
                                 const GradedTensor& y, std::array<int, 2> y_slots);

/// Parses "r = 1 H^P+ - 1 V+^V+" (coefficients are scalar literals over `ring`).
GradedTensor parse_wedge_sum(const SuperLieAlgebra& A, const Ring& ring, std::string_view text);
RMatrix parse_rmatrix(const SuperLieAlgebra& A, const Ring& ring, std::string_view text);

/// Renders a tensor as "coeff*X(x)Y" terms.
std::string render_tensor(const SuperLieAlgebra& A, const GradedTensor& t);
/// Renders a graded-antisymmetric rank-2 tensor as a wedge sum "c X^Y + ...".
std::string render_wedge(const SuperLieAlgebra& A, const GradedTensor& t);

}  // namespace lsb
