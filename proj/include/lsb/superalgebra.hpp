#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lsb/graded_tensor.hpp"
#include "lsb/superscalar.hpp"

namespace lsb {

struct BasisElement {
  std::string name;
  Grade grade = Grade::Even;
};

/// Finite-dimensional Lie superalgebra: graded basis plus dense structure
/// constants c_ij^k with [g_i, g_j] = c_ij^k g_k.
class SuperLieAlgebra {
 public:
  SuperLieAlgebra(std::string name, std::vector<BasisElement> basis);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& basis_name(int i) const { return basis_.at(i).name; }
  int grade(int i) const { return parity_of(basis_.at(i).grade); }
  /// Koszul sign (-1)^{|i||j|}.
  int z(int i, int j) const { return (grade(i) & grade(j)) ? -1 : 1; }
  int index_of(std::string_view name) const;
  bool has(std::string_view name) const;

  const SuperScalar& c(int i, int j, int k) const { return c_[at(i, j, k)]; }

  /// Sets [g_i, g_j] = sum_k value_k g_k and the graded-antisymmetric partner
  /// [g_j, g_i].  Constants must be even scalars.
  void set_bracket(int i, int j, const std::vector<std::pair<int, SuperScalar>>& rhs);
  /// Raw write of a single constant, without touching the partner entry.
  void set_constant(int i, int j, int k, const SuperScalar& value);

  bool operator==(const SuperLieAlgebra& other) const;

 private:
  std::size_t at(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * basis_.size() + j) * basis_.size() + k;
  }

  std::string name_;
  std::vector<BasisElement> basis_;
  std::vector<SuperScalar> c_;
};

struct AxiomViolation {
  std::string axiom;         // e.g. "grading", "antisymmetry", "jacobi"
  std::vector<int> indices;  // offending index tuple
  SuperScalar residual;
};

/// Outcome of checking a family of exact identities; lists every violation.
struct AxiomReport {
  std::vector<std::string> axioms;  // checked axiom names, in report order
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
  bool passes(std::string_view axiom) const;
  std::string summary(const SuperLieAlgebra& algebra) const;
};

using AlgebraReport = AxiomReport;

/// Checks grading, graded antisymmetry and the super-Jacobi identity and
/// lists every violated instance.
AlgebraReport validate(const SuperLieAlgebra& algebra);

/// Super bracket of rank-1 tensors with coefficient Koszul signs:
/// [f x, g y] = (-1)^{|g||x|} f g [x, y].
GradedTensor bracket(const SuperLieAlgebra& algebra, const GradedTensor& x, const GradedTensor& y);

/// "osp12" (basis H X+ X- V+ V-) or "super_e2" (basis H P+ P- D+ D-).
SuperLieAlgebra builtin(std::string_view name);

/// Line-based algebra definition format.
SuperLieAlgebra parse_algebra(std::string_view text);
std::string render_algebra(const SuperLieAlgebra& algebra);

}  // namespace lsb
