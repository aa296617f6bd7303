#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lsb/bialgebra.hpp"
#include "lsb/linalg.hpp"

namespace lsb {

/// The unknown f_i^{kl} with k < l, or k = l for two odd indices.  Its
/// antisymmetric partner f_i^{lk} = -z(k,l) f_i^{kl} is implied.
struct Unknown {
  int i, k, l;
  bool operator==(const Unknown&) const = default;
};

/// Grading-admissible unknowns in lexicographic (i,k,l) order.
std::vector<Unknown> cobracket_unknowns(const SuperLieAlgebra& A);

/// Linear cocycle conditions, one row per index tuple (i,j,l,m).
struct LinearSystem {
  std::vector<Unknown> unknowns;
  std::vector<std::array<int, 4>> equations;
  RationalMatrix matrix;
};

/// Requires rational structure constants.
LinearSystem build_cocycle_system(const SuperLieAlgebra& A);

Cobracket cobracket_from_coordinates(const SuperLieAlgebra& A, const std::vector<Unknown>& unknowns,
                                     const std::vector<SuperScalar>& coords);
Cobracket cobracket_from_coordinates(const SuperLieAlgebra& A, const std::vector<Unknown>& unknowns,
                                     const RationalVector& coords);
/// Coordinates of d, or nullopt when d is not graded antisymmetric or uses
/// entries outside the admissible unknowns.
std::optional<std::vector<SuperScalar>> coordinates(const SuperLieAlgebra& A, const std::vector<Unknown>& unknowns,
                                                    const Cobracket& d);
/// Same, for rational cobrackets.
std::optional<RationalVector> rational_coordinates(const SuperLieAlgebra& A, const std::vector<Unknown>& unknowns,
                                                   const Cobracket& d);

/// General solution of the cocycle system: sum_r t_r * basis_r.
struct SolutionFamily {
  std::vector<Unknown> unknowns;
  std::vector<RationalVector> basis;
  std::vector<Cobracket> cobrackets;
  Ring ring;  // parameters t1 .. tr
  Cobracket general;
  std::size_t nullity() const { return basis.size(); }
};

SolutionFamily solve_cocycle(const SuperLieAlgebra& A, const LinearSystem& system);

/// Maximal independent subset of the coboundaries of the basis r-matrices
/// (even-even wedges k<l and odd-odd wedges k<=l).
std::vector<Cobracket> coboundary_space(const SuperLieAlgebra& A);

/// Distinct nonzero co-Jacobi polynomials in t1..tr, each scaled to leading coefficient 1.
std::vector<SuperScalar> cojacobi_constraints(const SuperLieAlgebra& A, const SolutionFamily& F);

/// Values of t1..tr (in d's coefficient ring) with general(t) = d, or nullopt
/// when d is not a cocycle.
std::optional<Bindings> family_point(const SuperLieAlgebra& A, const SolutionFamily& F, const Cobracket& d);

/// Whether every constraint vanishes at `point`, modulo `relations`.
bool satisfies(const std::vector<SuperScalar>& constraints, const Bindings& point,
               std::span<const Relation> relations = {});

}  // namespace lsb
