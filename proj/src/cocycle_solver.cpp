#include "lsb/cocycle_solver.hpp"

#include <algorithm>

namespace lsb {

std::vector<Unknown> cobracket_unknowns(const SuperLieAlgebra& A) {
  std::vector<Unknown> out;
  for (int i = 0; i < A.dim(); ++i)
    for (int k = 0; k < A.dim(); ++k)
      for (int l = k; l < A.dim(); ++l) {
        if (((A.grade(k) + A.grade(l)) & 1) != A.grade(i)) continue;
        if (k == l && A.grade(k) == 0) continue;
        out.push_back({i, k, l});
      }
  return out;
}

Cobracket cobracket_from_coordinates(const SuperLieAlgebra& A, const std::vector<Unknown>& unknowns,
                                     const std::vector<SuperScalar>& coords) {
  if (coords.size() != unknowns.size()) throw PreconditionError("coordinate count mismatch");
  Cobracket d(A.dim());
  for (std::size_t n = 0; n < unknowns.size(); ++n) {
    const auto& [i, k, l] = unknowns[n];
    d.set(i, k, l, d.f(i, k, l) + coords[n]);
    if (k != l) d.set(i, l, k, d.f(i, l, k) - A.z(k, l) * coords[n]);
  }
  return d;
}

Cobracket cobracket_from_coordinates(const SuperLieAlgebra& A, const std::vector<Unknown>& unknowns,
                                     const RationalVector& coords) {
  std::vector<SuperScalar> c(coords.begin(), coords.end());
  return cobracket_from_coordinates(A, unknowns, c);
}

std::optional<std::vector<SuperScalar>> coordinates(const SuperLieAlgebra& A, const std::vector<Unknown>& unknowns,
                                                    const Cobracket& d) {
  if (d.dim() != A.dim()) return std::nullopt;
  std::vector<SuperScalar> out;
  for (const auto& u : unknowns) out.push_back(d.f(u.i, u.k, u.l));
  if (cobracket_from_coordinates(A, unknowns, out) != d) return std::nullopt;
  return out;
}

std::optional<RationalVector> rational_coordinates(const SuperLieAlgebra& A, const std::vector<Unknown>& unknowns,
                                                   const Cobracket& d) {
  auto c = coordinates(A, unknowns, d);
  if (!c) return std::nullopt;
  RationalVector out;
  for (const auto& x : *c) {
    if (!x.is_constant()) return std::nullopt;
    out.push_back(x.constant_term());
  }
  return out;
}

LinearSystem build_cocycle_system(const SuperLieAlgebra& A) {
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j)
      for (int k = 0; k < A.dim(); ++k)
        if (!A.c(i, j, k).is_constant()) throw PreconditionError("the cocycle system needs rational structure constants");
  LinearSystem sys;
  sys.unknowns = cobracket_unknowns(A);
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) sys.equations.push_back({i, j, l, m});
  sys.matrix = RationalMatrix(sys.equations.size(), sys.unknowns.size());
  for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
    RationalVector e(sys.unknowns.size());
    e[u] = 1;
    Cobracket unit = cobracket_from_coordinates(A, sys.unknowns, e);
    for (std::size_t row = 0; row < sys.equations.size(); ++row) {
      const auto& [i, j, l, m] = sys.equations[row];
      sys.matrix.rows[row][u] = cocycle_residual(A, unit, i, j, l, m).constant_term();
    }
  }
  return sys;
}

SolutionFamily solve_cocycle(const SuperLieAlgebra& A, const LinearSystem& system) {
  SolutionFamily F;
  F.unknowns = system.unknowns;
  F.basis = nullspace(system.matrix);
  std::vector<Variable> vars;
  for (std::size_t r = 0; r < F.basis.size(); ++r) vars.push_back({"t" + std::to_string(r + 1), VarKind::Commuting});
  F.ring = make_ring(vars);
  F.general = Cobracket(A.dim());
  for (std::size_t r = 0; r < F.basis.size(); ++r) {
    F.cobrackets.push_back(cobracket_from_coordinates(A, F.unknowns, F.basis[r]));
    F.general += SuperScalar::variable(F.ring, vars[r].name) * F.cobrackets.back();
  }
  return F;
}

std::vector<Cobracket> coboundary_space(const SuperLieAlgebra& A) {
  std::vector<Unknown> unknowns = cobracket_unknowns(A);
  std::vector<Cobracket> all;
  std::vector<RationalVector> coords;
  for (int k = 0; k < A.dim(); ++k)
    for (int l = k; l < A.dim(); ++l) {
      if (A.grade(k) != A.grade(l) || (k == l && A.grade(k) == 0)) continue;
      Cobracket d = coboundary_delta(A, RMatrix(A, wedge(A, k, l)));
      auto c = rational_coordinates(A, unknowns, d);
      if (!c) throw PreconditionError("coboundary with non-rational coordinates");
      all.push_back(d);
      coords.push_back(*c);
    }
  std::vector<Cobracket> out;
  bool any_nonzero = false;
  for (const auto& v : coords)
    for (const auto& q : v) any_nonzero = any_nonzero || q != 0;
  if (!any_nonzero) return out;
  for (auto idx : independent_subset(coords)) out.push_back(all[idx]);
  return out;
}

std::vector<SuperScalar> cojacobi_constraints(const SuperLieAlgebra& A, const SolutionFamily& F) {
  std::vector<SuperScalar> out;
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          SuperScalar p = cojacobi_residual(A, F.general, i, k, l, m);
          if (p.is_zero()) continue;
          p = SuperScalar(Rational(1) / p.terms().begin()->second) * p;
          if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
  return out;
}

std::optional<Bindings> family_point(const SuperLieAlgebra& A, const SolutionFamily& F, const Cobracket& d) {
  auto v = coordinates(A, F.unknowns, d);
  if (!v) return std::nullopt;
  Bindings point;
  if (F.basis.empty()) {
    for (const auto& x : *v)
      if (!x.is_zero()) return std::nullopt;
    return point;
  }
  // Pick rows where the basis matrix B (unknowns x nullity) has full rank,
  // solve the square rational system there, then confirm on every row.
  const std::size_t r = F.basis.size(), u = F.unknowns.size();
  std::vector<RationalVector> transposed;
  for (std::size_t row = 0; row < u; ++row) {
    RationalVector line(r);
    for (std::size_t c = 0; c < r; ++c) line[c] = F.basis[c][row];
    transposed.push_back(line);
  }
  std::vector<std::size_t> rows = independent_subset(transposed);
  if (rows.size() != r) throw std::logic_error("nullspace basis is not independent");
  // Gauss-Jordan on [B_rows | I] to get the inverse.
  std::vector<RationalVector> aug(r, RationalVector(2 * r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t c = 0; c < r; ++c) aug[a][c] = transposed[rows[a]][c];
    aug[a][r + a] = 1;
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rational inv = Rational(1) / aug[c][c];
    for (auto& q : aug[c]) q *= inv;
    for (std::size_t a = 0; a < r; ++a) {
      if (a == c || aug[a][c] == 0) continue;
      Rational f = aug[a][c];
      for (std::size_t k = 0; k < 2 * r; ++k) aug[a][k] -= f * aug[c][k];
    }
  }
  std::vector<SuperScalar> t(r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t a = 0; a < r; ++a)
      if (aug[c][r + a] != 0) t[c] += SuperScalar(aug[c][r + a]) * (*v)[rows[a]];
  for (std::size_t row = 0; row < u; ++row) {
    SuperScalar s;
    for (std::size_t c = 0; c < r; ++c)
      if (F.basis[c][row] != 0) s += SuperScalar(F.basis[c][row]) * t[c];
    if (s != (*v)[row]) return std::nullopt;
  }
  for (std::size_t c = 0; c < r; ++c) point["t" + std::to_string(c + 1)] = t[c];
  return point;
}

bool satisfies(const std::vector<SuperScalar>& constraints, const Bindings& point, std::span<const Relation> relations) {
  Ring target;
  for (const auto& [name, value] : point)
    if (value.ring()) target = value.ring();
  for (const auto& p : constraints) {
    SuperScalar value = substitute(p, point, target);
    if (!relations.empty()) value = reduce_all(value, relations);
    if (!value.is_zero()) return false;
  }
  return true;
}

}  // namespace lsb
