#include "lsb/superalgebra.hpp"

#include <sstream>
#include <unordered_set>

namespace lsb {

SuperLieAlgebra::SuperLieAlgebra(std::string name, std::vector<BasisElement> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  std::unordered_set<std::string> seen;
  for (const auto& b : basis_)
    if (!seen.insert(b.name).second) throw PreconditionError("duplicate basis name '" + b.name + "'");
  c_.resize(basis_.size() * basis_.size() * basis_.size());
}

int SuperLieAlgebra::index_of(std::string_view name) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].name == name) return i;
  throw PreconditionError("unknown basis element '" + std::string(name) + "' in " + name_);
}

bool SuperLieAlgebra::has(std::string_view name) const {
  for (const auto& b : basis_)
    if (b.name == name) return true;
  return false;
}

void SuperLieAlgebra::set_bracket(int i, int j, const std::vector<std::pair<int, SuperScalar>>& rhs) {
  for (int k = 0; k < dim(); ++k) {
    c_[at(i, j, k)] = SuperScalar();
    c_[at(j, i, k)] = SuperScalar();
  }
  for (const auto& [k, v] : rhs) {
    set_constant(i, j, k, c(i, j, k) + v);
    if (i != j) set_constant(j, i, k, c(j, i, k) - z(i, j) * v);
  }
}

void SuperLieAlgebra::set_constant(int i, int j, int k, const SuperScalar& value) {
  auto p = value.parity();
  if (!p || *p != 0) throw ParityError("structure constants must be even scalars");
  c_[at(i, j, k)] = value;
}

bool SuperLieAlgebra::operator==(const SuperLieAlgebra& other) const {
  if (basis_.size() != other.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name != other.basis_[i].name || basis_[i].grade != other.basis_[i].grade) return false;
  for (std::size_t n = 0; n < c_.size(); ++n)
    if (c_[n] != other.c_[n]) return false;
  return true;
}

bool AxiomReport::passes(std::string_view axiom) const {
  for (const auto& v : violations)
    if (v.axiom == axiom) return false;
  return true;
}

std::string AxiomReport::summary(const SuperLieAlgebra& algebra) const {
  std::ostringstream os;
  for (const auto& axiom : axioms) {
    os << axiom << ": " << (passes(axiom) ? "pass" : "FAIL") << "\n";
    for (const auto& v : violations) {
      if (v.axiom != axiom) continue;
      os << "  (";
      for (std::size_t n = 0; n < v.indices.size(); ++n) os << (n ? "," : "") << algebra.basis_name(v.indices[n]);
      os << ") residual " << v.residual << "\n";
    }
  }
  return os.str();
}

AlgebraReport validate(const SuperLieAlgebra& A) {
  AlgebraReport report;
  report.axioms = {"grading", "antisymmetry", "jacobi"};
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (((A.grade(i) + A.grade(j)) & 1) != A.grade(k) && !A.c(i, j, k).is_zero())
          report.violations.push_back({"grading", {i, j, k}, A.c(i, j, k)});
        SuperScalar anti = A.c(i, j, k) + A.z(i, j) * A.c(j, i, k);
        if (!anti.is_zero()) report.violations.push_back({"antisymmetry", {i, j, k}, anti});
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          SuperScalar sum;
          for (int k = 0; k < n; ++k) {
            sum += A.z(i, l) * (A.c(i, j, k) * A.c(k, l, m));
            sum += A.z(j, i) * (A.c(j, l, k) * A.c(k, i, m));
            sum += A.z(l, j) * (A.c(l, i, k) * A.c(k, j, m));
          }
          if (!sum.is_zero()) report.violations.push_back({"jacobi", {i, j, l, m}, sum});
        }
  return report;
}

GradedTensor bracket(const SuperLieAlgebra& A, const GradedTensor& x, const GradedTensor& y) {
  if (x.rank() != 1 || y.rank() != 1) throw PreconditionError("bracket expects rank-1 tensors");
  GradedTensor out(1);
  for (const auto& [kx, f] : x.coefficients()) {
    for (const auto& [ky, g] : y.coefficients()) {
      int i = kx[0], j = ky[0];
      if (i >= A.dim() || j >= A.dim()) throw PreconditionError("tensor index outside the algebra");
      // moving the odd part of g past g_i costs (-1)^{|i|}
      SuperScalar g_moved = g.even_part() + (A.grade(i) ? -g.odd_part() : g.odd_part());
      SuperScalar fg = f * g_moved;
      if (fg.is_zero()) continue;
      for (int k = 0; k < A.dim(); ++k)
        if (!A.c(i, j, k).is_zero()) out.add({k, -1, -1}, fg * A.c(i, j, k));
    }
  }
  return out;
}

namespace {

SuperLieAlgebra make_super_e2() {
  SuperLieAlgebra A("super_e2", {{"H", Grade::Even}, {"P+", Grade::Even}, {"P-", Grade::Even},
                                 {"D+", Grade::Odd}, {"D-", Grade::Odd}});
  const int H = 0, Pp = 1, Pm = 2, Dp = 3, Dm = 4;
  const Rational half(1, 2);
  A.set_bracket(H, Pp, {{Pp, 1}});
  A.set_bracket(H, Pm, {{Pm, -1}});
  A.set_bracket(H, Dp, {{Dp, half}});
  A.set_bracket(H, Dm, {{Dm, Rational(-1, 2)}});
  A.set_bracket(Dp, Dp, {{Pp, 1}});
  A.set_bracket(Dm, Dm, {{Pm, 1}});
  return A;
}

SuperLieAlgebra make_osp12() {
  SuperLieAlgebra A("osp12", {{"H", Grade::Even}, {"X+", Grade::Even}, {"X-", Grade::Even},
                              {"V+", Grade::Odd}, {"V-", Grade::Odd}});
  const int H = 0, Xp = 1, Xm = 2, Vp = 3, Vm = 4;
  const Rational half(1, 2);
  A.set_bracket(H, Xp, {{Xp, 1}});
  A.set_bracket(H, Xm, {{Xm, -1}});
  A.set_bracket(H, Vp, {{Vp, half}});
  A.set_bracket(H, Vm, {{Vm, Rational(-1, 2)}});
  A.set_bracket(Xp, Xm, {{H, 2}});
  A.set_bracket(Vp, Vm, {{H, Rational(-1, 2)}});
  A.set_bracket(Vp, Vp, {{Xp, half}});
  A.set_bracket(Vm, Vm, {{Xm, Rational(-1, 2)}});
  A.set_bracket(Xp, Vm, {{Vp, 1}});
  A.set_bracket(Xm, Vp, {{Vm, 1}});
  return A;
}

}  // namespace

SuperLieAlgebra builtin(std::string_view name) {
  if (name == "osp12") return make_osp12();
  if (name == "super_e2") return make_super_e2();
  throw PreconditionError("unknown built-in algebra '" + std::string(name) + "'");
}

}  // namespace lsb
