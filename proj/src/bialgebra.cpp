#include "lsb/bialgebra.hpp"

#include <sstream>

namespace lsb {

Cobracket::Cobracket(int dim) : dim_(dim), f_(static_cast<std::size_t>(dim) * dim * dim) {}

Cobracket Cobracket::from_rows(const std::vector<GradedTensor>& rows) {
  Cobracket d(static_cast<int>(rows.size()));
  for (int i = 0; i < d.dim_; ++i) {
    if (rows[i].rank() != 2) throw PreconditionError("cobracket rows must be rank-2 tensors");
    for (const auto& [key, c] : rows[i].coefficients()) {
      if (key[0] >= d.dim_ || key[1] >= d.dim_) throw PreconditionError("cobracket row index outside the algebra");
      d.set(i, key[0], key[1], c);
    }
  }
  return d;
}

GradedTensor Cobracket::row(int i) const {
  GradedTensor t(2);
  for (int k = 0; k < dim_; ++k)
    for (int l = 0; l < dim_; ++l) t.add({k, l, -1}, f(i, k, l));
  return t;
}

bool Cobracket::is_zero() const {
  for (const auto& v : f_)
    if (!v.is_zero()) return false;
  return true;
}

Cobracket Cobracket::map(const std::function<SuperScalar(const SuperScalar&)>& fn) const {
  Cobracket out(dim_);
  for (std::size_t n = 0; n < f_.size(); ++n)
    if (!f_[n].is_zero()) out.f_[n] = fn(f_[n]);
  return out;
}

Cobracket& Cobracket::operator+=(const Cobracket& other) {
  if (other.dim_ != dim_) throw PreconditionError("cobracket dimension mismatch");
  for (std::size_t n = 0; n < f_.size(); ++n) f_[n] += other.f_[n];
  return *this;
}

Cobracket operator*(const SuperScalar& s, const Cobracket& d) {
  return d.map([&](const SuperScalar& v) { return s * v; });
}

bool Cobracket::operator==(const Cobracket& other) const {
  if (dim_ != other.dim_) return false;
  for (std::size_t n = 0; n < f_.size(); ++n)
    if (f_[n] != other.f_[n]) return false;
  return true;
}

SuperScalar cojacobi_residual(const SuperLieAlgebra& A, const Cobracket& d, int i, int k, int l, int m) {
  SuperScalar sum;
  for (int j = 0; j < A.dim(); ++j) {
    sum += A.z(k, m) * (d.f(i, k, j) * d.f(j, l, m));
    sum += A.z(l, k) * (d.f(i, l, j) * d.f(j, m, k));
    sum += A.z(m, l) * (d.f(i, m, j) * d.f(j, k, l));
  }
  return sum;
}

SuperScalar cocycle_residual(const SuperLieAlgebra& A, const Cobracket& d, int i, int j, int l, int m) {
  SuperScalar lhs, rhs;
  for (int k = 0; k < A.dim(); ++k) {
    lhs += A.c(i, j, k) * d.f(k, l, m);
    rhs += d.f(i, l, k) * A.c(k, j, m);
    rhs += A.z(m, j) * (A.c(k, j, l) * d.f(i, k, m));
    rhs += A.c(i, k, l) * d.f(j, k, m);
    rhs += A.z(i, l) * (d.f(j, l, k) * A.c(i, k, m));
  }
  return lhs - rhs;
}

AxiomReport check_cobracket(const SuperLieAlgebra& A, const Cobracket& d, std::span<const Relation> relations) {
  if (d.dim() != A.dim()) throw PreconditionError("cobracket and algebra dimensions differ");
  AxiomReport report;
  report.axioms = {"grading", "antisymmetry", "cojacobi", "cocycle"};
  const int n = A.dim();
  auto reduced = [&](const SuperScalar& x) { return relations.empty() ? x : reduce_all(x, relations); };

  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        SuperScalar f = reduced(d.f(k, i, j));
        if (((A.grade(i) + A.grade(j)) & 1) != A.grade(k) && !f.is_zero())
          report.violations.push_back({"grading", {k, i, j}, f});
        SuperScalar anti = reduced(d.f(k, i, j) + A.z(i, j) * d.f(k, j, i));
        if (!anti.is_zero()) report.violations.push_back({"antisymmetry", {k, i, j}, anti});
      }

  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          SuperScalar sum = reduced(cojacobi_residual(A, d, i, k, l, m));
          if (!sum.is_zero()) report.violations.push_back({"cojacobi", {i, k, l, m}, sum});
        }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          SuperScalar residual = reduced(cocycle_residual(A, d, i, j, l, m));
          if (!residual.is_zero()) report.violations.push_back({"cocycle", {i, j, l, m}, residual});
        }
  return report;
}

SuperLieAlgebra dual_algebra(const SuperLieAlgebra& A, const Cobracket& d) {
  std::vector<BasisElement> basis;
  for (const auto& b : A.basis()) basis.push_back({b.name + "*", b.grade});
  SuperLieAlgebra dual(A.name() + "*", basis);
  for (int i = 0; i < A.dim(); ++i)
    for (int k = 0; k < A.dim(); ++k)
      for (int l = 0; l < A.dim(); ++l)
        if (!d.f(i, k, l).is_zero()) dual.set_constant(k, l, i, d.f(i, k, l));
  return dual;
}

Cobracket coboundary_delta(const SuperLieAlgebra& A, const RMatrix& r) {
  std::vector<GradedTensor> rows;
  for (int g = 0; g < A.dim(); ++g) rows.push_back(ad_action(A, g, r.tensor()));
  return Cobracket::from_rows(rows);
}

std::string to_string(CybeStatus s) {
  switch (s) {
    case CybeStatus::Cybe: return "CYBE";
    case CybeStatus::ModifiedOnly: return "mCYBE-only";
    case CybeStatus::Neither: return "neither";
  }
  return "?";
}

CybeStatus cybe_status(const SuperLieAlgebra& A, const RMatrix& r, std::span<const Relation> relations) {
  auto reduce = [&](const SuperScalar& x) { return reduce_all(x, relations); };
  GradedTensor s = schouten(A, r).map(reduce);
  if (s.is_zero()) return CybeStatus::Cybe;
  for (int g = 0; g < A.dim(); ++g)
    if (!ad_action(A, g, s).map(reduce).is_zero()) return CybeStatus::Neither;
  return CybeStatus::ModifiedOnly;
}

Cobracket parse_cobracket(const SuperLieAlgebra& A, const Ring& ring, std::string_view text) {
  std::vector<GradedTensor> rows(A.dim(), GradedTensor(2));
  std::vector<bool> seen(A.dim(), false);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream words(line);
    std::string kw, name, eq;
    if (!(words >> kw)) continue;
    if (kw != "delta" || !(words >> name >> eq) || eq != "=")
      throw ParseError("expected 'delta <X> = <wedge sum>'", line_no, 1);
    if (!A.has(name)) throw ParseError("unknown basis element '" + name + "'", line_no, line.find(name) + 1);
    int i = A.index_of(name);
    if (seen[i]) throw ParseError("row for '" + name + "' given twice", line_no, 1);
    seen[i] = true;
    std::size_t rhs_at = line.find('=') + 1;
    try {
      rows[i] = parse_wedge_sum(A, ring, std::string_view(line).substr(rhs_at));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, rhs_at + e.column());
    }
  }
  return Cobracket::from_rows(rows);
}

std::string render_cobracket(const SuperLieAlgebra& A, const Cobracket& d) {
  std::ostringstream os;
  for (int i = 0; i < A.dim(); ++i) os << "delta " << A.basis_name(i) << " = " << render_wedge(A, d.row(i)) << "\n";
  return os.str();
}

Ring parameter_ring() {
  static const Ring ring = [] {
    std::vector<Variable> vars;
    for (const char* n : {"a", "b", "c", "d", "f", "m", "p", "q", "t", "u", "v", "x", "y", "z"})
      vars.push_back({n, VarKind::Commuting});
    return make_ring(vars);
  }();
  return ring;
}

std::span<const Relation> parameter_relations() {
  static const std::vector<Relation> rels{Relation::parse(parameter_ring(), "m^2 - a*b", "m^2")};
  return rels;
}

SuperScalar param(std::string_view name) { return SuperScalar::variable(parameter_ring(), name); }

Cobracket specialize(const Cobracket& d, const Bindings& values) {
  return d.map([&](const SuperScalar& x) { return substitute(x, values); });
}

RMatrix specialize(const SuperLieAlgebra& A, const RMatrix& r, const Bindings& values) {
  return RMatrix(A, r.tensor().map([&](const SuperScalar& x) { return substitute(x, values); }));
}

namespace family {
namespace {

const SuperLieAlgebra& osp() {
  static const SuperLieAlgebra A = builtin("osp12");
  return A;
}
const SuperLieAlgebra& e2() {
  static const SuperLieAlgebra A = builtin("super_e2");
  return A;
}

// index names shared by both algebras
constexpr int H = 0, Xp = 1, Xm = 2, Vp = 3, Vm = 4;
constexpr int Pp = 1, Pm = 2, Dp = 3, Dm = 4;

GradedTensor ow(int x, int y) { return wedge(osp(), x, y); }
GradedTensor ew(int x, int y) { return wedge(e2(), x, y); }

const Rational half(1, 2);

SuperScalar branch_sign(int branch) {
  if (branch != 1 && branch != -1) throw PreconditionError("branch must be +1 or -1");
  return branch;
}

}  // namespace

RMatrix osp_r_a(const SuperScalar& x, const SuperScalar& y, const SuperScalar& z) {
  GradedTensor r = x * (ow(Xp, Xm) + 2 * ow(Vp, Vm));
  r += y * (ow(H, Xp) - ow(Vp, Vp));
  r += z * (ow(H, Xm) - ow(Vm, Vm));
  return RMatrix(osp(), r);
}

RMatrix osp_r_b(const SuperScalar& p, const SuperScalar& q) {
  return RMatrix(osp(), (p * q) * ow(Xp, Xm) + (p * p) * ow(H, Xp) + (q * q) * ow(H, Xm));
}

RMatrix osp_r1() { return RMatrix(osp(), ow(H, Xp)); }
RMatrix osp_r2() { return RMatrix(osp(), ow(H, Xp) - ow(Vp, Vp)); }
RMatrix osp_r3(const SuperScalar& t) {
  return RMatrix(osp(), t * (ow(H, Xp) - ow(Vp, Vp) + ow(H, Xm) - ow(Vm, Vm)));
}

Cobracket e2_case_A(const SuperScalar& a, const SuperScalar& b, const SuperScalar& c, const SuperScalar& m,
                    int branch) {
  SuperScalar sm = branch_sign(branch) * m;
  std::vector<GradedTensor> rows(5, GradedTensor(2));
  rows[H] = a * ew(H, Pp) + b * ew(H, Pm) + c * ew(Pp, Pm);
  rows[Pp] = b * ew(Pp, Pm);
  rows[Pm] = -a * ew(Pp, Pm);
  rows[Dp] = (half * a) * ew(Pp, Dp) - (half * b) * ew(Pm, Dp) + sm * ew(Pp, Dm);
  rows[Dm] = -(half * a) * ew(Pp, Dm) + (half * b) * ew(Pm, Dm) + sm * ew(Pm, Dp);
  return Cobracket::from_rows(rows);
}

Cobracket e2_case_A_as_printed(const SuperScalar& a, const SuperScalar& b, const SuperScalar& c,
                               const SuperScalar& m, int branch) {
  Cobracket d = e2_case_A(a, b, c, m, branch);
  std::vector<GradedTensor> rows;
  for (int i = 0; i < 5; ++i) rows.push_back(d.row(i));
  rows[Dm] = (half * a) * ew(Pp, Dm) - (half * b) * ew(Pm, Dm) + (branch_sign(branch) * m) * ew(Pm, Dp);
  return Cobracket::from_rows(rows);
}

Cobracket e2_case_B(const SuperScalar& a, const SuperScalar& b, const SuperScalar& c, const SuperScalar& d) {
  std::vector<GradedTensor> rows(5, GradedTensor(2));
  rows[H] = a * (ew(H, Pp) - half * ew(Dp, Dp)) + b * (ew(H, Pm) + half * ew(Dm, Dm)) + c * ew(Pp, Pm);
  rows[Pp] = b * ew(Pp, Pm) + d * (2 * ew(H, Pp) - ew(Dp, Dp));
  rows[Pm] = -a * ew(Pp, Pm) + d * (2 * ew(H, Pm) + ew(Dm, Dm));
  rows[Dp] = -(half * a) * ew(Pp, Dp) - (half * b) * ew(Pm, Dp) + d * ew(H, Dp);
  rows[Dm] = -(half * a) * ew(Pp, Dm) - (half * b) * ew(Pm, Dm) + d * ew(H, Dm);
  return Cobracket::from_rows(rows);
}

Cobracket e2_case(std::string_view roman) {
  SuperScalar c = param("c"), d = param("d");
  if (roman == "i") return e2_case_A(0, 0, c, 0, 1);
  if (roman == "ii") return e2_case_A(1, 0, c, 0, 1);
  if (roman == "iii") return e2_case_A(1, 1, c, 1, 1);
  if (roman == "iv") return e2_case_B(0, 0, 0, d);
  if (roman == "v") return e2_case_B(1, 0, c, 0);
  if (roman == "vi") return e2_case_B(1, 1, c, 0);
  throw PreconditionError("unknown super-e(2) family '" + std::string(roman) + "'");
}

RMatrix e2_r_A(const SuperScalar& a, const SuperScalar& b, const SuperScalar& f, const SuperScalar& m, int branch) {
  return RMatrix(e2(), a * ew(H, Pp) - b * ew(H, Pm) + (branch_sign(branch) * m) * ew(Dp, Dm) + f * ew(Pp, Pm));
}

RMatrix e2_r_B(const SuperScalar& a, const SuperScalar& b, const SuperScalar& f) {
  return RMatrix(e2(), a * (ew(H, Pp) - half * ew(Dp, Dp)) - b * (ew(H, Pm) + half * ew(Dm, Dm)) + f * ew(Pp, Pm));
}

RMatrix e2_r(std::string_view roman) {
  if (roman == "ii") return RMatrix(e2(), ew(H, Pp));
  if (roman == "iii") return RMatrix(e2(), ew(H, Pp) - ew(H, Pm) + ew(Dp, Dm));
  if (roman == "v") return RMatrix(e2(), ew(H, Pp) - half * ew(Dp, Dp));
  if (roman == "vi") return RMatrix(e2(), ew(H, Pp) - half * ew(Dp, Dp) - ew(H, Pm) - half * ew(Dm, Dm));
  throw PreconditionError("no r-matrix named r_(" + std::string(roman) + ")");
}

}  // namespace family

namespace {

SuperScalar value_or_param(const Bindings& params, const char* name) {
  auto it = params.find(name);
  return it == params.end() ? param(name) : it->second;
}

}  // namespace

std::vector<std::string> family_ids() {
  return {"osp-r-a",   "osp-r-b",   "osp-r1",    "osp-r2",     "osp-r3",     "e2-case-A+", "e2-case-A-",
          "e2-case-A-printed",      "e2-case-B", "e2-case-i",  "e2-case-ii", "e2-case-iii", "e2-case-iv",
          "e2-case-v", "e2-case-vi", "e2-r-A+",  "e2-r-A-",    "e2-r-B",     "e2-r-ii",    "e2-r-iii",
          "e2-r-v",    "e2-r-vi"};
}

FamilyValue lookup_family(std::string_view id, const Bindings& params) {
  auto P = [&](const char* n) { return value_or_param(params, n); };
  FamilyValue out;
  out.algebra = id.substr(0, 3) == "osp" ? "osp12" : "super_e2";
  std::string s(id);
  if (s == "osp-r-a") out.r = family::osp_r_a(P("x"), P("y"), P("z"));
  else if (s == "osp-r-b") out.r = family::osp_r_b(P("p"), P("q"));
  else if (s == "osp-r1") out.r = family::osp_r1();
  else if (s == "osp-r2") out.r = family::osp_r2();
  else if (s == "osp-r3") out.r = family::osp_r3(P("t"));
  else if (s == "e2-case-A+" || s == "e2-case-A-" || s == "e2-case-A")
    out.delta = family::e2_case_A(P("a"), P("b"), P("c"), P("m"), s == "e2-case-A-" ? -1 : 1);
  else if (s == "e2-case-A-printed") out.delta = family::e2_case_A_as_printed(P("a"), P("b"), P("c"), P("m"), 1);
  else if (s == "e2-case-B") out.delta = family::e2_case_B(P("a"), P("b"), P("c"), P("d"));
  else if (s.rfind("e2-case-", 0) == 0) out.delta = specialize(family::e2_case(s.substr(8)), params);
  else if (s == "e2-r-A+" || s == "e2-r-A-" || s == "e2-r-A")
    out.r = family::e2_r_A(P("a"), P("b"), P("f"), P("m"), s == "e2-r-A-" ? -1 : 1);
  else if (s == "e2-r-B") out.r = family::e2_r_B(P("a"), P("b"), P("f"));
  else if (s.rfind("e2-r-", 0) == 0) out.r = family::e2_r(s.substr(5));
  else throw PreconditionError("unknown family '" + s + "'");

  SuperScalar rel = substitute(param("m") * param("m") - param("a") * param("b"), params);
  Monomial m2 = monomial_of(param("m") * param("m"));
  if (rel.coefficient(m2) != 0 || rel.is_zero()) {
    if (!rel.is_zero()) out.relations.emplace_back(rel, m2);
  } else if (rel.is_constant()) {
    throw PreconditionError("parameter values violate m^2 = ab");
  }
  return out;
}

}  // namespace lsb
