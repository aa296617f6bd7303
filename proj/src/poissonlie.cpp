#include "lsb/poissonlie.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace lsb {
namespace {

// basis indices shared by both algebras: H, X+/P+, X-/P-, V+/D+, V-/D-
constexpr int kH = 0, kPlus = 1, kMinus = 2, kOddPlus = 3, kOddMinus = 4;

std::vector<Variable> single_vars(Group g) {
  using K = VarKind;
  if (g == Group::SuperE2)
    return {{"c", K::Commuting}, {"s", K::Commuting}, {"a", K::Commuting}, {"b", K::Commuting},
            {"E", K::Laurent},   {"xi", K::Grassmann}, {"eta", K::Grassmann}};
  return {{"a", K::Commuting}, {"b", K::Commuting},     {"c", K::Commuting},
          {"d", K::Commuting}, {"alpha", K::Grassmann}, {"delta", K::Grassmann}};
}

bool shared_var(Group g, const std::string& name) { return g == Group::SuperE2 && name == "c"; }

std::string copy_name(const std::string& name, int copy) { return name + std::to_string(copy); }

Relation osp_relation(const Ring& ring, const std::string& suffix) {
  auto v = [&](const char* n) { return SuperScalar::variable(ring, std::string(n) + suffix); };
  return Relation(v("a") * v("d") - v("b") * v("c") + v("alpha") * v("delta") - 1, monomial_of(v("a") * v("d")));
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_string(Group g) { return g == Group::SuperE2 ? "super-e2" : "osp"; }

Group parse_group(std::string_view name) {
  if (name == "super-e2" || name == "super_e2" || name == "e2") return Group::SuperE2;
  if (name == "osp" || name == "osp12") return Group::OSp;
  throw PreconditionError("unknown group '" + std::string(name) + "' (expected super-e2 or osp)");
}

// ---------------------------------------------------------------------------
// CoordinateRing

CoordinateRing::CoordinateRing(Group g)
    : group_(g), algebra_(builtin(g == Group::SuperE2 ? "super_e2" : "osp12")) {
  std::vector<Variable> vars = single_vars(g);
  ring_ = make_ring(vars);

  // doubled ring: shared, copy-1 even, copy-1 odd, copy-2 even, copy-2 odd
  std::vector<Variable> dv;
  for (const auto& v : vars)
    if (shared_var(g, v.name)) dv.push_back(v);
  for (int copy = 1; copy <= 2; ++copy)
    for (const auto& v : vars)
      if (!shared_var(g, v.name)) dv.push_back({copy_name(v.name, copy), v.kind});
  doubled_ = make_ring(dv);

  if (g == Group::OSp) {
    relations_.push_back(osp_relation(ring_, ""));
    doubled_relations_.push_back(osp_relation(doubled_, "1"));
    doubled_relations_.push_back(osp_relation(doubled_, "2"));
    for (const char* n : {"a", "b", "c", "d", "alpha", "delta"}) generators_.push_back({n, var(n)});
  } else {
    generators_ = {{"a", var("a")}, {"b", var("b")}, {"e^s", pow(var("E"), 2)}, {"xi", var("xi")}, {"eta", var("eta")}};
  }

  auto v1 = [&](const std::string& n) { return SuperScalar::variable(doubled_, copy_name(n, 1)); };
  auto v2 = [&](const std::string& n) { return SuperScalar::variable(doubled_, copy_name(n, 2)); };
  coproduct_images_.resize(ring_->size());
  if (g == Group::SuperE2) {
    SuperScalar E2 = v2("E"), iE2 = pow(E2, -1);
    const Rational half(1, 2);
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      const std::string& n = ring_->var(i).name;
      SuperScalar& out = coproduct_images_[i];
      if (n == "c") out = SuperScalar::variable(doubled_, "c");
      else if (n == "s") out = v1("s") + v2("s");
      else if (n == "a") out = v2("a") + v1("a") * iE2 * iE2 + half * (v1("xi") * v2("xi") * iE2);
      else if (n == "b") out = v2("b") + v1("b") * E2 * E2 + half * (v1("eta") * v2("eta") * E2);
      else if (n == "E") out = v1("E") * E2;
      else if (n == "xi") out = v2("xi") + v1("xi") * iE2;
      else if (n == "eta") out = v2("eta") + v1("eta") * E2;
    }
  } else {
    // rows of the supermatrix [[a, alpha, b], [gamma, e, beta], [c, delta, d]]
    auto matrix = [&](auto v) {
      SuperScalar a = v("a"), b = v("b"), c = v("c"), d = v("d"), al = v("alpha"), de = v("delta");
      return std::vector<std::vector<SuperScalar>>{
          {a, al, b}, {c * al - a * de, 1 + al * de, d * al - b * de}, {c, de, d}};
    };
    auto m1 = matrix(v1), m2 = matrix(v2);
    auto entry = [&](int i, int j) {
      SuperScalar out;
      for (int k = 0; k < 3; ++k) out += m1[i][k] * m2[k][j];
      return reduce_all(out, doubled_relations_);
    };
    std::map<std::string, std::pair<int, int>> pos{{"a", {0, 0}}, {"alpha", {0, 1}}, {"b", {0, 2}},
                                                   {"c", {2, 0}}, {"delta", {2, 1}}, {"d", {2, 2}}};
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      auto [r, c] = pos.at(ring_->var(i).name);
      coproduct_images_[i] = entry(r, c);
    }
  }
}

const CoordinateRing& CoordinateRing::super_e2() {
  static const CoordinateRing R(Group::SuperE2);
  return R;
}
const CoordinateRing& CoordinateRing::osp() {
  static const CoordinateRing R(Group::OSp);
  return R;
}
const CoordinateRing& CoordinateRing::of(Group g) { return g == Group::SuperE2 ? super_e2() : osp(); }

SuperScalar CoordinateRing::parse(std::string_view text) const {
  std::string s(text);
  // printed notation for exponentials of s
  for (auto [from, to] : {std::pair<const char*, const char*>{"e^{-s}", "E^-2"}, {"e^{2s}", "E^4"}, {"e^s", "E^2"}}) {
    for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p))
      s.replace(p, std::string(from).size(), to);
  }
  return reduce(parse_scalar(ring_, s));
}

SuperScalar CoordinateRing::at_identity(const SuperScalar& x) const {
  Bindings b;
  if (group_ == Group::SuperE2) {
    for (const char* n : {"s", "a", "b", "xi", "eta"}) b.emplace(n, 0);
    b.emplace("E", 1);
  } else {
    for (const char* n : {"b", "c", "alpha", "delta"}) b.emplace(n, 0);
    b.emplace("a", 1);
    b.emplace("d", 1);
  }
  return substitute(reduce(x), b);
}

std::vector<std::pair<int, int>> CoordinateRing::table_pairs() const {
  std::vector<int> even, odd;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    (generators_[i].value.parity().value_or(0) ? odd : even).push_back(static_cast<int>(i));
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = i + 1; j < even.size(); ++j) out.emplace_back(even[i], even[j]);
  for (int e : even)
    for (int o : odd) out.emplace_back(e, o);
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i; j < odd.size(); ++j) out.emplace_back(odd[i], odd[j]);
  return out;
}

SuperScalar CoordinateRing::e() const { return 1 + var("alpha") * var("delta"); }
SuperScalar CoordinateRing::gamma() const { return var("c") * var("alpha") - var("a") * var("delta"); }
SuperScalar CoordinateRing::beta() const { return var("d") * var("alpha") - var("b") * var("delta"); }

SuperScalar CoordinateRing::embed(const SuperScalar& x, int copy) const {
  std::unordered_map<std::string, std::string> rename;
  for (const auto& v : ring_->vars())
    rename[v.name] = shared_var(group_, v.name) ? v.name : copy_name(v.name, copy);
  return rename_into(x, doubled_, rename);
}

SuperScalar CoordinateRing::coproduct(const SuperScalar& x) const {
  Bindings b;
  for (std::size_t i = 0; i < ring_->size(); ++i) b.emplace(ring_->var(i).name, coproduct_images_[i]);
  return reduce_all(substitute(reduce(x), b, doubled_), doubled_relations_);
}

// ---------------------------------------------------------------------------
// Vector fields

SuperScalar apply_field(const VectorField& F, const SuperScalar& f) {
  if (f.is_zero() || !f.ring()) return SuperScalar();
  const Ring& ring = f.ring();
  if (F.images.size() != ring->size()) throw PreconditionError("vector field " + F.name + " does not match the ring");
  const std::size_t n_even = ring->even_slots(), n_odd = ring->odd_slots();
  SuperScalar out;
  for (const auto& [m, coef] : f.terms()) {
    std::vector<std::size_t> thetas;
    for (std::size_t s = 0; s < n_odd; ++s)
      if (m.odd >> s & 1) thetas.push_back(s);
    auto theta_product = [&](std::size_t from, std::size_t to) {
      Monomial t;
      t.exponents.assign(n_even, 0);
      for (std::size_t p = from; p < to; ++p) t.odd |= std::uint64_t{1} << thetas[p];
      return SuperScalar::term(ring, t, 1);
    };
    Monomial even_m = m;
    even_m.exponents.resize(n_even, 0);
    even_m.odd = 0;
    const int m_odd = static_cast<int>(thetas.size());

    for (std::size_t s = 0; s < n_even; ++s) {
      int k = even_m.exponents[s];
      if (k == 0) continue;
      const SuperScalar& image = F.images[ring->even_var(s)];
      if (image.is_zero()) continue;
      Monomial rest = even_m;
      rest.exponents[s] = k - 1;
      int sign = (F.side == Side::Right && (F.parity & m_odd & 1)) ? -1 : 1;
      out += SuperScalar::term(ring, rest, coef * k * sign) * image * theta_product(0, thetas.size());
    }
    for (std::size_t p = 0; p < thetas.size(); ++p) {
      const SuperScalar& image = F.images[ring->odd_var(thetas[p])];
      if (image.is_zero()) continue;
      int passed = F.side == Side::Left ? static_cast<int>(p) : m_odd - 1 - static_cast<int>(p);
      int sign = (F.parity & passed & 1) ? -1 : 1;
      out += SuperScalar::term(ring, even_m, coef * sign) * theta_product(0, p) * image *
             theta_product(p + 1, thetas.size());
    }
  }
  return out;
}

VectorField invariant_field(const CoordinateRing& R, Invariance inv, Side side, int k) {
  const SuperLieAlgebra& A = R.algebra();
  VectorField F;
  F.parity = A.grade(k);
  F.side = side;
  F.name = std::string(inv == Invariance::LeftInv ? "Y_" : "X_") + A.basis_name(k) +
           (F.parity ? (side == Side::Left ? "^(l)" : "^(r)") : "");
  F.images.assign(R.ring()->size(), SuperScalar());
  auto set = [&](const char* name, const SuperScalar& v) { F.images[R.ring()->index_of(name)] = v; };
  auto v = [&](const char* name) { return R.var(name); };
  const SuperScalar half(Rational(1, 2));
  const bool Y = inv == Invariance::LeftInv;
  const bool right = side == Side::Right;

  if (R.group() == Group::SuperE2) {
    SuperScalar E = v("E"), iE = pow(E, -1);
    switch (k) {
      case kH:
        set("s", 1);
        if (Y) {
          set("a", -v("a"));
          set("b", v("b"));
          set("xi", -half * v("xi"));
          set("eta", half * v("eta"));
        }
        break;
      case kPlus:
        set("a", Y ? SuperScalar(1) : iE * iE);
        break;
      case kMinus:
        set("b", Y ? SuperScalar(1) : E * E);
        break;
      case kOddMinus: {
        int sign = right ? 1 : -1;
        if (Y) {
          set("b", sign * half * v("eta"));
          set("eta", 1);
        } else {
          set("b", -sign * half * (v("eta") * E));
          set("eta", E);
        }
        break;
      }
      case kOddPlus: {
        int sign = right ? 1 : -1;
        if (Y) {
          set("a", sign * half * v("xi"));
          set("xi", 1);
        } else {
          set("a", -sign * half * (v("xi") * iE));
          set("xi", iE);
        }
        break;
      }
    }
    // chain rule on E = exp(s/2)
    F.images[R.ring()->index_of("E")] = half * (F.images[R.ring()->index_of("s")] * E);
    return F;
  }

  SuperScalar a = v("a"), b = v("b"), c = v("c"), d = v("d"), al = v("alpha"), de = v("delta");
  int sign = right ? 1 : -1;
  switch (k) {
    case kH:
      if (Y) {
        set("a", half * a);
        set("b", -half * b);
        set("c", half * c);
        set("d", -half * d);
      } else {
        set("a", half * a);
        set("alpha", half * al);
        set("b", half * b);
        set("c", -half * c);
        set("delta", -half * de);
        set("d", -half * d);
      }
      break;
    case kPlus:
      if (Y) {
        set("b", a);
        set("d", c);
      } else {
        set("a", c);
        set("alpha", de);
        set("b", d);
      }
      break;
    case kMinus:
      if (Y) {
        set("a", b);
        set("c", d);
      } else {
        set("c", a);
        set("delta", al);
        set("d", b);
      }
      break;
    case kOddPlus:
      if (Y) {
        set("alpha", half * a);
        set("b", sign * half * al);
        set("delta", half * c);
        set("d", sign * half * de);
      } else {
        set("a", -sign * half * R.gamma());
        set("alpha", half * R.e());
        set("b", -sign * half * R.beta());
      }
      break;
    case kOddMinus:
      if (Y) {
        set("a", -sign * half * al);
        set("alpha", half * b);
        set("c", -sign * half * de);
        set("delta", half * d);
      } else {
        set("c", -sign * half * R.gamma());
        set("delta", half * R.e());
        set("d", -sign * half * R.beta());
      }
      break;
  }
  return F;
}

// ---------------------------------------------------------------------------
// Structures

namespace {

struct FieldSet {
  std::vector<VectorField> Yr, Yl, Xr, Xl;
};

VectorField lift(const CoordinateRing& R, const VectorField& F, int copy) {
  VectorField out = F;
  const Ring& D = R.doubled();
  out.images.assign(D->size(), SuperScalar());
  for (std::size_t i = 0; i < R.ring()->size(); ++i) {
    const std::string& n = R.ring()->var(i).name;
    if (shared_var(R.group(), n)) continue;
    out.images[D->index_of(copy_name(n, copy))] = R.embed(F.images[i], copy);
  }
  return out;
}

// copy 0: the group itself; 1, 2: the factors of G x G
const FieldSet& fields(Group g, int copy) {
  static std::map<std::pair<Group, int>, FieldSet> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(g, copy);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const CoordinateRing& R = CoordinateRing::of(g);
  FieldSet fs;
  for (int k = 0; k < R.algebra().dim(); ++k) {
    fs.Yr.push_back(invariant_field(R, Invariance::LeftInv, Side::Right, k));
    fs.Yl.push_back(invariant_field(R, Invariance::LeftInv, Side::Left, k));
    fs.Xr.push_back(invariant_field(R, Invariance::RightInv, Side::Right, k));
    fs.Xl.push_back(invariant_field(R, Invariance::RightInv, Side::Left, k));
  }
  if (copy > 0)
    for (auto* list : {&fs.Yr, &fs.Yl, &fs.Xr, &fs.Xl})
      for (auto& F : *list) F = lift(R, F, copy);
  return cache.emplace(key, std::move(fs)).first->second;
}

SuperScalar bracket_with(const FieldSet& fs, const GradedTensor& r, const GradedTensor& phi, const SuperScalar& f,
                         const SuperScalar& g) {
  const std::size_t n = fs.Yr.size();
  std::vector<SuperScalar> Yf(n), Yg(n), Xf(n), Xg(n);
  std::vector<bool> needY(n), needX(n);
  for (const auto& [key, c] : r.coefficients()) needY[key[0]] = needY[key[1]] = needX[key[0]] = needX[key[1]] = true;
  for (const auto& [key, c] : phi.coefficients()) needX[key[0]] = needX[key[1]] = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (needY[k]) {
      Yf[k] = apply_field(fs.Yr[k], f);
      Yg[k] = apply_field(fs.Yl[k], g);
    }
    if (needX[k]) {
      Xf[k] = apply_field(fs.Xr[k], f);
      Xg[k] = apply_field(fs.Xl[k], g);
    }
  }
  SuperScalar out;
  for (const auto& [key, c] : r.coefficients()) {
    out += Yf[key[0]] * c * Yg[key[1]];
    out -= Xf[key[0]] * c * Xg[key[1]];
  }
  for (const auto& [key, c] : phi.coefficients()) out += Xf[key[0]] * c * Xg[key[1]];
  return out;
}

GradedTensor constant_tensor(const RMatrix& r) {
  return r.tensor().map([](const SuperScalar& x) {
    if (!x.is_constant()) throw PreconditionError("Poisson structures need numeric r-matrices, got coefficient " + x.str());
    return SuperScalar(x.constant_term());
  });
}

}  // namespace

PoissonStructure coboundary_structure(Group g, const RMatrix& r, std::string name) {
  PoissonStructure P;
  P.kind = PoissonStructure::Kind::Coboundary;
  P.group = g;
  P.name = std::move(name);
  P.r = constant_tensor(r);
  return P;
}

PoissonStructure cocycle_structure(Group g, const GradedTensor& phi, std::string name) {
  const CoordinateRing& R = CoordinateRing::of(g);
  for (const auto& [key, c] : phi.coefficients()) {
    SuperScalar v = R.at_identity(c);
    if (!v.is_zero())
      throw PreconditionError("phi does not vanish at the identity: coefficient of " + R.algebra().basis_name(key[0]) +
                              "(x)" + R.algebra().basis_name(key[1]) + " is " + v.str());
  }
  PoissonStructure P;
  P.kind = PoissonStructure::Kind::Cocycle;
  P.group = g;
  P.name = std::move(name);
  P.phi = phi;
  return P;
}

PoissonStructure mixed_structure(const RMatrix& r, std::string name) {
  PoissonStructure P = cocycle_structure(Group::SuperE2, phi_case_i(), std::move(name));
  P.kind = PoissonStructure::Kind::Mixed;
  P.r = constant_tensor(r);
  return P;
}

GradedTensor phi_case_i() {
  const CoordinateRing& R = CoordinateRing::super_e2();
  return (R.var("c") * R.var("s")) * wedge(R.algebra(), kPlus, kMinus);
}

GradedTensor phi_case_iv() {
  const CoordinateRing& R = CoordinateRing::super_e2();
  const SuperLieAlgebra& A = R.algebra();
  SuperScalar a = R.var("a"), b = R.var("b"), xi = R.var("xi"), eta = R.var("eta");
  SuperScalar E = R.var("E"), iE = pow(E, -1);
  auto w = [&](int x, int y) { return wedge(A, x, y); };
  const int H = kH, Pp = kPlus, Pm = kMinus, Dp = kOddPlus, Dm = kOddMinus;
  GradedTensor phi(2);
  phi += (-2 * a * pow(E, 2)) * w(Pp, H);
  phi += (-a * pow(E, 2)) * w(Dp, Dp);
  phi += (-2 * b * pow(E, -2)) * w(Pm, H);
  phi += (2 * a * b) * w(Pm, Pp);
  phi += (b * pow(E, -2)) * w(Dm, Dm);
  phi += (xi * E) * w(H, Dp);
  phi += (-a * xi * pow(E, 3)) * w(Pp, Dp);
  phi += (xi * b * iE) * w(Pm, Dp);
  phi += (eta * iE) * w(H, Dm);
  phi += (-a * eta * E) * w(Pp, Dm);
  phi += (eta * b * pow(E, -3)) * w(Pm, Dm);
  phi += (Rational(-1, 2) * (xi * eta)) * w(Dp, Dm);
  return phi;
}

PoissonStructure named_structure(Group g, std::string_view id) {
  std::string s(id);
  if (g == Group::OSp) {
    if (s == "1") return coboundary_structure(g, family::osp_r1(), "1");
    if (s == "2") return coboundary_structure(g, family::osp_r2(), "2");
    if (s == "3") return coboundary_structure(g, family::osp_r3(1), "3");
    throw PreconditionError("unknown OSp structure '" + s + "' (expected 1, 2 or 3)");
  }
  if (s == "i") return cocycle_structure(g, phi_case_i(), "i");
  if (s == "iv") return cocycle_structure(g, phi_case_iv(), "iv");
  if (s == "ii" || s == "iii" || s == "v" || s == "vi") return mixed_structure(family::e2_r(s), s);
  throw PreconditionError("unknown super-E(2) structure '" + s + "' (expected i..vi)");
}

std::vector<std::string> structure_ids(Group g) {
  if (g == Group::OSp) return {"1", "2", "3"};
  return {"i", "ii", "iii", "iv", "v", "vi"};
}

SuperScalar bracket(const PoissonStructure& P, const SuperScalar& f, const SuperScalar& g) {
  const CoordinateRing& R = CoordinateRing::of(P.group);
  return R.reduce(bracket_with(fields(P.group, 0), P.r, P.phi, R.reduce(f), R.reduce(g)));
}

SuperScalar bracket_doubled(const PoissonStructure& P, const SuperScalar& f, const SuperScalar& g) {
  const CoordinateRing& R = CoordinateRing::of(P.group);
  SuperScalar out;
  for (int copy = 1; copy <= 2; ++copy) {
    GradedTensor phi = P.phi.map([&](const SuperScalar& x) { return R.embed(x, copy); });
    out += bracket_with(fields(P.group, copy), P.r, phi, f, g);
  }
  return reduce_all(out, R.doubled_relations());
}

AxiomReport check_poisson_axioms(const PoissonStructure& P, int leibniz_samples, unsigned seed) {
  const CoordinateRing& R = CoordinateRing::of(P.group);
  AxiomReport report;
  report.axioms = {"antisymmetry", "leibniz", "jacobi", "coproduct"};

  std::vector<SuperScalar> gens;
  for (const auto& v : R.ring()->vars())
    if (!shared_var(P.group, v.name)) gens.push_back(R.var(v.name));
  const int n = static_cast<int>(gens.size());
  auto par = [](const SuperScalar& x) { return x.parity().value_or(0); };
  auto z = [&](const SuperScalar& x, const SuperScalar& y) { return (par(x) & par(y)) ? -1 : 1; };

  std::vector<std::vector<SuperScalar>> table(n, std::vector<SuperScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = bracket(P, gens[i], gens[j]);

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      SuperScalar res = table[i][j] + z(gens[i], gens[j]) * table[j][i];
      if (!res.is_zero()) report.violations.push_back({"antisymmetry", {i, j}, res});
    }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2), len(1, 3);
  auto sample = [&]() {
    SuperScalar x = coef(rng) == 0 ? SuperScalar(1) : SuperScalar(coef(rng));
    for (int l = len(rng); l > 0; --l) x = x * gens[pick(rng)];
    if (x.is_zero()) x = gens[pick(rng)];
    return R.reduce(x);
  };
  for (int t = 0; t < leibniz_samples; ++t) {
    SuperScalar f = sample(), g = sample(), h = sample();
    SuperScalar res = bracket(P, f, g * h) - bracket(P, f, g) * h - z(f, g) * (g * bracket(P, f, h));
    res = R.reduce(res);
    if (!res.is_zero()) report.violations.push_back({"leibniz", {t}, res});
  }

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        const SuperScalar &f = gens[i], &g = gens[j], &h = gens[k];
        SuperScalar res = z(f, h) * bracket(P, f, table[j][k]) + z(g, f) * bracket(P, g, table[k][i]) +
                          z(h, g) * bracket(P, h, table[i][j]);
        if (!res.is_zero()) report.violations.push_back({"jacobi", {i, j, k}, res});
      }

  std::vector<SuperScalar> delta;
  for (const auto& g : gens) delta.push_back(R.coproduct(g));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      SuperScalar res = R.coproduct(table[i][j]) - bracket_doubled(P, delta[i], delta[j]);
      if (!res.is_zero()) report.violations.push_back({"coproduct", {i, j}, res});
    }
  return report;
}

std::vector<TableRow> render_table(const PoissonStructure& P, const Rational& scale) {
  const CoordinateRing& R = CoordinateRing::of(P.group);
  std::vector<TableRow> out;
  for (auto [i, j] : R.table_pairs()) {
    const auto &x = R.generators()[i], &y = R.generators()[j];
    out.push_back({"{" + x.name + "," + y.name + "}", R.reduce(SuperScalar(scale) * bracket(P, x.value, y.value))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printed tables

namespace {

// Drops closing brackets without a partner and unclosed opening brackets.
std::string balance(const std::string& s) {
  std::string out;
  std::vector<std::size_t> open;
  for (char ch : s) {
    if (ch == '(') {
      open.push_back(out.size());
    } else if (ch == ')') {
      if (open.empty()) continue;
      open.pop_back();
    }
    out += ch;
  }
  for (auto it = open.rbegin(); it != open.rend(); ++it) out.erase(*it, 1);
  return out;
}

}  // namespace

PrintedTable parse_printed_table(std::string_view id, std::string_view text) {
  PrintedTable t;
  t.id = std::string(id);
  bool have_group = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("group ", 0) == 0) {
      t.group = parse_group(trim(s.substr(6)));
      have_group = true;
    } else if (s.rfind("scale ", 0) == 0) {
      try {
        t.scale = Rational(trim(s.substr(6)));
        t.scale.canonicalize();
      } catch (const std::exception&) {
        throw ParseError("bad scale", lineno, 7);
      }
    } else if (s.rfind("columns ", 0) == 0) {
      std::istringstream cols(s.substr(8));
      for (std::string c; cols >> c;) t.columns.push_back(c);
    } else if (s[0] == '{') {
      std::vector<std::string> parts;
      std::string cur;
      for (char ch : s) {
        if (ch == '|') {
          parts.push_back(trim(cur));
          cur.clear();
        } else {
          cur += ch;
        }
      }
      parts.push_back(trim(cur));
      if (parts.size() != t.columns.size() + 1)
        throw ParseError("row has " + std::to_string(parts.size() - 1) + " cells, expected " +
                             std::to_string(t.columns.size()),
                         lineno, 1);
      t.rows.push_back(parts[0]);
      std::vector<PrintedCell> cells;
      for (std::size_t k = 1; k < parts.size(); ++k) {
        PrintedCell c{parts[k], balance(parts[k]), false};
        c.typo = c.normalized != c.text;
        cells.push_back(c);
      }
      t.cells.push_back(std::move(cells));
    } else {
      throw ParseError("unrecognized line '" + s + "'", lineno, 1);
    }
  }
  if (!have_group) throw ParseError("missing 'group' line", 1, 1);
  return t;
}

PrintedTable load_printed_table(const std::string& path, std::string_view id) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_printed_table(id, ss.str());
}

std::string to_string(CellCheck::Status s) {
  switch (s) {
    case CellCheck::Status::Match:
      return "pass";
    case CellCheck::Status::Erratum:
      return "erratum";
    case CellCheck::Status::Mismatch:
      return "fail";
  }
  return "?";
}

std::vector<CellCheck> compare_table(const PrintedTable& table) {
  const CoordinateRing& R = CoordinateRing::of(table.group);
  std::vector<CellCheck> out;
  for (std::size_t col = 0; col < table.columns.size(); ++col) {
    std::map<std::string, SuperScalar> computed;
    for (auto& row : render_table(named_structure(table.group, table.columns[col]), table.scale))
      computed[row.pair] = row.value;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const PrintedCell& cell = table.cells[r][col];
      CellCheck check;
      check.row = table.rows[r];
      check.column = table.columns[col];
      auto it = computed.find(check.row);
      if (it == computed.end()) throw PreconditionError("no generator pair " + check.row + " in " + to_string(table.group));
      check.computed = it->second;
      check.printed = cell.normalized.empty() ? SuperScalar() : R.parse(cell.normalized);
      if (cell.typo) check.note = "printed '" + cell.text + "' read as '" + cell.normalized + "'";
      if (R.reduce(check.printed - check.computed).is_zero()) {
        check.status = CellCheck::Status::Match;
      } else if (!R.at_identity(check.printed).is_zero() && R.at_identity(check.computed).is_zero()) {
        check.status = CellCheck::Status::Erratum;
        check.note = "printed value is " + R.at_identity(check.printed).str() + " at the identity";
      } else {
        check.status = CellCheck::Status::Mismatch;
      }
      out.push_back(std::move(check));
    }
  }
  return out;
}

}  // namespace lsb
