#include "lsb/superscalar.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace lsb {

// ---------------------------------------------------------------------------
// VariableTable

VariableTable::VariableTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::unordered_set<std::string> seen;
  slot_.resize(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.name.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(v.name).second) throw PreconditionError("duplicate variable name '" + v.name + "'");
    if (v.kind == VarKind::Grassmann) {
      slot_[i] = odd_vars_.size();
      odd_vars_.push_back(i);
    } else {
      slot_[i] = even_vars_.size();
      even_vars_.push_back(i);
    }
  }
  if (odd_vars_.size() > 64) throw PreconditionError("at most 64 Grassmann variables are supported");
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VariableTable::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw PreconditionError("unknown variable '" + std::string(name) + "'");
}

bool VariableTable::operator==(const VariableTable& other) const {
  if (vars_.size() != other.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != other.vars_[i].name || vars_[i].kind != other.vars_[i].kind) return false;
  return true;
}

Ring make_ring(std::vector<Variable> vars) {
  return std::make_shared<const VariableTable>(std::move(vars));
}

bool compatible(const Ring& x, const Ring& y) {
  return !x || !y || x == y || *x == *y;
}

// ---------------------------------------------------------------------------
// Monomial

int Monomial::odd_degree() const { return std::popcount(odd); }

bool Monomial::is_one() const {
  return odd == 0 && std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

namespace {

int exponent_at(const Monomial& m, std::size_t slot) {
  return slot < m.exponents.size() ? m.exponents[slot] : 0;
}

long degree(const Monomial& m) {
  long d = m.odd_degree();
  for (int e : m.exponents) d += e;
  return d;
}

// Sign of (theta_x)(theta_y) -> sorted; 0 if a generator repeats.
int grassmann_sign(std::uint64_t x, std::uint64_t y) {
  if (x & y) return 0;
  int swaps = 0;
  while (y) {
    int j = std::countr_zero(y);
    y &= y - 1;
    swaps += std::popcount(j + 1 < 64 ? (x >> (j + 1)) : std::uint64_t{0});
  }
  return (swaps & 1) ? -1 : 1;
}

Monomial multiply_monomials(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.exponents.resize(std::max(x.exponents.size(), y.exponents.size()), 0);
  for (std::size_t s = 0; s < out.exponents.size(); ++s) out.exponents[s] = exponent_at(x, s) + exponent_at(y, s);
  out.odd = x.odd | y.odd;
  return out;
}

}  // namespace

bool MonomialGreater::operator()(const Monomial& lhs, const Monomial& rhs) const {
  long dl = degree(lhs), dr = degree(rhs);
  if (dl != dr) return dl > dr;
  std::size_t n = std::max(lhs.exponents.size(), rhs.exponents.size());
  for (std::size_t k = n; k-- > 0;) {
    int el = exponent_at(lhs, k), er = exponent_at(rhs, k);
    if (el != er) return el > er;
  }
  return lhs.odd > rhs.odd;
}

// ---------------------------------------------------------------------------
// SuperScalar

SuperScalar::SuperScalar(long value) {
  if (value != 0) terms_.emplace(Monomial{}, Rational(value));
}

SuperScalar::SuperScalar(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

SuperScalar SuperScalar::variable(const Ring& ring, std::string_view name) {
  if (!ring) throw PreconditionError("variable '" + std::string(name) + "' requested from the constant ring");
  std::size_t i = ring->index_of(name);
  Monomial m;
  m.exponents.assign(ring->even_slots(), 0);
  if (ring->is_grassmann(i))
    m.odd = std::uint64_t{1} << ring->slot(i);
  else
    m.exponents[ring->slot(i)] = 1;
  return term(ring, std::move(m), 1);
}

SuperScalar SuperScalar::term(const Ring& ring, Monomial monomial, Rational coefficient) {
  SuperScalar out;
  out.ring_ = ring;
  if (ring) monomial.exponents.resize(ring->even_slots(), 0);
  if (coefficient != 0) out.terms_.emplace(std::move(monomial), std::move(coefficient));
  return out;
}

SuperScalar SuperScalar::constant(const Ring& ring, const Rational& c) { return term(ring, Monomial{}, c); }

bool SuperScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational SuperScalar::constant_term() const {
  for (const auto& [m, c] : terms_)
    if (m.is_one()) return c;
  return 0;
}

Rational SuperScalar::coefficient(const Monomial& m) const {
  Monomial key = m;
  if (ring_) key.exponents.resize(ring_->even_slots(), 0);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> SuperScalar::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    int q = m.parity();
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

SuperScalar SuperScalar::even_part() const {
  SuperScalar out(ring_, {});
  for (const auto& [m, c] : terms_)
    if (m.parity() == 0) out.terms_.emplace(m, c);
  return out;
}

SuperScalar SuperScalar::odd_part() const {
  SuperScalar out(ring_, {});
  for (const auto& [m, c] : terms_)
    if (m.parity() == 1) out.terms_.emplace(m, c);
  return out;
}

void SuperScalar::adopt_ring(const Ring& other) {
  if (!other || ring_ == other) return;
  if (!ring_) {
    ring_ = other;
    TermMap resized;
    for (auto& [m, c] : terms_) {
      Monomial k = m;
      k.exponents.resize(ring_->even_slots(), 0);
      resized.emplace(std::move(k), c);
    }
    terms_ = std::move(resized);
    return;
  }
  if (!(*ring_ == *other)) throw RingMismatchError("operands belong to different variable tables");
}

void SuperScalar::add_scaled(const SuperScalar& other, int sign) {
  adopt_ring(other.ring_);
  for (const auto& [m, c] : other.terms_) {
    Monomial key = m;
    if (ring_) key.exponents.resize(ring_->even_slots(), 0);
    auto [it, inserted] = terms_.try_emplace(std::move(key), 0);
    if (sign > 0)
      it->second += c;
    else
      it->second -= c;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperScalar SuperScalar::operator-() const {
  SuperScalar out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SuperScalar& SuperScalar::operator+=(const SuperScalar& other) {
  add_scaled(other, +1);
  return *this;
}

SuperScalar& SuperScalar::operator-=(const SuperScalar& other) {
  add_scaled(other, -1);
  return *this;
}

SuperScalar& SuperScalar::operator*=(const SuperScalar& other) {
  *this = normalize_product(*this, other);
  return *this;
}

bool SuperScalar::operator==(const SuperScalar& other) const {
  if (!compatible(ring_, other.ring_)) return false;
  SuperScalar diff = *this;
  diff -= other;
  return diff.is_zero();
}

SuperScalar normalize_product(const SuperScalar& x, const SuperScalar& y) {
  if (!compatible(x.ring_, y.ring_)) throw RingMismatchError("operands belong to different variable tables");
  Ring ring = x.ring_ ? x.ring_ : y.ring_;
  SuperScalar out(ring, {});
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      int sign = grassmann_sign(mx.odd, my.odd);
      if (sign == 0) continue;
      Monomial m = multiply_monomials(mx, my);
      if (ring) m.exponents.resize(ring->even_slots(), 0);
      bool bad = false;
      if (ring) {
        for (std::size_t s = 0; s < m.exponents.size(); ++s)
          if (m.exponents[s] < 0 && ring->var(ring->even_var(s)).kind != VarKind::Laurent) bad = true;
      }
      if (bad) throw PreconditionError("negative exponent on a non-Laurent variable");
      auto [it, inserted] = out.terms_.try_emplace(std::move(m), 0);
      Rational prod = cx * cy;
      if (sign > 0)
        it->second += prod;
      else
        it->second -= prod;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

std::string SuperScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    bool negative = c < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    if (ring_) {
      for (std::size_t i = 0; i < ring_->size(); ++i) {
        const auto& v = ring_->var(i);
        if (v.kind == VarKind::Grassmann) {
          if (m.odd >> ring_->slot(i) & 1) factors.push_back(v.name);
        } else {
          int e = m.exponents[ring_->slot(i)];
          if (e == 1)
            factors.push_back(v.name);
          else if (e != 0)
            factors.push_back(v.name + "^" + std::to_string(e));
        }
      }
    }
    if (factors.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SuperScalar& x) { return os << x.str(); }

namespace {

// c * (Laurent monomial) -> its inverse; nullopt when not invertible.
std::optional<SuperScalar> invert_monomial(const SuperScalar& x) {
  if (x.size() != 1) return std::nullopt;
  const auto& [m, c] = *x.terms().begin();
  if (m.odd != 0) return std::nullopt;
  Monomial inv = m;
  for (std::size_t s = 0; s < inv.exponents.size(); ++s) {
    if (inv.exponents[s] == 0) continue;
    if (!x.ring() || x.ring()->var(x.ring()->even_var(s)).kind != VarKind::Laurent) return std::nullopt;
    inv.exponents[s] = -inv.exponents[s];
  }
  return SuperScalar::term(x.ring(), inv, Rational(1) / c);
}

}  // namespace

SuperScalar pow(const SuperScalar& x, int n) {
  SuperScalar base = x;
  if (n < 0) {
    auto inv = invert_monomial(x);
    if (!inv) throw PreconditionError("negative power of a non-invertible element: " + x.str());
    base = *inv;
    n = -n;
  }
  SuperScalar result = SuperScalar::constant(x.ring(), 1);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

SuperScalar substitute(const SuperScalar& x, const Bindings& bindings, Ring target) {
  const Ring& source = x.ring();
  if (!target) target = source;
  if (!source) return SuperScalar::constant(target, x.constant_term());

  std::vector<std::optional<SuperScalar>> values(source->size());
  auto value_of = [&](std::size_t i) -> const SuperScalar& {
    if (values[i]) return *values[i];
    const auto& v = source->var(i);
    auto it = bindings.find(v.name);
    if (it != bindings.end()) {
      const SuperScalar& val = it->second;
      if (!compatible(val.ring(), target))
        throw RingMismatchError("binding for '" + v.name + "' lives in a different ring");
      auto p = val.parity();
      int want = v.kind == VarKind::Grassmann ? 1 : 0;
      if (!val.is_zero() && (!p || *p != want))
        throw ParityError("binding for '" + v.name + "' must be " + (want ? "odd" : "even"));
      values[i] = SuperScalar::constant(target, 0) + val;
    } else {
      if (!target || !target->find(v.name))
        throw PreconditionError("variable '" + v.name + "' has no binding and no counterpart in the target ring");
      values[i] = SuperScalar::variable(target, v.name);
    }
    return *values[i];
  };

  SuperScalar out = SuperScalar::constant(target, 0);
  for (const auto& [m, c] : x.terms()) {
    SuperScalar t = SuperScalar::constant(target, c);
    for (std::size_t s = 0; s < source->even_slots(); ++s) {
      int e = m.exponents[s];
      if (e != 0) t *= pow(value_of(source->even_var(s)), e);
    }
    for (std::size_t s = 0; s < source->odd_slots(); ++s)
      if (m.odd >> s & 1) t *= value_of(source->odd_var(s));
    out += t;
  }
  return out;
}

SuperScalar rename_into(const SuperScalar& x, const Ring& target,
                        const std::unordered_map<std::string, std::string>& rename) {
  Bindings b;
  if (x.ring()) {
    for (const auto& v : x.ring()->vars()) {
      auto it = rename.find(v.name);
      if (it != rename.end()) b.emplace(v.name, SuperScalar::variable(target, it->second));
    }
  }
  return substitute(x, b, target);
}

Monomial monomial_of(const SuperScalar& single_term) {
  if (single_term.size() != 1) throw PreconditionError("expected a single monomial, got " + single_term.str());
  return single_term.terms().begin()->first;
}

// ---------------------------------------------------------------------------
// Relation

namespace {

bool divides(const Monomial& d, const Monomial& m) {
  if ((d.odd & m.odd) != d.odd) return false;
  for (std::size_t s = 0; s < d.exponents.size(); ++s)
    if (exponent_at(m, s) < d.exponents[s]) return false;
  return true;
}

}  // namespace

Relation::Relation(SuperScalar relation, Monomial leading) : relation_(std::move(relation)), leading_(std::move(leading)) {
  const Ring& ring = relation_.ring();
  if (!ring) throw PreconditionError("relation must live in a ring with variables");
  leading_.exponents.resize(ring->even_slots(), 0);
  auto p = relation_.parity();
  if (!p || *p != 0) throw PreconditionError("relation must be homogeneous even");
  if (leading_.odd != 0) throw PreconditionError("leading monomial must be commuting");
  if (leading_.is_one()) throw PreconditionError("leading monomial must not be 1");
  for (const auto& [m, c] : relation_.terms()) {
    for (std::size_t s = 0; s < m.exponents.size(); ++s)
      if (m.exponents[s] != 0 && ring->var(ring->even_var(s)).kind == VarKind::Laurent)
        throw PreconditionError("relation must not involve Laurent variables");
  }
  if (relation_.coefficient(leading_) != 1)
    throw PreconditionError("leading monomial must occur with coefficient 1");
  MonomialGreater greater;
  for (const auto& [m, c] : relation_.terms()) {
    if (m == leading_) continue;
    if (divides(leading_, m)) throw PreconditionError("leading monomial divides another monomial of the relation");
    if (!greater(leading_, m)) throw PreconditionError("leading monomial is not the largest monomial of the relation");
  }
  replacement_ = SuperScalar::term(ring, leading_, 1) - relation_;
}

Relation Relation::parse(const Ring& ring, std::string_view relation, std::string_view leading) {
  return Relation(parse_scalar(ring, relation), monomial_of(parse_scalar(ring, leading)));
}

SuperScalar Relation::reduce(const SuperScalar& x) const {
  if (x.is_zero()) return x;
  if (!compatible(x.ring(), ring())) throw RingMismatchError("relation and element live in different rings");
  SuperScalar cur = SuperScalar::constant(ring(), 0) + x;
  const Ring& r = ring();
  while (true) {
    const Monomial* hit = nullptr;
    Rational coeff;
    for (const auto& [m, c] : cur.terms()) {
      bool ok = true;
      for (std::size_t s = 0; s < leading_.exponents.size() && ok; ++s)
        ok = m.exponents[s] >= leading_.exponents[s];
      if (ok) {
        hit = &m;
        coeff = c;
        break;
      }
    }
    if (!hit) return cur;
    Monomial cofactor = *hit;
    cofactor.odd = 0;
    for (std::size_t s = 0; s < cofactor.exponents.size(); ++s) cofactor.exponents[s] -= leading_.exponents[s];
    Monomial odd_part;
    odd_part.exponents.assign(r->even_slots(), 0);
    odd_part.odd = hit->odd;
    SuperScalar old_term = SuperScalar::term(r, *hit, coeff);
    SuperScalar rewritten = SuperScalar::term(r, cofactor, coeff) * replacement_ * SuperScalar::term(r, odd_part, 1);
    cur -= old_term;
    cur += rewritten;
  }
}

SuperScalar reduce_mod_relation(const SuperScalar& x, const SuperScalar& relation, const Monomial& leading) {
  return Relation(relation, leading).reduce(x);
}

SuperScalar reduce_all(const SuperScalar& x, std::span<const Relation> relations) {
  SuperScalar out = x;
  for (const auto& rel : relations) out = rel.reduce(out);
  return out;
}

}  // namespace lsb
