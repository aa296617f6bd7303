#pragma once

// Exact arithmetic in the supercommutative ring
//
//     Q[p_1..p_n][E, 1/E] (x) Lambda(theta_1..theta_m)
//
// Commuting variables carry nonnegative exponents, Laurent variables any
// integer exponent, Grassmann variables are nilpotent and anticommute.  A
// term stores its Grassmann factor as a bit mask over the Grassmann slots;
// the normal order of Grassmann factors is the order of the variable table,
// and every sign comes from sorting into that order.

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lsb/error.hpp"

namespace lsb {

using Rational = mpq_class;

enum class VarKind : std::uint8_t { Commuting, Laurent, Grassmann };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Commuting;
};

/// Ordered, immutable set of ring variables.
class VariableTable {
 public:
  explicit VariableTable(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<Variable>& vars() const { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  bool is_grassmann(std::size_t i) const { return vars_[i].kind == VarKind::Grassmann; }
  /// Position of variable i among the even (commuting/Laurent) or the Grassmann slots.
  std::size_t slot(std::size_t i) const { return slot_[i]; }
  std::size_t even_slots() const { return even_vars_.size(); }
  std::size_t odd_slots() const { return odd_vars_.size(); }
  std::size_t even_var(std::size_t slot) const { return even_vars_[slot]; }
  std::size_t odd_var(std::size_t slot) const { return odd_vars_[slot]; }

  bool operator==(const VariableTable& other) const;

 private:
  std::vector<Variable> vars_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> even_vars_;
  std::vector<std::size_t> odd_vars_;
};

using Ring = std::shared_ptr<const VariableTable>;

Ring make_ring(std::vector<Variable> vars);

/// Same table, or one side is the variable-free constant ring.
bool compatible(const Ring& x, const Ring& y);

struct Monomial {
  std::vector<int> exponents;  // indexed by even slot
  std::uint64_t odd = 0;       // bit s set <=> Grassmann slot s present

  int odd_degree() const;
  int parity() const { return odd_degree() & 1; }
  bool is_one() const;
  bool operator==(const Monomial& other) const = default;
};

/// Degree-lexicographic order; later variables of the table rank higher.
/// Returns true when lhs is strictly greater than rhs.
struct MonomialGreater {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

class SuperScalar {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialGreater>;

  SuperScalar() = default;
  SuperScalar(long value);  // NOLINT(google-explicit-constructor)
  SuperScalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static SuperScalar variable(const Ring& ring, std::string_view name);
  static SuperScalar term(const Ring& ring, Monomial monomial, Rational coefficient);
  /// The constant c viewed as an element of `ring`.
  static SuperScalar constant(const Ring& ring, const Rational& c);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  /// Coefficient of a given monomial (0 when absent).
  Rational coefficient(const Monomial& m) const;

  /// 0 or 1 for homogeneous elements (zero counts as even); nullopt otherwise.
  std::optional<int> parity() const;
  bool is_homogeneous() const { return parity().has_value(); }
  SuperScalar even_part() const;
  SuperScalar odd_part() const;

  SuperScalar operator-() const;
  SuperScalar& operator+=(const SuperScalar& other);
  SuperScalar& operator-=(const SuperScalar& other);
  SuperScalar& operator*=(const SuperScalar& other);
  friend SuperScalar operator+(SuperScalar x, const SuperScalar& y) { return x += y; }
  friend SuperScalar operator-(SuperScalar x, const SuperScalar& y) { return x -= y; }
  friend SuperScalar operator*(const SuperScalar& x, const SuperScalar& y) {
    return normalize_product(x, y);
  }

  /// Same ring-compatible canonical term list.
  bool operator==(const SuperScalar& other) const;
  bool operator!=(const SuperScalar& other) const { return !(*this == other); }

  std::string str() const;

  friend SuperScalar normalize_product(const SuperScalar& x, const SuperScalar& y);

 private:
  SuperScalar(Ring ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  void add_scaled(const SuperScalar& other, int sign);
  void adopt_ring(const Ring& other);

  Ring ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const SuperScalar& x);

/// Canonical form of x*y; throws RingMismatchError for incompatible rings.
SuperScalar normalize_product(const SuperScalar& x, const SuperScalar& y);

/// Integer power; negative exponents need an invertible monomial
/// (a nonzero rational times Laurent variables only).
SuperScalar pow(const SuperScalar& x, int n);

using Bindings = std::unordered_map<std::string, SuperScalar>;

/// Simultaneous substitution.  Unbound variables are carried over by name
/// into `target` (defaults to x's ring).  Grassmann variables accept only odd
/// elements or zero, even variables only even elements.
SuperScalar substitute(const SuperScalar& x, const Bindings& bindings, Ring target = nullptr);

/// Parses the scalar grammar, e.g. "-1/2*a^2*E^-1*xi*eta" or "(c-b)*(a-d)".
SuperScalar parse_scalar(const Ring& ring, std::string_view text);

/// Monomial of a single-term scalar (coefficient ignored).
Monomial monomial_of(const SuperScalar& single_term);

/// Even relation `rel = 0` oriented by a leading commuting monomial.
class Relation {
 public:
  Relation(SuperScalar relation, Monomial leading);
  /// Convenience: leading monomial given as a product such as "a*d".
  static Relation parse(const Ring& ring, std::string_view relation, std::string_view leading);

  const SuperScalar& polynomial() const { return relation_; }
  const Monomial& leading() const { return leading_; }
  const Ring& ring() const { return relation_.ring(); }

  /// Rewrites every occurrence of the leading monomial until none remains.
  SuperScalar reduce(const SuperScalar& x) const;

 private:
  SuperScalar relation_;
  Monomial leading_;
  SuperScalar replacement_;  // leading - relation
};

SuperScalar reduce_mod_relation(const SuperScalar& x, const SuperScalar& relation,
                                const Monomial& leading);

/// Applies each relation in turn (their leading monomials must be coprime).
SuperScalar reduce_all(const SuperScalar& x, std::span<const Relation> relations);

/// Map x into `target`, renaming variables by `rename` (missing names keep their own).
SuperScalar rename_into(const SuperScalar& x, const Ring& target,
                        const std::unordered_map<std::string, std::string>& rename);

}  // namespace lsb
