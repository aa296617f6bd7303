#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsb/bialgebra.hpp"

namespace lsb {

enum class Group { SuperE2, OSp };

/// Group name as used on the command line: "super-e2" or "osp".
std::string to_string(Group g);
Group parse_group(std::string_view name);

/// Functions on a supergroup together with the ring relations.
///
/// super-E(2): c (family parameter), s, a, b, E = e^{s/2} (Laurent), xi, eta.
/// OSp(1|2):  a, b, c, d, alpha, delta with ad - bc + alpha delta = 1
/// (leading monomial ad).
class CoordinateRing {
 public:
  static const CoordinateRing& super_e2();
  static const CoordinateRing& osp();
  static const CoordinateRing& of(Group g);

  Group group() const { return group_; }
  const Ring& ring() const { return ring_; }
  const std::vector<Relation>& relations() const { return relations_; }
  /// The Lie superalgebra whose invariant vector fields act on this ring.
  const SuperLieAlgebra& algebra() const { return algebra_; }

  SuperScalar var(std::string_view name) const { return SuperScalar::variable(ring_, name); }
  SuperScalar reduce(const SuperScalar& x) const { return reduce_all(x, relations_); }
  SuperScalar parse(std::string_view text) const;
  /// Value at the group identity; the family parameter c stays symbolic.
  SuperScalar at_identity(const SuperScalar& x) const;

  /// Table generators with display names: a, b, e^s, xi, eta or a, b, c, d, alpha, delta.
  struct Generator {
    std::string name;
    SuperScalar value;
  };
  const std::vector<Generator>& generators() const { return generators_; }
  /// Unordered pairs in table order; even diagonal pairs are skipped.
  std::vector<std::pair<int, int>> table_pairs() const;

  // OSp abbreviations e = 1 + alpha delta, gamma = c alpha - a delta, beta = d alpha - b delta.
  SuperScalar e() const;
  SuperScalar gamma() const;
  SuperScalar beta() const;

  /// G x G: every variable except c is duplicated with suffix 1 and 2; the
  /// Grassmann variables of copy 1 precede those of copy 2, so f(x)g is the
  /// product f1 g2.
  const Ring& doubled() const { return doubled_; }
  const std::vector<Relation>& doubled_relations() const { return doubled_relations_; }
  SuperScalar embed(const SuperScalar& x, int copy) const;
  SuperScalar coproduct(const SuperScalar& x) const;

 private:
  explicit CoordinateRing(Group g);

  Group group_;
  Ring ring_, doubled_;
  std::vector<Relation> relations_, doubled_relations_;
  SuperLieAlgebra algebra_;
  std::vector<Generator> generators_;
  std::vector<SuperScalar> coproduct_images_;  // per ring variable
};

enum class Side { Left, Right };                 // left or right derivative
enum class Invariance { LeftInv, RightInv };     // Y (left-invariant) or X (right-invariant)

/// Graded derivation given by its values on the ring variables.
struct VectorField {
  std::string name;
  int parity = 0;
  Side side = Side::Left;
  std::vector<SuperScalar> images;  // indexed by ring variable
};

/// Left derivative: F(fg) = F(f) g + (-1)^{|F||f|} f F(g).
/// Right derivative: F(fg) = f F(g) + (-1)^{|F||g|} F(f) g.
SuperScalar apply_field(const VectorField& F, const SuperScalar& f);

/// The invariant vector field of algebra generator `k`, as tabulated
/// (E is handled by the chain rule F(E) = F(s) E / 2).
VectorField invariant_field(const CoordinateRing& R, Invariance inv, Side side, int k);

/// Poisson structure { , } = r-part (Y and X fields) + phi-part (X fields only):
///   {f,g} = (Y^r_k f) r^{kj} (Y^l_j g) - (X^r_k f) r^{kj} (X^l_j g) + (X^r_j f) phi^{jk} (X^l_k g).
/// Coefficients are tensor components: a wedge x^y contributes x(x)y - z(x,y) y(x)x.
struct PoissonStructure {
  enum class Kind { Coboundary, Cocycle, Mixed };
  Kind kind = Kind::Coboundary;
  Group group = Group::SuperE2;
  std::string name;
  GradedTensor r{2};    // constant coefficients
  GradedTensor phi{2};  // coefficients in the coordinate ring
};

PoissonStructure coboundary_structure(Group g, const RMatrix& r, std::string name = "");
/// Throws PreconditionError unless phi vanishes at the identity.
PoissonStructure cocycle_structure(Group g, const GradedTensor& phi, std::string name = "");
/// r plus c s P+^P- (super-E(2) only).
PoissonStructure mixed_structure(const RMatrix& r, std::string name = "");

/// "i".."vi" for super-e2, "1".."3" for osp (structure 3 at t = 1).
PoissonStructure named_structure(Group g, std::string_view id);
std::vector<std::string> structure_ids(Group g);

/// c s P+^P- and the closed form for case (iv) with its overall scale set to 1.
GradedTensor phi_case_i();
GradedTensor phi_case_iv();

SuperScalar bracket(const PoissonStructure& P, const SuperScalar& f, const SuperScalar& g);
/// Product structure on G x G (the two copies Poisson-commute).
SuperScalar bracket_doubled(const PoissonStructure& P, const SuperScalar& f, const SuperScalar& g);

/// antisymmetry, leibniz (sampled), jacobi (generator triples), coproduct (generator pairs).
AxiomReport check_poisson_axioms(const PoissonStructure& P, int leibniz_samples = 20, unsigned seed = 1);

struct TableRow {
  std::string pair;  // e.g. "{a,xi}"
  SuperScalar value;
};
/// One row per generator pair in table order; `scale` multiplies every value.
std::vector<TableRow> render_table(const PoissonStructure& P, const Rational& scale = 1);

// --------------------------------------------------------------------------
// Printed tables

struct PrintedCell {
  std::string text;        // as transcribed; empty means a blank cell
  std::string normalized;  // after removing unbalanced brackets
  bool typo = false;       // normalization changed the text
};

struct PrintedTable {
  std::string id;  // "table1" or "table2"
  Group group;
  std::vector<std::string> columns;  // structure ids
  Rational scale = 1;                // computed brackets are multiplied by this
  std::vector<std::string> rows;     // "{a,b}", ...
  std::vector<std::vector<PrintedCell>> cells;  // [row][column]
};

/// Format: "# comment", "group <name>", "scale <q>", "columns <id> ...", then
/// rows "{x,y} | cell | cell ...".  Printed notation e^s, e^{-s}, e^{2s} is accepted.
PrintedTable parse_printed_table(std::string_view id, std::string_view text);
PrintedTable load_printed_table(const std::string& path, std::string_view id);

struct CellCheck {
  std::string row, column;
  enum class Status { Match, Erratum, Mismatch } status = Status::Match;
  SuperScalar printed, computed;
  std::string note;
};
std::string to_string(CellCheck::Status s);

/// Compares every cell with recomputation.  A mismatching cell whose printed
/// value does not vanish at the identity while the recomputed one does is an
/// erratum; a cell that only needed bracket cleanup is a match with a note.
std::vector<CellCheck> compare_table(const PrintedTable& table);

}  // namespace lsb
