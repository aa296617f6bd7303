// Algebra definition files:
//
//   [algebra] name = super_e2
//   basis = H:even P+:even P-:even D+:odd D-:odd
//   [brackets]            # omitted pairs are zero; only i<=j pairs listed
//   H P+ = 1 P+
//   D+ D+ = 1 P+
//
// Right-hand sides are lists of "<rational> <basis-name>" pairs.

#include <set>
#include <sstream>

#include "lsb/superalgebra.hpp"

namespace lsb {
namespace {

std::vector<std::pair<std::string, std::size_t>> tokenize(const std::string& line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) break;
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    out.emplace_back(line.substr(start, pos - start), start + 1);
  }
  return out;
}

Rational parse_rational(const std::string& token, std::size_t line, std::size_t col) {
  try {
    Rational r(token);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    return r;
  } catch (const std::exception&) {
    throw ParseError("expected a rational, got '" + token + "'", line, col);
  }
}

}  // namespace

SuperLieAlgebra parse_algebra(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::string name;
  std::optional<SuperLieAlgebra> algebra;
  bool in_brackets = false;
  std::set<std::pair<int, int>> seen_pairs;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0].first == "[algebra]") {
      if (tokens.size() != 4 || tokens[1].first != "name" || tokens[2].first != "=")
        throw ParseError("expected '[algebra] name = <ident>'", line_no, tokens[0].second);
      name = tokens[3].first;
      continue;
    }
    if (tokens[0].first == "[brackets]") {
      if (!algebra) throw ParseError("[brackets] before basis", line_no, tokens[0].second);
      in_brackets = true;
      continue;
    }
    if (!in_brackets) {
      if (tokens[0].first != "basis" || tokens.size() < 2 || tokens[1].first != "=")
        throw ParseError("expected 'basis = ...'", line_no, tokens[0].second);
      if (algebra) throw ParseError("basis declared twice", line_no, tokens[0].second);
      std::vector<BasisElement> basis;
      for (std::size_t t = 2; t < tokens.size(); ++t) {
        const auto& [tok, col] = tokens[t];
        auto colon = tok.rfind(':');
        if (colon == std::string::npos || colon == 0) throw ParseError("expected <name>:<even|odd>", line_no, col);
        std::string grade = tok.substr(colon + 1);
        if (grade != "even" && grade != "odd") throw ParseError("grade must be 'even' or 'odd'", line_no, col + colon + 1);
        std::string bname = tok.substr(0, colon);
        for (const auto& b : basis)
          if (b.name == bname) throw ParseError("duplicate basis name '" + bname + "'", line_no, col);
        basis.push_back({bname, grade == "even" ? Grade::Even : Grade::Odd});
      }
      if (basis.empty()) throw ParseError("empty basis", line_no, tokens[0].second);
      algebra.emplace(name.empty() ? "unnamed" : name, std::move(basis));
      continue;
    }

    // bracket line: X Y = q1 Z1 q2 Z2 ...
    if (tokens.size() < 3 || tokens[2].first != "=")
      throw ParseError("expected '<X> <Y> = <rational> <Z> ...'", line_no, tokens[0].second);
    auto lookup = [&](const std::pair<std::string, std::size_t>& tok) {
      if (!algebra->has(tok.first)) throw ParseError("unknown basis element '" + tok.first + "'", line_no, tok.second);
      return algebra->index_of(tok.first);
    };
    int i = lookup(tokens[0]);
    int j = lookup(tokens[1]);
    if (i > j) throw ParseError("pairs must be listed with i <= j in basis order", line_no, tokens[0].second);
    if (!seen_pairs.insert({i, j}).second) throw ParseError("pair listed twice", line_no, tokens[0].second);
    if ((tokens.size() - 3) % 2 != 0) throw ParseError("right-hand side must be <rational> <name> pairs", line_no, tokens.back().second);
    std::vector<std::pair<int, SuperScalar>> rhs;
    for (std::size_t t = 3; t < tokens.size(); t += 2) {
      Rational q = parse_rational(tokens[t].first, line_no, tokens[t].second);
      rhs.emplace_back(lookup(tokens[t + 1]), SuperScalar(q));
    }
    if (i == j && algebra->grade(i) == 0 && !rhs.empty())
      throw ParseError("bracket of an even element with itself must vanish", line_no, tokens[0].second);
    algebra->set_bracket(i, j, rhs);
  }
  if (!algebra) throw ParseError("missing basis declaration", line_no, 1);
  return *algebra;
}

std::string render_algebra(const SuperLieAlgebra& A) {
  std::ostringstream os;
  os << "[algebra] name = " << A.name() << "\n";
  os << "basis =";
  for (const auto& b : A.basis()) os << " " << b.name << ":" << (b.grade == Grade::Even ? "even" : "odd");
  os << "\n[brackets]\n";
  for (int i = 0; i < A.dim(); ++i)
    for (int j = i; j < A.dim(); ++j) {
      std::ostringstream rhs;
      for (int k = 0; k < A.dim(); ++k) {
        const auto& v = A.c(i, j, k);
        if (v.is_zero()) continue;
        if (!v.is_constant()) throw PreconditionError("only rational structure constants can be rendered");
        rhs << " " << v.constant_term().get_str() << " " << A.basis_name(k);
      }
      if (!rhs.str().empty()) os << A.basis_name(i) << " " << A.basis_name(j) << " =" << rhs.str() << "\n";
    }
  return os.str();
}

}  // namespace lsb
