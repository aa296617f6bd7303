#include "lsb/cotensor.hpp"

#include <sstream>

namespace lsb {
namespace {

int key_parity(const SuperLieAlgebra& A, const GradedTensor::Key& key, int rank) {
  int p = 0;
  for (int s = 0; s < rank; ++s) p += A.grade(key[s]);
  return p & 1;
}

void check_indices(const SuperLieAlgebra& A, const GradedTensor& t) {
  for (const auto& [key, c] : t.coefficients())
    for (int s = 0; s < t.rank(); ++s)
      if (key[s] >= A.dim()) throw PreconditionError("tensor index outside the algebra");
}

// Sign of the product (a1(x)a2(x)a3)(b1(x)b2(x)b3) in the super tensor
// algebra: every b_q moves left past a_p for p > q.
int product_sign(const SuperLieAlgebra& A, const std::array<int, 3>& a, const std::array<int, 3>& b) {
  int e = 0;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < p; ++q)
      if (a[p] >= 0 && b[q] >= 0) e += A.grade(a[p]) * A.grade(b[q]);
  return (e & 1) ? -1 : 1;
}

}  // namespace

GradedTensor wedge(const SuperLieAlgebra& A, int x, int y) {
  GradedTensor t = GradedTensor::basis(x, y);
  t -= A.z(x, y) * GradedTensor::basis(y, x);
  return t;
}

GradedTensor tensor(const SuperLieAlgebra& A, const GradedTensor& x, const GradedTensor& y) {
  int rank = x.rank() + y.rank();
  if (rank > 3) throw PreconditionError("tensor rank above 3");
  GradedTensor out(rank);
  for (const auto& [kx, f] : x.coefficients()) {
    int px = key_parity(A, kx, x.rank());
    for (const auto& [ky, g] : y.coefficients()) {
      GradedTensor::Key key{-1, -1, -1};
      for (int s = 0; s < x.rank(); ++s) key[s] = kx[s];
      for (int s = 0; s < y.rank(); ++s) key[x.rank() + s] = ky[s];
      SuperScalar g_moved = g.even_part() + (px ? -g.odd_part() : g.odd_part());
      out.add(key, f * g_moved);
    }
  }
  return out;
}

GradedTensor ad_action(const SuperLieAlgebra& A, int g, const GradedTensor& t) {
  if (t.rank() < 2) throw PreconditionError("ad_action expects a rank-2 or rank-3 tensor");
  check_indices(A, t);
  GradedTensor out(t.rank());
  for (const auto& [key, coeff] : t.coefficients()) {
    // g passes the coefficient first
    SuperScalar c = coeff.even_part() + (A.grade(g) ? -coeff.odd_part() : coeff.odd_part());
    int sign = 1;
    for (int s = 0; s < t.rank(); ++s) {
      for (int m = 0; m < A.dim(); ++m) {
        const SuperScalar& cm = A.c(g, key[s], m);
        if (cm.is_zero()) continue;
        GradedTensor::Key k = key;
        k[s] = m;
        out.add(k, sign * (c * cm));
      }
      sign *= A.z(g, key[s]);
    }
  }
  return out;
}

RMatrix::RMatrix(const SuperLieAlgebra& A, GradedTensor r) : r_(std::move(r)) {
  if (r_.rank() != 2) throw PreconditionError("an r-matrix is a rank-2 tensor");
  check_indices(A, r_);
  for (const auto& [key, c] : r_.coefficients()) {
    int k = key[0], l = key[1];
    if (A.grade(k) != A.grade(l))
      throw PreconditionError("r-matrix couples " + A.basis_name(k) + " and " + A.basis_name(l) + " of different grades");
    auto p = c.parity();
    if (!p || *p != 0) throw ParityError("r-matrix coefficients must be even scalars");
    SuperScalar anti = c + A.z(k, l) * r_.coefficient(l, k);
    if (!anti.is_zero()) throw PreconditionError("r-matrix is not graded antisymmetric");
  }
}

GradedTensor embedded_commutator(const SuperLieAlgebra& A, const GradedTensor& x, std::array<int, 2> xs,
                                 const GradedTensor& y, std::array<int, 2> ys) {
  if (x.rank() != 2 || y.rank() != 2) throw PreconditionError("embedded commutator expects rank-2 tensors");
  GradedTensor out(3);
  for (const auto& [kx, a] : x.coefficients()) {
    for (const auto& [ky, b] : y.coefficients()) {
      if (a.parity().value_or(1) != 0 || b.parity().value_or(1) != 0)
        throw ParityError("embedded commutator expects even coefficients");
      std::array<int, 3> X{-1, -1, -1}, Y{-1, -1, -1};
      X[xs[0]] = kx[0];
      X[xs[1]] = kx[1];
      Y[ys[0]] = ky[0];
      Y[ys[1]] = ky[1];
      int shared = -1;
      for (int s = 0; s < 3; ++s) {
        if (X[s] >= 0 && Y[s] >= 0) {
          if (shared >= 0) throw PreconditionError("embedded tensors share more than one slot");
          shared = s;
        }
      }
      if (shared < 0) continue;
      int px = 0, py = 0;
      for (int s = 0; s < 3; ++s) {
        if (X[s] >= 0) px += A.grade(X[s]);
        if (Y[s] >= 0) py += A.grade(Y[s]);
      }
      // XY = s_xy (.. x y ..), YX = s_yx (.. y x ..); the supercommutator
      // XY - (-1)^{|X||Y|} YX collapses to s_xy (.. [x,y] ..).
      int s_xy = product_sign(A, X, Y);
      int s_yx = product_sign(A, Y, X);
      int lhs = (((px & py) & 1) ? -1 : 1) * s_yx;
      if (lhs != s_xy * A.z(X[shared], Y[shared]))
        throw std::logic_error("Koszul sign bookkeeping is inconsistent");
      SuperScalar ab = a * b;
      for (int m = 0; m < A.dim(); ++m) {
        const SuperScalar& cm = A.c(X[shared], Y[shared], m);
        if (cm.is_zero()) continue;
        GradedTensor::Key key{};
        for (int s = 0; s < 3; ++s) key[s] = X[s] >= 0 ? X[s] : Y[s];
        key[shared] = m;
        out.add(key, s_xy * (ab * cm));
      }
    }
  }
  return out;
}

GradedTensor schouten(const SuperLieAlgebra& A, const RMatrix& r) {
  const GradedTensor& t = r.tensor();
  GradedTensor out = embedded_commutator(A, t, {0, 1}, t, {0, 2});
  out += embedded_commutator(A, t, {0, 1}, t, {1, 2});
  out += embedded_commutator(A, t, {0, 2}, t, {1, 2});
  return out;
}

GradedTensor parse_wedge_sum(const SuperLieAlgebra& A, const Ring& ring, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<std::string, std::size_t>> tokens;
  {
    std::string s(text);
    std::size_t pos = 0;
    while (pos < s.size()) {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos >= s.size()) break;
      std::size_t start = pos;
      while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
      tokens.emplace_back(s.substr(start, pos - start), start + 1);
    }
  }
  std::size_t t = 0;
  if (tokens.size() >= 2 && tokens[1].first == "=") t = 2;

  auto as_wedge = [&](const std::string& tok) -> std::optional<std::pair<int, int>> {
    for (std::size_t p = tok.find('^'); p != std::string::npos; p = tok.find('^', p + 1)) {
      std::string l = tok.substr(0, p), r = tok.substr(p + 1);
      if (A.has(l) && A.has(r)) return std::make_pair(A.index_of(l), A.index_of(r));
    }
    return std::nullopt;
  };

  GradedTensor out(2);
  if (t == tokens.size()) throw ParseError("empty wedge sum", 1, 1);
  if (t + 1 == tokens.size() && tokens[t].first == "0") return out;
  while (t < tokens.size()) {
    int sign = 1;
    if (tokens[t].first == "+" || tokens[t].first == "-") {
      sign = tokens[t].first == "-" ? -1 : 1;
      ++t;
    }
    if (t >= tokens.size()) throw ParseError("dangling sign", 1, tokens.back().second);
    SuperScalar coeff = 1;
    if (!as_wedge(tokens[t].first)) {
      try {
        coeff = parse_scalar(ring, tokens[t].first);
      } catch (const ParseError& e) {
        throw ParseError("bad coefficient '" + tokens[t].first + "'", 1, tokens[t].second + e.column() - 1);
      }
      ++t;
    }
    if (t >= tokens.size()) throw ParseError("expected <X>^<Y> after coefficient", 1, tokens.back().second);
    auto w = as_wedge(tokens[t].first);
    if (!w) throw ParseError("expected <X>^<Y>, got '" + tokens[t].first + "'", 1, tokens[t].second);
    out += (sign * coeff) * wedge(A, w->first, w->second);
    ++t;
  }
  return out;
}

RMatrix parse_rmatrix(const SuperLieAlgebra& A, const Ring& ring, std::string_view text) {
  return RMatrix(A, parse_wedge_sum(A, ring, text));
}

std::string render_tensor(const SuperLieAlgebra& A, const GradedTensor& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : t.coefficients()) {
    os << (first ? "" : " + ") << "(" << c << ")";
    first = false;
    for (int s = 0; s < t.rank(); ++s) os << (s ? "(x)" : "*") << A.basis_name(key[s]);
  }
  return os.str();
}

std::string render_wedge(const SuperLieAlgebra& A, const GradedTensor& t) {
  if (t.rank() != 2) throw PreconditionError("render_wedge expects a rank-2 tensor");
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : t.coefficients()) {
    int k = key[0], l = key[1];
    if (k > l) continue;
    SuperScalar coeff = c;
    if (k == l) {
      if (A.grade(k) == 0) continue;
      coeff = Rational(1, 2) * c;
    }
    std::string s = coeff.str();
    bool negative = coeff.size() == 1 && coeff.terms().begin()->second < 0;
    if (negative) s = (-coeff).str();
    std::string compact;
    for (char ch : s)
      if (ch != ' ') compact += ch;
    if (coeff.size() > 1) compact = "(" + compact + ")";
    if (compact == "1") compact.clear();
    if (first)
      os << (negative ? "-" : "") << compact;
    else
      os << (negative ? " - " : " + ") << compact;
    os << (compact.empty() ? "" : " ") << A.basis_name(k) << "^" << A.basis_name(l);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace lsb
