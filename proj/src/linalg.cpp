#include "lsb/linalg.hpp"

#include <stdexcept>

namespace lsb {

RationalMatrix::RationalMatrix(std::size_t r, std::size_t c) : cols(c), rows(r, RationalVector(c)) {}

RationalMatrix::RationalMatrix(std::vector<RationalVector> rs, std::size_t c) : cols(c), rows(std::move(rs)) {
  for (const auto& row : rows)
    if (row.size() != cols) throw PreconditionError("ragged matrix");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i) M.rows[i][i] = 1;
  return M;
}

RationalVector RationalMatrix::multiply(const RationalVector& v) const {
  if (v.size() != cols) throw PreconditionError("matrix-vector size mismatch");
  RationalVector out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j] != 0 && v[j] != 0) out[i] += rows[i][j] * v[j];
  return out;
}

Echelon bareiss_echelon(const RationalMatrix& M) {
  std::vector<std::vector<mpz_class>> a;
  for (const auto& row : M.rows) {
    mpz_class l = 1;
    for (const auto& q : row) l = lcm(l, mpz_class(q.get_den()));
    std::vector<mpz_class> zrow(M.cols);
    bool nonzero = false;
    for (std::size_t j = 0; j < M.cols; ++j) {
      zrow[j] = row[j].get_num() * (l / row[j].get_den());
      nonzero = nonzero || zrow[j] != 0;
    }
    if (nonzero) a.push_back(std::move(zrow));
  }

  Echelon out;
  out.cols = M.cols;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < M.cols && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < M.cols; ++j) {
        mpz_class num = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("Bareiss step left a remainder");
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    out.pivots.push_back(col);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& M) { return bareiss_echelon(M).rank(); }

std::vector<RationalVector> nullspace(const RationalMatrix& M) {
  Echelon E = bareiss_echelon(M);
  std::vector<bool> is_pivot(M.cols, false);
  for (auto p : E.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < M.cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(M.cols);
    x[free] = 1;
    for (std::size_t r = E.rank(); r-- > 0;) {
      std::size_t pc = E.pivots[r];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < M.cols; ++j)
        if (E.rows[r][j] != 0 && x[j] != 0) s += Rational(E.rows[r][j]) * x[j];
      x[pc] = -s / Rational(E.rows[r][pc]);
    }
    // primitive integer representative
    mpz_class l = 1, g = 0;
    for (const auto& q : x) l = lcm(l, mpz_class(q.get_den()));
    for (auto& q : x) {
      q *= l;
      g = gcd(g, mpz_class(q.get_num()));
    }
    if (g != 0)
      for (auto& q : x) q /= g;
    if (x[free] < 0)
      for (auto& q : x) q = -q;
    basis.push_back(std::move(x));
  }
  return basis;
}

bool in_span(const std::vector<RationalVector>& vectors, const RationalVector& v) {
  RationalMatrix M(vectors, v.size());
  std::size_t r0 = rank(M);
  M.rows.push_back(v);
  return rank(M) == r0;
}

std::vector<std::size_t> independent_subset(const std::vector<RationalVector>& vectors) {
  std::vector<std::size_t> keep;
  if (vectors.empty()) return keep;
  RationalMatrix M({}, vectors.front().size());
  std::size_t r = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    M.rows.push_back(vectors[i]);
    std::size_t r1 = rank(M);
    if (r1 > r) {
      keep.push_back(i);
      r = r1;
    } else {
      M.rows.pop_back();
    }
  }
  return keep;
}

}  // namespace lsb
