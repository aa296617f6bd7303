#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "lsb/superscalar.hpp"

namespace lsb {

enum class Grade : int { Even = 0, Odd = 1 };

inline int parity_of(Grade g) { return static_cast<int>(g); }

/// Element of G, G(x)G or G(x)G(x)G: sum of coeff * g_i1 (x) ... (x) g_ir with
/// the scalar coefficient written to the left of the basis elements.
class GradedTensor {
 public:
  using Key = std::array<int, 3>;  // unused slots hold -1

  explicit GradedTensor(int rank = 1);

  static GradedTensor basis(int i);
  static GradedTensor basis(int i, int j);
  static GradedTensor basis(int i, int j, int k);

  int rank() const { return rank_; }
  const std::map<Key, SuperScalar>& coefficients() const { return coeffs_; }
  SuperScalar coefficient(int i, int j = -1, int k = -1) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds `value` to the coefficient at `key`, dropping zeros.
  void add(const Key& key, const SuperScalar& value);

  GradedTensor operator-() const;
  GradedTensor& operator+=(const GradedTensor& other);
  GradedTensor& operator-=(const GradedTensor& other);
  friend GradedTensor operator+(GradedTensor x, const GradedTensor& y) { return x += y; }
  friend GradedTensor operator-(GradedTensor x, const GradedTensor& y) { return x -= y; }
  /// Left multiplication by a scalar: s * (c g...) = (s c) g...
  friend GradedTensor operator*(const SuperScalar& s, const GradedTensor& t);

  bool operator==(const GradedTensor& other) const;
  bool operator!=(const GradedTensor& other) const { return !(*this == other); }

  /// Applies f to every coefficient (e.g. substitution or relation reduction).
  GradedTensor map(const std::function<SuperScalar(const SuperScalar&)>& f) const;

 private:
  int rank_;
  std::map<Key, SuperScalar> coeffs_;
};

}  // namespace lsb
