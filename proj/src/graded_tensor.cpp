#include "lsb/graded_tensor.hpp"

namespace lsb {

GradedTensor::GradedTensor(int rank) : rank_(rank) {
  if (rank < 1 || rank > 3) throw PreconditionError("tensor rank must be 1, 2 or 3");
}

GradedTensor GradedTensor::basis(int i) {
  GradedTensor t(1);
  t.add({i, -1, -1}, 1);
  return t;
}

GradedTensor GradedTensor::basis(int i, int j) {
  GradedTensor t(2);
  t.add({i, j, -1}, 1);
  return t;
}

GradedTensor GradedTensor::basis(int i, int j, int k) {
  GradedTensor t(3);
  t.add({i, j, k}, 1);
  return t;
}

SuperScalar GradedTensor::coefficient(int i, int j, int k) const {
  auto it = coeffs_.find({i, j, k});
  return it == coeffs_.end() ? SuperScalar() : it->second;
}

void GradedTensor::add(const Key& key, const SuperScalar& value) {
  if (value.is_zero()) return;
  for (int s = 0; s < 3; ++s) {
    if ((s < rank_) != (key[s] >= 0)) throw PreconditionError("tensor key does not match rank");
  }
  auto [it, inserted] = coeffs_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

GradedTensor GradedTensor::operator-() const {
  GradedTensor out(rank_);
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

GradedTensor& GradedTensor::operator+=(const GradedTensor& other) {
  if (other.rank_ != rank_) throw PreconditionError("rank mismatch in tensor sum");
  for (const auto& [k, c] : other.coeffs_) add(k, c);
  return *this;
}

GradedTensor& GradedTensor::operator-=(const GradedTensor& other) {
  if (other.rank_ != rank_) throw PreconditionError("rank mismatch in tensor difference");
  for (const auto& [k, c] : other.coeffs_) add(k, -c);
  return *this;
}

GradedTensor operator*(const SuperScalar& s, const GradedTensor& t) {
  GradedTensor out(t.rank_);
  for (const auto& [k, c] : t.coeffs_) out.add(k, s * c);
  return out;
}

bool GradedTensor::operator==(const GradedTensor& other) const {
  if (rank_ != other.rank_) return is_zero() && other.is_zero();
  GradedTensor diff = *this;
  diff -= other;
  return diff.is_zero();
}

GradedTensor GradedTensor::map(const std::function<SuperScalar(const SuperScalar&)>& f) const {
  GradedTensor out(rank_);
  for (const auto& [k, c] : coeffs_) out.add(k, f(c));
  return out;
}

}  // namespace lsb
