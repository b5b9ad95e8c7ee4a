/// @file theta.hpp
/// @brief Antisymmetric deformation matrix of a quantum Euclidean space.
#pragma once

#include <span>
#include <vector>

namespace qns {

/// d x d real antisymmetric matrix; [x_i, x_j] = i * theta(i, j).
/// The construction rejects anything that is not exactly antisymmetric.
class ThetaMatrix {
 public:
  /// The commutative (zero) matrix of dimension d >= 2.
  explicit ThetaMatrix(int d = 2);
  /// Row-major entries; throws PreconditionError unless entries[i][j] == -entries[j][i].
  ThetaMatrix(int d, std::vector<double> entries);

  /// s * [[0, 1], [-1, 0]].
  static ThetaMatrix planar(double s);

  int dim() const { return d_; }
  double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * d_ + j)]; }
  std::span<const double> entries() const { return entries_; }

  /// Largest singular value.
  double norm() const;
  bool is_zero() const;
  ThetaMatrix scaled(double factor) const;

  bool operator==(const ThetaMatrix&) const = default;

 private:
  int d_;
  std::vector<double> entries_;
};

}  // namespace qns
