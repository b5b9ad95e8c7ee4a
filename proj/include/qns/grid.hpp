/// @file grid.hpp
/// @brief Symmetric truncated frequency lattice {k * dxi : -K <= k_j <= K}.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qns {

/// Frequency lattice with box length L, spacing 2*pi/L and M = 2K+1 nodes per
/// axis. Flat storage is row-major with the slowest axis first; along every
/// axis the stored index is k + K, so k runs -K..K.
class FrequencyGrid {
 public:
  FrequencyGrid(int d, int K, double L);

  int dim() const { return d_; }
  int half_width() const { return K_; }
  double box_length() const { return L_; }
  int nodes_per_axis() const { return 2 * K_ + 1; }
  std::size_t size() const { return size_; }
  double spacing() const { return spacing_; }
  /// Riemann weight (dxi)^d.
  double cell_volume() const { return cell_volume_; }
  /// Stride of axis j in flat storage.
  std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }

  /// Lattice coordinates k (each in [-K, K]) of a flat index.
  std::vector<int> lattice(std::size_t flat) const;
  void lattice(std::size_t flat, std::span<int> out) const;
  /// Flat index of lattice coordinates; caller guarantees they are in range.
  std::size_t flat(std::span<const int> k) const;
  bool contains(std::span<const int> k) const;
  /// Flat index of -xi.
  std::size_t negated(std::size_t flat) const { return size_ - 1 - flat; }
  std::size_t origin() const { return (size_ - 1) / 2; }

  /// Physical frequency xi (length d) of a node.
  std::vector<double> frequency(std::size_t flat) const;
  /// |xi|^2 at every node.
  const std::vector<double>& squared_norms() const { return squared_norms_; }
  /// max_j |k_j| == K.
  bool on_edge(std::size_t flat) const;

  bool operator==(const FrequencyGrid& other) const {
    return d_ == other.d_ && K_ == other.K_ && L_ == other.L_;
  }

 private:
  int d_;
  int K_;
  double L_;
  std::size_t size_;
  double spacing_;
  double cell_volume_;
  std::vector<std::size_t> strides_;
  std::vector<double> squared_norms_;
};

}  // namespace qns
