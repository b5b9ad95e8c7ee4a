#include "qns/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "qns/errors.hpp"

namespace qns {

FrequencyGrid::FrequencyGrid(int d, int K, double L) : d_(d), K_(K), L_(L) {
  if (d < 1) throw PreconditionError("FrequencyGrid: dimension must be >= 1");
  if (K < 1) throw PreconditionError("FrequencyGrid: half-width K must be >= 1, got " + std::to_string(K));
  if (!(L > 0.0) || !std::isfinite(L)) throw PreconditionError("FrequencyGrid: box length must be finite and > 0");
  const std::size_t m = static_cast<std::size_t>(2 * K + 1);
  strides_.assign(static_cast<std::size_t>(d), 1);
  for (int j = d - 2; j >= 0; --j) strides_[static_cast<std::size_t>(j)] = strides_[static_cast<std::size_t>(j) + 1] * m;
  size_ = strides_[0] * m;
  spacing_ = 2.0 * std::numbers::pi / L;
  cell_volume_ = std::pow(spacing_, d);

  squared_norms_.resize(size_);
  std::vector<int> k(static_cast<std::size_t>(d));
  for (std::size_t f = 0; f < size_; ++f) {
    lattice(f, k);
    double s = 0.0;
    for (int kj : k) s += static_cast<double>(kj) * kj;
    squared_norms_[f] = s * spacing_ * spacing_;
  }
}

std::vector<int> FrequencyGrid::lattice(std::size_t flat) const {
  std::vector<int> k(static_cast<std::size_t>(d_));
  lattice(flat, k);
  return k;
}

void FrequencyGrid::lattice(std::size_t flat, std::span<int> out) const {
  const std::size_t m = static_cast<std::size_t>(nodes_per_axis());
  for (int j = d_ - 1; j >= 0; --j) {
    out[static_cast<std::size_t>(j)] = static_cast<int>(flat % m) - K_;
    flat /= m;
  }
}

std::size_t FrequencyGrid::flat(std::span<const int> k) const {
  std::size_t f = 0;
  for (int j = 0; j < d_; ++j) f += static_cast<std::size_t>(k[static_cast<std::size_t>(j)] + K_) * strides_[static_cast<std::size_t>(j)];
  return f;
}

bool FrequencyGrid::contains(std::span<const int> k) const {
  if (k.size() != static_cast<std::size_t>(d_)) return false;
  for (int kj : k) {
    if (std::abs(kj) > K_) return false;
  }
  return true;
}

std::vector<double> FrequencyGrid::frequency(std::size_t flat) const {
  std::vector<double> xi(static_cast<std::size_t>(d_));
  std::vector<int> k = lattice(flat);
  for (int j = 0; j < d_; ++j) xi[static_cast<std::size_t>(j)] = spacing_ * k[static_cast<std::size_t>(j)];
  return xi;
}

bool FrequencyGrid::on_edge(std::size_t flat) const {
  const std::size_t m = static_cast<std::size_t>(nodes_per_axis());
  for (int j = 0; j < d_; ++j) {
    const std::size_t r = flat % m;
    if (r == 0 || r == m - 1) return true;
    flat /= m;
  }
  return false;
}

}  // namespace qns
