/// @file symbol.hpp
/// @brief Classical symbols on the periodic box and the Weyl correspondence
/// u = U_theta(F(phi)).
///
/// The forward transform follows F(phi)(xi) = integral phi(t) e^{-i(t, xi)} dt,
/// discretized with weights (L/M)^d on the spatial lattice t = n L / M.
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qns/qelement.hpp"

namespace qns {

/// M^d samples of a function on [0, L)^d, row-major, slowest axis first,
/// sample n at position n L / M. The grid fixes d, M and L.
class SymbolField {
 public:
  SymbolField(FrequencyGrid grid, std::vector<Complex> samples);

  /// Samples phi at every lattice point; phi receives the position vector.
  static SymbolField sample(FrequencyGrid grid, const std::function<Complex(std::span<const double>)>& phi);
  static SymbolField constant(FrequencyGrid grid, Complex value);

  const FrequencyGrid& grid() const { return grid_; }
  std::span<const Complex> samples() const { return samples_; }
  Complex operator[](std::size_t flat) const { return samples_[flat]; }
  std::size_t size() const { return samples_.size(); }
  /// Position n_axis * L / M of a sample.
  double position(std::size_t flat, int axis) const;
  /// Riemann weight (L/M)^d of one sample.
  double sample_volume() const;

 private:
  FrequencyGrid grid_;
  std::vector<Complex> samples_;
};

/// Pointwise operations on samples sharing a lattice.
SymbolField operator+(const SymbolField& a, const SymbolField& b);
SymbolField operator-(const SymbolField& a, const SymbolField& b);
SymbolField operator*(const SymbolField& a, const SymbolField& b);
SymbolField operator*(Complex s, const SymbolField& a);

/// sqrt((L/M)^d sum |phi|^2).
double l2_norm(const SymbolField& phi);
double max_abs_difference(const SymbolField& a, const SymbolField& b);
/// Largest |Im phi| relative to the largest |phi|.
double imaginary_fraction(const SymbolField& phi);

/// Minimal-image coordinate of x on a circle of length L, in [-L/2, L/2).
double periodic_offset(double x, double L);

/// f = F(phi) on the frequency grid, wrapped as U_theta(f).
QElement from_symbol(const SymbolField& phi, const ThetaMatrix& theta);
/// Inverse of from_symbol: phi(t) = (2 pi)^{-d} sum_xi w f(xi) e^{i(xi, t)}.
SymbolField to_symbol(const QElement& x);

}  // namespace qns
