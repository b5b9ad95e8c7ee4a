/// @file qelement.hpp
/// @brief Elements of the quantum Euclidean space stored as Weyl coefficients,
/// and the algebra, trace, multipliers and norms acting on them.
///
/// An element is x = U_theta(f) = integral f(xi) lambda_theta(xi) dxi, with f
/// sampled on a FrequencyGrid and integrals replaced by Riemann sums of weight
/// w = (dxi)^d. The trace reads f(0) with no weight, so that
/// tau(U(f)) = f(0) and ||U(f)||_2 = ||f||_2 hold on the lattice.
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qns/grid.hpp"
#include "qns/theta.hpp"

namespace qns {

using Complex = std::complex<double>;

/// Immutable coefficient array over a grid, tied to a deformation matrix.
class QElement {
 public:
  QElement(FrequencyGrid grid, ThetaMatrix theta);
  QElement(FrequencyGrid grid, ThetaMatrix theta, std::vector<Complex> coeffs);

  /// Single mode: coefficient `value` at lattice node k, zero elsewhere.
  static QElement mode(FrequencyGrid grid, ThetaMatrix theta, std::span<const int> k, Complex value);
  /// The unit of the algebra: delta at xi = 0 with height 1/w.
  static QElement identity(FrequencyGrid grid, ThetaMatrix theta);
  /// Coefficients f(xi) evaluated from a function of the frequency vector.
  static QElement from_coefficients(FrequencyGrid grid, ThetaMatrix theta,
                                    const std::function<Complex(std::span<const double>)>& f);

  const FrequencyGrid& grid() const { return grid_; }
  const ThetaMatrix& theta() const { return theta_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](std::size_t flat) const { return coeffs_[flat]; }
  Complex at(std::span<const int> k) const;
  std::size_t size() const { return coeffs_.size(); }

  /// Same grid and theta.
  bool compatible(const QElement& other) const { return grid_ == other.grid_ && theta_ == other.theta_; }

  QElement& operator+=(const QElement& other);
  QElement& operator-=(const QElement& other);
  QElement& operator*=(Complex s);

 private:
  FrequencyGrid grid_;
  ThetaMatrix theta_;
  std::vector<Complex> coeffs_;
};

QElement operator+(QElement a, const QElement& b);
QElement operator-(QElement a, const QElement& b);
QElement operator*(Complex s, QElement a);
/// Twisted convolution (the operator product).
QElement operator*(const QElement& a, const QElement& b);

/// Throws PreconditionError naming `where` unless a and b share grid and theta.
void require_compatible(const QElement& a, const QElement& b, const char* where);

/// (x *_theta y)(xi) = w * sum_eta e^{(i/2)(xi, theta eta)} x(xi - eta) y(eta), Galerkin-truncated.
QElement twisted_convolution(const QElement& x, const QElement& y);

/// result(xi) = conj(x(-xi)).
QElement adjoint(const QElement& x);
/// (x + x*) / 2.
QElement self_adjoint_part(const QElement& x);
/// max |x(-xi) - conj(x(xi))| relative to max |x|.
double self_adjoint_defect(const QElement& x);

/// tau(x) = x(0).
Complex trace(const QElement& x);
/// trace(x * y) without forming the product: w * sum_eta x(-eta) y(eta).
Complex trace_product(const QElement& x, const QElement& y);

/// result(xi) = m(xi) x(xi); throws EvaluationError naming the node if m is not finite.
QElement fourier_multiplier(const std::function<Complex(std::span<const double>)>& m, const QElement& x);

/// i xi_axis x(xi), axis in [0, d).
QElement partial_derivative(int axis, const QElement& x);
std::vector<QElement> gradient(const QElement& x);
/// Multiplier -|xi|^2.
QElement laplacian(const QElement& x);

/// Even-p Schatten norm. p = 2 is the weighted l2 norm of the coefficients;
/// p = 2m evaluates tau((x* x)^m) by twisted products. Throws UnsupportedExponent otherwise.
double schatten_norm(const QElement& x, int p);

/// Lower estimate of the operator norm of y -> x * y on the truncated
/// coefficient space by power iteration on T*T; nondecreasing in iterations.
/// Near the lattice edge the truncation error is not controlled.
double opnorm_estimate(const QElement& x, int iterations);

/// Classical Riemann-sum L_p norm of the coefficient array, p >= 1 or +infinity.
double coeff_lp_norm(const QElement& x, double p);

/// Fraction of the l2 mass of the coefficients sitting on the outermost shell.
double edge_mass(const QElement& x);
/// Warn threshold used by diagnostics for edge_mass.
inline constexpr double kEdgeMassWarn = 1e-6;

/// Dilation onto R^d_{theta/eps^2}: the symbol phi becomes phi(eps .). The new
/// grid has box length L/eps (spacing eps*dxi, same K) and node k carries
/// eps^{-d} f(k dxi). The map is multiplicative and scales every Schatten
/// norm by exactly eps^{-d/p}.
QElement dilation(const QElement& x, double eps);

}  // namespace qns
