#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "qns/errors.hpp"
#include "qns/qelement.hpp"

namespace qns {
namespace {

double l2_squared(std::span<const Complex> c) {
  double s = 0.0;
  for (const auto& v : c) s += std::norm(v);
  return s;
}

bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

}  // namespace

double schatten_norm(const QElement& x, int p) {
  if (p < 2 || p % 2 != 0) {
    throw UnsupportedExponent("schatten_norm: only even p >= 2 is supported, got p=" + std::to_string(p));
  }
  const double w = x.grid().cell_volume();
  if (p == 2) return std::sqrt(w * l2_squared(x.coeffs()));

  const int m = p / 2;
  const QElement y = adjoint(x) * x;
  Complex tr;
  if (is_power_of_two(m)) {
    QElement z = y;
    for (int e = 2; e < m; e *= 2) z = z * z;
    tr = trace_product(z, z);
  } else {
    QElement z = y;
    for (int e = 1; e < m - 1; ++e) z = z * y;
    tr = trace_product(z, y);
  }
  return std::pow(std::max(0.0, tr.real()), 1.0 / p);
}

double opnorm_estimate(const QElement& x, int iterations) {
  if (iterations < 1) throw PreconditionError("opnorm_estimate: iterations must be >= 1");
  const QElement xs = adjoint(x);
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  std::vector<Complex> v0(x.size());
  for (auto& c : v0) c = Complex(gauss(rng), gauss(rng));
  const double n0 = std::sqrt(l2_squared(v0));
  for (auto& c : v0) c /= n0;

  QElement v(x.grid(), x.theta(), std::move(v0));
  double ratio = 0.0;
  for (int i = 0; i < iterations; ++i) {
    QElement u = xs * (x * v);
    ratio = std::sqrt(l2_squared(u.coeffs()));
    if (ratio == 0.0) return 0.0;
    v = (1.0 / ratio) * std::move(u);
  }
  return std::sqrt(ratio);
}

double coeff_lp_norm(const QElement& x, double p) {
  if (!(p >= 1.0)) throw PreconditionError("coeff_lp_norm: p must be >= 1");
  const auto c = x.coeffs();
  if (std::isinf(p)) {
    double mx = 0.0;
    for (const auto& v : c) mx = std::max(mx, std::abs(v));
    return mx;
  }
  double s = 0.0;
  for (const auto& v : c) s += std::pow(std::abs(v), p);
  return std::pow(x.grid().cell_volume() * s, 1.0 / p);
}

}  // namespace qns
