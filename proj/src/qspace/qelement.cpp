#include "qns/qelement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qns/errors.hpp"

namespace qns {

QElement::QElement(FrequencyGrid grid, ThetaMatrix theta)
    : grid_(std::move(grid)), theta_(std::move(theta)), coeffs_(grid_.size(), Complex{}) {
  if (theta_.dim() != grid_.dim()) throw PreconditionError("QElement: theta and grid dimensions differ");
}

QElement::QElement(FrequencyGrid grid, ThetaMatrix theta, std::vector<Complex> coeffs)
    : grid_(std::move(grid)), theta_(std::move(theta)), coeffs_(std::move(coeffs)) {
  if (theta_.dim() != grid_.dim()) throw PreconditionError("QElement: theta and grid dimensions differ");
  if (coeffs_.size() != grid_.size()) {
    throw PreconditionError("QElement: expected " + std::to_string(grid_.size()) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
  }
}

QElement QElement::mode(FrequencyGrid grid, ThetaMatrix theta, std::span<const int> k, Complex value) {
  if (!grid.contains(k)) throw PreconditionError("QElement::mode: node outside the grid");
  std::vector<Complex> c(grid.size(), Complex{});
  c[grid.flat(k)] = value;
  return QElement(std::move(grid), std::move(theta), std::move(c));
}

QElement QElement::identity(FrequencyGrid grid, ThetaMatrix theta) {
  std::vector<Complex> c(grid.size(), Complex{});
  c[grid.origin()] = 1.0 / grid.cell_volume();
  return QElement(std::move(grid), std::move(theta), std::move(c));
}

QElement QElement::from_coefficients(FrequencyGrid grid, ThetaMatrix theta,
                                     const std::function<Complex(std::span<const double>)>& f) {
  std::vector<Complex> c(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) c[i] = f(grid.frequency(i));
  return QElement(std::move(grid), std::move(theta), std::move(c));
}

Complex QElement::at(std::span<const int> k) const {
  if (!grid_.contains(k)) throw PreconditionError("QElement::at: node outside the grid");
  return coeffs_[grid_.flat(k)];
}

QElement& QElement::operator+=(const QElement& other) {
  require_compatible(*this, other, "operator+=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

QElement& QElement::operator-=(const QElement& other) {
  require_compatible(*this, other, "operator-=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

QElement& QElement::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

QElement operator+(QElement a, const QElement& b) { return a += b; }
QElement operator-(QElement a, const QElement& b) { return a -= b; }
QElement operator*(Complex s, QElement a) { return a *= s; }
QElement operator*(const QElement& a, const QElement& b) { return twisted_convolution(a, b); }

void require_compatible(const QElement& a, const QElement& b, const char* where) {
  if (!(a.grid() == b.grid())) throw PreconditionError(std::string(where) + ": operands live on different grids");
  if (!(a.theta() == b.theta())) throw PreconditionError(std::string(where) + ": operands carry different theta");
}

QElement adjoint(const QElement& x) {
  const auto c = x.coeffs();
  std::vector<Complex> out(c.size());
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = std::conj(c[n - 1 - i]);
  return QElement(x.grid(), x.theta(), std::move(out));
}

QElement self_adjoint_part(const QElement& x) {
  const auto c = x.coeffs();
  const std::size_t n = c.size();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (c[i] + std::conj(c[n - 1 - i]));
  return QElement(x.grid(), x.theta(), std::move(out));
}

double self_adjoint_defect(const QElement& x) {
  const auto c = x.coeffs();
  const std::size_t n = c.size();
  double defect = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    defect = std::max(defect, std::abs(c[n - 1 - i] - std::conj(c[i])));
    scale = std::max(scale, std::abs(c[i]));
  }
  return scale > 0.0 ? defect / scale : 0.0;
}

Complex trace(const QElement& x) { return x[x.grid().origin()]; }

Complex trace_product(const QElement& x, const QElement& y) {
  require_compatible(x, y, "trace_product");
  const auto a = x.coeffs();
  const auto b = y.coeffs();
  const std::size_t n = a.size();
  Complex s{};
  for (std::size_t i = 0; i < n; ++i) s += a[n - 1 - i] * b[i];
  return x.grid().cell_volume() * s;
}

QElement fourier_multiplier(const std::function<Complex(std::span<const double>)>& m, const QElement& x) {
  const auto& g = x.grid();
  std::vector<Complex> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto xi = g.frequency(i);
    const Complex v = m(xi);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::string node;
      for (int kj : g.lattice(i)) node += (node.empty() ? "" : ",") + std::to_string(kj);
      throw EvaluationError("fourier_multiplier: non-finite multiplier at node k=(" + node + ")");
    }
    out[i] = v * x[i];
  }
  return QElement(g, x.theta(), std::move(out));
}

QElement partial_derivative(int axis, const QElement& x) {
  const auto& g = x.grid();
  if (axis < 0 || axis >= g.dim()) {
    throw PreconditionError("partial_derivative: axis " + std::to_string(axis) + " outside [0, " +
                            std::to_string(g.dim()) + ")");
  }
  const std::size_t stride = g.stride(axis);
  const std::size_t m = static_cast<std::size_t>(g.nodes_per_axis());
  const int K = g.half_width();
  std::vector<Complex> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int k = static_cast<int>((i / stride) % m) - K;
    out[i] = Complex(0.0, g.spacing() * k) * x[i];
  }
  return QElement(g, x.theta(), std::move(out));
}

std::vector<QElement> gradient(const QElement& x) {
  std::vector<QElement> g;
  g.reserve(static_cast<std::size_t>(x.grid().dim()));
  for (int j = 0; j < x.grid().dim(); ++j) g.push_back(partial_derivative(j, x));
  return g;
}

QElement laplacian(const QElement& x) {
  const auto& s = x.grid().squared_norms();
  std::vector<Complex> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -s[i] * x[i];
  return QElement(x.grid(), x.theta(), std::move(out));
}

double edge_mass(const QElement& x) {
  const auto& g = x.grid();
  double edge = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double a = std::norm(x[i]);
    total += a;
    if (g.on_edge(i)) edge += a;
  }
  return total > 0.0 ? edge / total : 0.0;
}

QElement dilation(const QElement& x, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw PreconditionError("dilation: eps must be finite and > 0");
  if (eps == 1.0) return x;
  const auto& g = x.grid();
  FrequencyGrid scaled(g.dim(), g.half_width(), g.box_length() / eps);
  const double factor = std::pow(eps, -g.dim());
  std::vector<Complex> c(x.coeffs().begin(), x.coeffs().end());
  for (auto& v : c) v *= factor;
  return QElement(std::move(scaled), x.theta().scaled(1.0 / (eps * eps)), std::move(c));
}

}  // namespace qns
