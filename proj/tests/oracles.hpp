// Independent reference implementations used only by the tests. They share no
// code with the library kernels: plain loops over physical frequencies with
// compensated summation.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qns/qelement.hpp"
#include "qns/symbol.hpp"

namespace oracle {

using qns::Complex;
using qns::QElement;

// Neumaier-compensated complex accumulator.
class Sum {
 public:
  void add(Complex v) {
    add_part(re_, cre_, v.real());
    add_part(im_, cim_, v.imag());
  }
  Complex value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_part(double& s, double& c, double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

inline std::vector<int> coords(const qns::FrequencyGrid& g, std::size_t flat) {
  const int m = g.nodes_per_axis();
  std::vector<int> k(static_cast<std::size_t>(g.dim()));
  for (int j = g.dim() - 1; j >= 0; --j) {
    k[static_cast<std::size_t>(j)] = static_cast<int>(flat % static_cast<std::size_t>(m)) - g.half_width();
    flat /= static_cast<std::size_t>(m);
  }
  return k;
}

inline long index_of(const qns::FrequencyGrid& g, const std::vector<int>& k) {
  long f = 0;
  for (int v : k) {
    if (v < -g.half_width() || v > g.half_width()) return -1;
    f = f * g.nodes_per_axis() + (v + g.half_width());
  }
  return f;
}

// w * sum_eta exp((i/2)(xi, theta eta)) x(xi - eta) y(eta), output restricted to the grid.
inline QElement twisted(const QElement& x, const QElement& y) {
  const auto& g = x.grid();
  const auto& th = x.theta();
  const int d = g.dim();
  const double dxi = g.spacing();
  std::vector<Complex> out(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto xi = coords(g, a);
    Sum s;
    for (std::size_t b = 0; b < g.size(); ++b) {
      const auto eta = coords(g, b);
      std::vector<int> diff(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) diff[static_cast<std::size_t>(j)] = xi[static_cast<std::size_t>(j)] - eta[static_cast<std::size_t>(j)];
      const long c = index_of(g, diff);
      if (c < 0) continue;
      double phase = 0.0;
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) phase += (xi[static_cast<std::size_t>(i)] * dxi) * th(i, j) * (eta[static_cast<std::size_t>(j)] * dxi);
      }
      s.add(std::polar(1.0, 0.5 * phase) * x[static_cast<std::size_t>(c)] * y[b]);
    }
    out[a] = g.cell_volume() * s.value();
  }
  return QElement(g, th, std::move(out));
}

inline QElement brute_adjoint(const QElement& x) {
  const auto& g = x.grid();
  std::vector<Complex> out(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    auto k = coords(g, a);
    for (auto& v : k) v = -v;
    out[a] = std::conj(x[static_cast<std::size_t>(index_of(g, k))]);
  }
  return QElement(g, x.theta(), std::move(out));
}

// (w sum |y|^2)^{1/4} with y = x* x, all via the brute-force product.
inline double schatten4(const QElement& x) {
  const QElement y = twisted(brute_adjoint(x), x);
  Sum s;
  for (const auto& v : y.coeffs()) s.add(std::norm(v));
  return std::pow(x.grid().cell_volume() * s.value().real(), 0.25);
}

inline double lp(const QElement& x, double p) {
  Sum s;
  for (const auto& v : x.coeffs()) s.add(std::pow(std::abs(v), p));
  return std::pow(x.grid().cell_volume() * s.value().real(), 1.0 / p);
}

// f(xi_k) = (L/M)^d sum_n phi(t_n) e^{-i (t_n, xi_k)} as a direct double loop.
inline std::vector<Complex> direct_transform(const qns::SymbolField& phi) {
  const auto& g = phi.grid();
  const int d = g.dim();
  const double h = g.box_length() / g.nodes_per_axis();
  std::vector<Complex> out(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto k = coords(g, a);
    Sum s;
    for (std::size_t n = 0; n < g.size(); ++n) {
      double arg = 0.0;
      for (int j = 0; j < d; ++j) arg += phi.position(n, j) * k[static_cast<std::size_t>(j)] * g.spacing();
      s.add(phi[n] * std::polar(1.0, -arg));
    }
    out[a] = std::pow(h, d) * s.value();
  }
  return out;
}

inline QElement random_element(const qns::FrequencyGrid& g, const qns::ThetaMatrix& th, int band,
                               std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Complex> c(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = coords(g, i);
    bool in = true;
    for (int v : k) in = in && std::abs(v) <= band;
    if (!in) continue;
    const double re = n(rng);
    const double im = n(rng);
    c[i] = Complex(re, im);
  }
  return QElement(g, th, std::move(c));
}

inline double rel_l2(const QElement& a, const QElement& b) {
  Sum num, den;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num.add(std::norm(a[i] - b[i]));
    den.add(std::norm(b[i]));
  }
  const double dd = den.value().real();
  return std::sqrt(num.value().real() / (dd > 0 ? dd : 1.0));
}

}  // namespace oracle
