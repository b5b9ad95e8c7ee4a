#include <cmath>

#include "qns/ns.hpp"

namespace qns {

VelocityField nonlinear(const VelocityField& u, Nonlinearity form, bool divergence_form) {
  const int d = u.dim();
  std::vector<QElement> out;
  out.reserve(static_cast<std::size_t>(d));
  if (divergence_form) {
    for (int k = 0; k < d; ++k) {
      QElement acc(u.grid(), u.theta());
      for (int j = 0; j < d; ++j) {
        QElement prod = u[j] * u[k];
        if (form == Nonlinearity::S) prod = Complex(0.5) * (prod + u[k] * u[j]);
        acc += partial_derivative(j, prod);
      }
      out.push_back(std::move(acc));
    }
    return VelocityField(std::move(out));
  }
  for (int k = 0; k < d; ++k) {
    const auto grad = gradient(u[k]);
    QElement acc(u.grid(), u.theta());
    for (int j = 0; j < d; ++j) {
      const auto& g = grad[static_cast<std::size_t>(j)];
      if (form == Nonlinearity::A) {
        acc += u[j] * g;
      } else {
        acc += Complex(0.5) * (u[j] * g + g * u[j]);
      }
    }
    out.push_back(std::move(acc));
  }
  return VelocityField(std::move(out));
}

QElement pressure(const VelocityField& u, Nonlinearity form) {
  const QElement div = divergence(nonlinear(u, form));
  const auto& sq = u.grid().squared_norms();
  std::vector<Complex> p(div.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = sq[i] == 0.0 ? Complex(0.0) : div[i] / sq[i];
  return QElement(u.grid(), u.theta(), std::move(p));
}

double energy_production(const VelocityField& u, const VelocityField& f) {
  double s = 0.0;
  for (int k = 0; k < u.dim(); ++k) s += trace_product(f[k], u[k]).real();
  return s;
}

}  // namespace qns
