#include <cmath>

#include "qns/flow.hpp"

namespace qns {

std::vector<QElement> leray_project(const std::vector<QElement>& u) {
  return leray_project(VelocityField(u)).components();
}

VelocityField leray_project(const VelocityField& u) {
  const auto& g = u.grid();
  const int d = g.dim();
  const auto& sq = g.squared_norms();
  std::vector<std::vector<Complex>> out(static_cast<std::size_t>(d), std::vector<Complex>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (sq[i] == 0.0) {
      for (int j = 0; j < d; ++j) out[static_cast<std::size_t>(j)][i] = u[j][i];
      continue;
    }
    const auto xi = g.frequency(i);
    Complex dot = 0.0;
    for (int k = 0; k < d; ++k) dot += xi[static_cast<std::size_t>(k)] * u[k][i];
    dot /= sq[i];
    for (int j = 0; j < d; ++j) out[static_cast<std::size_t>(j)][i] = u[j][i] - xi[static_cast<std::size_t>(j)] * dot;
  }
  std::vector<QElement> c;
  for (int j = 0; j < d; ++j) c.emplace_back(g, u.theta(), std::move(out[static_cast<std::size_t>(j)]));
  return VelocityField(std::move(c));
}

QElement divergence(const VelocityField& u) {
  QElement acc(u.grid(), u.theta());
  for (int j = 0; j < u.dim(); ++j) acc += partial_derivative(j, u[j]);
  return acc;
}

double divergence_defect(const VelocityField& u) {
  const auto& g = u.grid();
  const auto& sq = g.squared_norms();
  const QElement div = divergence(u);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (sq[i] == 0.0) continue;
    num = std::max(num, std::abs(div[i]));
    double mag = 0.0;
    for (int j = 0; j < u.dim(); ++j) mag += std::norm(u[j][i]);
    den = std::max(den, std::sqrt(sq[i] * mag));
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace qns
