#include <algorithm>
#include <cmath>
#include <string>

#include "qns/errors.hpp"
#include "qns/harmonic.hpp"

namespace qns {
namespace {

double glue(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

}  // namespace

double dyadic_bump(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double a = glue(2.0 - r);
  const double b = glue(r - 1.0);
  return a / (a + b);
}

double dyadic_ring(double r) { return dyadic_bump(r) - dyadic_bump(2.0 * r); }

DyadicPartition::DyadicPartition(const FrequencyGrid& grid) {
  const double r_min = grid.spacing();
  const double r_max = std::sqrt(static_cast<double>(grid.dim())) * grid.half_width() * grid.spacing();
  j_min_ = static_cast<int>(std::floor(std::log2(r_min))) - 1;
  j_max_ = static_cast<int>(std::ceil(std::log2(r_max))) + 1;
}

double DyadicPartition::ring(int j, double radius) { return dyadic_ring(std::ldexp(radius, -j)); }

double DyadicPartition::low_block(double radius) const {
  double s = 0.0;
  for (int j = 1; j <= j_max_; ++j) s += ring(j, radius);
  return 1.0 - s;
}

double DyadicPartition::overlap_floor() {
  static const double floor = [] {
    // scale invariance: one octave [1, 2] sees every overlap pattern
    double m = 1.0;
    constexpr int n = 20000;
    for (int i = 0; i <= n; ++i) {
      const double r = 1.0 + static_cast<double>(i) / n;
      const double a = dyadic_ring(r);
      const double b = dyadic_ring(0.5 * r);
      m = std::min(m, a * a + b * b);
    }
    return m;
  }();
  return floor;
}

QElement lp_block(const QElement& x, int j) {
  const DyadicPartition part(x.grid());
  if (!part.covers(j)) {
    throw PreconditionError("lp_block: j=" + std::to_string(j) + " outside the covered range [" +
                            std::to_string(part.j_min()) + ", " + std::to_string(part.j_max()) + "]");
  }
  const auto& s = x.grid().squared_norms();
  std::vector<Complex> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = DyadicPartition::ring(j, std::sqrt(s[i])) * x[i];
  return QElement(x.grid(), x.theta(), std::move(out));
}

QElement lp_block_inhomogeneous(const QElement& x, int j) {
  if (j >= 1) return lp_block(x, j);
  if (j < 0) throw PreconditionError("lp_block_inhomogeneous: j must be >= 0");
  const DyadicPartition part(x.grid());
  const auto& s = x.grid().squared_norms();
  std::vector<Complex> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = part.low_block(std::sqrt(s[i])) * x[i];
  return QElement(x.grid(), x.theta(), std::move(out));
}

}  // namespace qns
