#include <cmath>
#include <limits>

#include "qns/errors.hpp"
#include "qns/harmonic.hpp"

namespace qns {
namespace {

void check_spec(const BesovSpec& spec) {
  if (spec.p != 2 && (spec.p < 2 || spec.p % 2 != 0)) {
    throw UnsupportedExponent("besov_norm: p=" + std::to_string(spec.p) + " is not 2 or even");
  }
  if (!(spec.q >= 1.0)) throw PreconditionError("besov_norm: q must be >= 1");
  if (!std::isfinite(spec.alpha)) throw PreconditionError("besov_norm: alpha must be finite");
}

}  // namespace

double besov_norm(const QElement& x, const BesovSpec& spec) {
  check_spec(spec);
  const DyadicPartition part(x.grid());
  const int lo = spec.homogeneous ? part.j_min() : 0;
  const int hi = part.j_max();
  const bool sup = std::isinf(spec.q);
  double acc = 0.0;
  for (int j = lo; j <= hi; ++j) {
    const QElement block = spec.homogeneous ? lp_block(x, j) : lp_block_inhomogeneous(x, j);
    const double b = std::exp2(j * spec.alpha) * schatten_norm(block, spec.p);
    if (sup) {
      acc = std::max(acc, b);
    } else {
      acc += std::pow(b, spec.q);
    }
  }
  return sup ? acc : std::pow(acc, 1.0 / spec.q);
}

double sobolev_norm(const QElement& x, double s, int p, bool homogeneous) {
  const auto& sq = x.grid().squared_norms();
  const std::size_t origin = x.grid().origin();
  if (homogeneous && s < 0.0 && x[origin] != Complex(0.0)) {
    throw SingularMultiplier("sobolev_norm: |xi|^s with s < 0 is singular at xi = 0 and the mean mode is nonzero");
  }
  std::vector<Complex> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    double m;
    if (homogeneous) {
      m = (i == origin) ? (s == 0.0 ? 1.0 : 0.0) : std::pow(sq[i], 0.5 * s);
    } else {
      m = std::pow(1.0 + sq[i], 0.5 * s);
    }
    out[i] = m * x[i];
  }
  return schatten_norm(QElement(x.grid(), x.theta(), std::move(out)), p);
}

double vector_schatten_norm(const std::vector<QElement>& v, int p) {
  double acc = 0.0;
  for (const auto& c : v) acc += std::pow(schatten_norm(c, p), p);
  return std::pow(acc, 1.0 / p);
}

}  // namespace qns
