#include <cmath>
#include <sstream>
#include <string>

#include "qns/errors.hpp"
#include "qns/flow.hpp"
#include "qns/format.hpp"

namespace qns {
namespace {

bool supported(int p) { return p == 2 || (p >= 2 && p % 2 == 0); }

double derivative_norm(const QElement& y, int k, int p) {
  if (k == 0) return schatten_norm(y, p);
  return schatten_norm(VelocityField(gradient(y)), p);
}

}  // namespace

double loglog_slope(const std::vector<double>& t, const std::vector<double>& y) {
  if (t.size() != y.size() || t.size() < 2) throw PreconditionError("loglog_slope: need two or more matching samples");
  const double n = static_cast<double>(t.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double a = std::log(t[i]);
    const double b = std::log(y[i]);
    sx += a;
    sy += b;
    sxx += a * a;
    sxy += a * b;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ProfileTable heat_decay_profile(const QElement& x, const std::vector<ProfileCase>& cases,
                                const std::vector<double>& times) {
  if (times.size() < 2) throw PreconditionError("heat_decay_profile: need at least two times");
  for (double t : times) {
    if (!(t > 0.0)) throw PreconditionError("heat_decay_profile: times must be positive");
  }
  for (const auto& c : cases) {
    if (!supported(c.r) || !supported(c.p)) {
      throw UnsupportedExponent("heat_decay_profile: (r, p) = (" + std::to_string(c.r) + ", " + std::to_string(c.p) +
                                ") outside {2, even}");
    }
    if (c.r > c.p) throw PreconditionError("heat_decay_profile: need r <= p");
    if (c.k != 0 && c.k != 1) throw PreconditionError("heat_decay_profile: k must be 0 or 1");
  }
  const int d = x.grid().dim();
  ProfileTable table;
  for (const auto& c : cases) {
    std::vector<double> norms;
    for (double t : times) {
      const double n = derivative_norm(heat(t, x), c.k, c.p);
      norms.push_back(n);
      table.rows.push_back({t, n, c.k, c.r, c.p});
    }
    const double ref = -0.5 * c.k - 0.5 * d * (1.0 / c.r - 1.0 / c.p);
    table.fits.push_back({c.k, c.r, c.p, loglog_slope(times, norms), ref, times.front(), times.back()});
  }
  return table;
}

std::string ProfileTable::to_csv() const {
  std::ostringstream os;
  os << "t,norm,k,r,p\n";
  for (const auto& r : rows) {
    os << format_double(r.t) << ',' << format_double(r.norm) << ',' << r.k << ',' << r.r << ',' << r.p << '\n';
  }
  for (const auto& f : fits) {
    os << "# fit k=" << f.k << " r=" << f.r << " p=" << f.p << " slope=" << format_double(f.slope)
       << " reference=" << format_double(f.reference_slope) << " window=[" << format_double(f.t_lo) << ", "
       << format_double(f.t_hi) << "]\n";
  }
  return os.str();
}

}  // namespace qns
