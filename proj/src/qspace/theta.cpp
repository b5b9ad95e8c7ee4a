#include "qns/theta.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "qns/errors.hpp"

namespace qns {

ThetaMatrix::ThetaMatrix(int d) : d_(d), entries_(static_cast<std::size_t>(d * d), 0.0) {
  if (d < 2) throw PreconditionError("ThetaMatrix: dimension must be >= 2, got " + std::to_string(d));
}

ThetaMatrix::ThetaMatrix(int d, std::vector<double> entries) : d_(d), entries_(std::move(entries)) {
  if (d < 2) throw PreconditionError("ThetaMatrix: dimension must be >= 2, got " + std::to_string(d));
  if (entries_.size() != static_cast<std::size_t>(d * d)) {
    throw PreconditionError("ThetaMatrix: expected " + std::to_string(d * d) + " entries, got " +
                            std::to_string(entries_.size()));
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double a = (*this)(i, j);
      if (!std::isfinite(a)) throw PreconditionError("ThetaMatrix: non-finite entry");
      if (a != -(*this)(j, i)) {
        throw PreconditionError("ThetaMatrix: entries (" + std::to_string(i) + "," + std::to_string(j) +
                                ") break antisymmetry");
      }
    }
  }
}

ThetaMatrix ThetaMatrix::planar(double s) { return ThetaMatrix(2, {0.0, s, -s, 0.0}); }

double ThetaMatrix::norm() const {
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(entries_.data(), d_, d_);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

bool ThetaMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](double a) { return a == 0.0; });
}

ThetaMatrix ThetaMatrix::scaled(double factor) const {
  std::vector<double> e(entries_);
  for (auto& a : e) a *= factor;
  // -0.0 == 0.0, antisymmetry survives the scaling
  return ThetaMatrix(d_, std::move(e));
}

}  // namespace qns
