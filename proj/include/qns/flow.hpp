/// @file flow.hpp
/// @brief Heat semigroup, Leray projection, Duhamel quadrature and heat-decay profiles.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qns/qelement.hpp"

namespace qns {

/// d components sharing one grid and theta.
class VelocityField {
 public:
  explicit VelocityField(std::vector<QElement> components);

  int dim() const { return static_cast<int>(components_.size()); }
  const QElement& operator[](int j) const { return components_[static_cast<std::size_t>(j)]; }
  const std::vector<QElement>& components() const { return components_; }
  const FrequencyGrid& grid() const { return components_.front().grid(); }
  const ThetaMatrix& theta() const { return components_.front().theta(); }

  /// max over components of self_adjoint_defect.
  double self_adjoint_defect() const;
  bool is_self_adjoint(double tol = 1e-11) const { return self_adjoint_defect() <= tol; }

  static VelocityField zero(const FrequencyGrid& grid, const ThetaMatrix& theta);

 private:
  std::vector<QElement> components_;
};

VelocityField operator+(const VelocityField& a, const VelocityField& b);
VelocityField operator-(const VelocityField& a, const VelocityField& b);
VelocityField operator*(Complex s, const VelocityField& a);

/// Component-wise self_adjoint_part.
VelocityField symmetrized(const VelocityField& u);
/// sqrt(sum_j ||u_j||_2^2).
double l2_norm(const VelocityField& u);
/// (sum_j ||u_j||_p^p)^{1/p}.
double schatten_norm(const VelocityField& u, int p);
/// Largest coefficient of any component is non-finite.
bool has_nonfinite(const VelocityField& u);

/// Multiplier e^{-t |xi|^2}. Throws PreconditionError for t < 0.
QElement heat(double t, const QElement& x);
VelocityField heat(double t, const VelocityField& u);

/// (P u)_j = sum_k (delta_jk - xi_j xi_k / |xi|^2) u_k, with the identity at xi = 0.
VelocityField leray_project(const VelocityField& u);
std::vector<QElement> leray_project(const std::vector<QElement>& u);

/// sum_j i xi_j u_j.
QElement divergence(const VelocityField& u);
/// max |div u| over nonzero nodes relative to max |xi| |u|.
double divergence_defect(const VelocityField& u);

/// Trapezoid rule for int_0^t H(t - s) f(s) ds on samples f(i ds), i = 0..n.
/// t must equal n ds to within 1e-9 relative, else PreconditionError.
QElement duhamel(const std::vector<QElement>& samples, double ds, double t);
VelocityField duhamel(const std::vector<VelocityField>& samples, double ds, double t);

struct ProfileRow {
  double t;
  double norm;
  int k;
  int r;
  int p;
};

struct ProfileFit {
  int k;
  int r;
  int p;
  double slope;
  /// -k/2 - (d/2)(1/r - 1/p).
  double reference_slope;
  double t_lo;
  double t_hi;
};

struct ProfileTable {
  std::vector<ProfileRow> rows;
  std::vector<ProfileFit> fits;
  std::string to_csv() const;
};

struct ProfileCase {
  int k;  // derivative order, 0 or 1
  int r;
  int p;
};

/// Samples ||nabla^k H(t) x||_p at each time and fits the log-log slope per case
/// over the whole time list. r only enters the reference exponent.
ProfileTable heat_decay_profile(const QElement& x, const std::vector<ProfileCase>& cases,
                                const std::vector<double>& times);

/// Least-squares slope of log y against log t.
double loglog_slope(const std::vector<double>& t, const std::vector<double>& y);

}  // namespace qns
