/// @file harmonic.hpp
/// @brief Littlewood-Paley blocks, Besov and Sobolev norms, and the numerical
/// inequality battery.
#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qns/qelement.hpp"

namespace qns {

/// Smooth radial bump: 1 on [0, 1], 0 on [2, inf), C^inf glue in between.
double dyadic_bump(double r);
/// Ring profile bump(r) - bump(2r), supported in [1/2, 2].
double dyadic_ring(double r);

/// Dyadic rings phi_j(xi) = ring(2^{-j} |xi|) covering the nonzero nodes of a grid.
class DyadicPartition {
 public:
  explicit DyadicPartition(const FrequencyGrid& grid);

  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  bool covers(int j) const { return j >= j_min_ && j <= j_max_; }
  static double ring(int j, double radius);
  /// Inhomogeneous low block 1 - sum_{j>=1} phi_j.
  double low_block(double radius) const;

  /// min over r of sum_j phi_j(r)^2; sqrt of it bounds B^0_{2,2} below by the L2 norm.
  static double overlap_floor();

 private:
  int j_min_;
  int j_max_;
};

/// Homogeneous block Delta_j x; throws PreconditionError if the partition does not cover j.
QElement lp_block(const QElement& x, int j);
/// Inhomogeneous block: j = 0 is the low block, j >= 1 the homogeneous ring.
QElement lp_block_inhomogeneous(const QElement& x, int j);

struct BesovSpec {
  double alpha = 0.0;
  int p = 2;
  double q = 2.0;  // +infinity gives the sup norm
  bool homogeneous = true;
};

double besov_norm(const QElement& x, const BesovSpec& spec);

/// ||(-Delta)^{s/2} x||_p (homogeneous) or ||(1 - Delta)^{s/2} x||_p.
/// Homogeneous with s < 0 and x(0) != 0 throws SingularMultiplier.
double sobolev_norm(const QElement& x, double s, int p, bool homogeneous);

/// (sum_j ||v_j||_p^p)^{1/p} for a vector of elements.
double vector_schatten_norm(const std::vector<QElement>& v, int p);

struct BatteryRecord {
  std::string name;
  int trials = 0;
  int passes = 0;
  double worst_ratio = 0.0;
  std::string notes;
  bool hard = false;
};

struct BatteryReport {
  std::vector<BatteryRecord> records;  // sorted by name
  bool all_hard_passed() const;
  std::string to_json() const;
};

struct BatteryOptions {
  int K = 12;
  double L = 2.0 * 3.14159265358979323846;
  double theta12 = 0.8;
  /// Inputs are supported in |k_j| <= band; band <= K/2 keeps x* x on the grid.
  int band = 6;
  /// Leray projection under test; defaults to leray_project.
  std::function<std::vector<QElement>(const std::vector<QElement>&)> projector;
};

/// Runs the named inequality checks over seeded random band-limited inputs.
/// Throws PreconditionError for trials < 1.
BatteryReport inequality_battery(std::uint64_t seed, int trials, const BatteryOptions& options = {});

}  // namespace qns
