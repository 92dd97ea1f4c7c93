#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "affinor/flagmetric.hpp"

namespace affinor {

/// R(X,Y)Z = alpha(X, alpha(Y,Z)) - alpha(Y, alpha(X,Z)) - alpha([X,Y]_m, Z) - [[X,Y]_h, Z].
TangentVector riemann_R(const Metric& g, const TangentVector& x, const TangentVector& y, const TangentVector& z);

/// g(R(X,Y)Y, X) / (g(X,X) g(Y,Y) - g(X,Y)^2).
double sectional_curvature(const Metric& g, const TangentVector& x, const TangentVector& y);

/// Ricci form on m in tangent_basis().
struct RicciForm {
  Eigen::Matrix<double, 6, 6> matrix;
  /// Ric(u, u) for the Killing-unit vectors D(1,0,0), D(0,1,0), D(0,0,1).
  std::array<double, 3> blocks{};
};

RicciForm ricci(const Metric& g);
/// Only the three block values; cheaper than ricci().
std::array<double, 3> ricci_blocks(const Metric& g);

struct EinsteinFit {
  /// Least-squares rho in Ric ~ rho g.
  double constant = 0.0;
  /// |Ric - rho g| / |Ric|.
  double residual = 0.0;
};
EinsteinFit einstein_fit(const Metric& g);

struct GridRange {
  double lo = 0.01;
  double hi = 2.5;
  double step = 0.01;
};

struct ScanGrid {
  GridRange t;
  GridRange s;
};

struct EinsteinPoint {
  double t = 0.0;
  double s = 0.0;
  double constant = 0.0;
  double residual = 0.0;
};

struct ScanOptions {
  /// A refined point is kept when its residual is strictly below this.
  double tol = 1e-9;
  /// Grid minima above this residual are not refined.
  double candidate_threshold = 0.05;
  /// Refinement stops once the Newton step is below this.
  double refine_tol = 1e-10;
};

/// Grid search for local minima of the Einstein residual, refined by Newton iteration on
/// Ric = rho g. Only points inside the grid window are returned, sorted by (t, s).
/// Throws EmptyGrid when a range contains no grid value.
std::vector<EinsteinPoint> einstein_scan(const ScanGrid& grid, const ScanOptions& opts = {});

/// Smallest integer triple proportional to (1, t, s) when one with entries <= 12 exists
/// within 1e-8, e.g. "(2,1,1)"; otherwise the normalized triple.
std::string homothety_label(double t, double s);

}  // namespace affinor
