#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "affinor/liealg.hpp"

namespace affinor {

/// SU(3)-invariant Riemannian metric on SU(3)/T_max, lambda_j times the Killing-form
/// inner product on m_j.
class Metric {
 public:
  /// Throws InvalidInput unless every lambda is positive and finite.
  Metric(double lambda1, double lambda2, double lambda3);

  [[nodiscard]] double lambda(int j) const { return lambda_[j]; }
  [[nodiscard]] const std::array<double, 3>& lambdas() const { return lambda_; }
  /// t = lambda2 / lambda1.
  [[nodiscard]] double t() const { return lambda_[1] / lambda_[0]; }
  /// s = lambda3 / lambda1.
  [[nodiscard]] double s() const { return lambda_[2] / lambda_[0]; }
  /// (1, t, s).
  [[nodiscard]] Metric normalized() const { return {1.0, t(), s()}; }

  static Metric from_ts(double t, double s) { return {1.0, t, s}; }

 private:
  std::array<double, 3> lambda_;
};

/// Invariant f-structure f: D(a, b, c) -> D(zeta1 i a, zeta2 i b, zeta3 i c).
class FStructure {
 public:
  /// Throws InvalidInput unless every zeta is in {-1, 0, 1}. The zero structure is allowed
  /// here; callers that need a non-trivial one check is_zero().
  FStructure(int zeta1, int zeta2, int zeta3);

  [[nodiscard]] int zeta(int j) const { return zeta_[j]; }
  [[nodiscard]] const std::array<int, 3>& zetas() const { return zeta_; }
  [[nodiscard]] int rank() const;
  [[nodiscard]] bool is_zero() const { return rank() == 0; }
  [[nodiscard]] bool is_almost_complex() const { return rank() == 6; }
  [[nodiscard]] FStructure negated() const { return {-zeta_[0], -zeta_[1], -zeta_[2]}; }
  /// The representative of {f, -f} whose first nonzero zeta is +1.
  [[nodiscard]] FStructure canonical() const;
  /// "J1".."J4", "f1".."f9" for the canonical representatives, "-J1" etc. for their negatives.
  [[nodiscard]] std::string name() const;
  /// "(1,-1,0)".
  [[nodiscard]] std::string collection() const;

  friend bool operator==(const FStructure&, const FStructure&) = default;

 private:
  std::array<int, 3> zeta_;
};

/// The 13 sign-canonical invariant f-structures in the order J1..J4, f1..f9.
const std::vector<FStructure>& all_fstructures();

double metric_inner(const Metric& g, const TangentVector& x, const TangentVector& y);
double metric_norm(const Metric& g, const TangentVector& x);
TangentVector apply_f(const FStructure& f, const TangentVector& x);

/// U(X, Y) from the block formula for the flag manifold.
TangentVector nomizu_U(const Metric& g, const TangentVector& x, const TangentVector& y);
/// U(X, Y) from 2 <U(X,Y), Z> = <X, [Z,Y]_m> + <[Z,X]_m, Y> over a g-orthonormal basis.
TangentVector nomizu_U_general(const Metric& g, const TangentVector& x, const TangentVector& y);
/// alpha(X, Y) = 1/2 [X, Y]_m + U(X, Y); the Levi-Civita connection at the origin.
TangentVector nomizu_alpha(const Metric& g, const TangentVector& x, const TangentVector& y);

/// nabla_X(f)Y = alpha(X, fY) - f alpha(X, Y).
TangentVector nabla_f(const Metric& g, const FStructure& f, const TangentVector& x, const TangentVector& y);
/// nabla_X(f)Y = 1/2 D(A, B, C) from the coordinate closed form in (t, s).
TangentVector nabla_f_closed(const Metric& g, const FStructure& f, const TangentVector& x, const TangentVector& y);

/// T(X, Y) = 1/4 f(nabla_{fX}(f) fY - nabla_{f^2 X}(f) f^2 Y).
TangentVector composition_T(const Metric& g, const FStructure& f, const TangentVector& x, const TangentVector& y);
/// T(X, Y) = 1/8 D(A', B', C') from the coordinate closed form.
TangentVector composition_T_closed(const Metric& g, const FStructure& f, const TangentVector& x,
                                   const TangentVector& y);

/// Omega(X, Y) = <X, fY>.
double fundamental_omega(const Metric& g, const FStructure& f, const TangentVector& x, const TangentVector& y);

/// (nabla Omega)(X, Y; Z) = <X, nabla_Z(f) Y>.
double nabla_omega(const Metric& g, const FStructure& f, const TangentVector& x, const TangentVector& y,
                   const TangentVector& z);
/// Max deviation of nabla Omega from a 3-form over all basis triples.
double nabla_omega_skew_residual(const Metric& g, const FStructure& f);
/// Max |nabla_X(f)X| over basis vectors and pairwise sums of basis vectors.
double killing_residual(const Metric& g, const FStructure& f);

/// N(X, Y) = 1/4([JX, JY] - J[JX, Y] - J[X, JY] - [X, Y]), brackets projected to m.
/// Throws NotAlmostComplex when some zeta is 0.
TangentVector nijenhuis_J(const FStructure& j, const TangentVector& x, const TangentVector& y);
/// f^2[X, Y] + [fX, fY] - f[fX, Y] - f[X, fY], brackets projected to m.
TangentVector nijenhuis_f(const FStructure& f, const TangentVector& x, const TangentVector& y);

/// g([X, Y]_m, Z) = g(X, [Y, Z]_m) on all basis triples (tolerance 1e-12 relative).
bool is_naturally_reductive(const Metric& g);

/// Uniform draws from the unit disk for each complex component.
class TangentSampler {
 public:
  static constexpr std::uint64_t kDefaultSeed = 42;

  explicit TangentSampler(std::uint64_t seed = kDefaultSeed, std::uint64_t stream = 0);
  TangentVector operator()();
  cplx disk();
  /// Uniform in (lo, hi).
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 rng_;
};

}  // namespace affinor
