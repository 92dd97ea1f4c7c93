#pragma once

// Reference computations that share no code with the library paths they check.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "affinor/flagmetric.hpp"
#include "affinor/liealg.hpp"

namespace oracle {

using affinor::cplx;
using affinor::TangentVector;
using Mat3 = Eigen::Matrix3cd;

// [[a1, a, conj c], [-conj a, a2, b], [-c, -conj b, a3]]
inline Mat3 matrix(cplx a1, cplx a2, const TangentVector& x) {
  Mat3 m;
  m << a1, x.a, std::conj(x.c), -std::conj(x.a), a2, x.b, -x.c, -std::conj(x.b), -a1 - a2;
  return m;
}

inline Mat3 matrix(const TangentVector& x) { return matrix(0.0, 0.0, x); }

inline TangentVector tangent_of(const Mat3& m) { return {m(0, 1), m(1, 2), m(2, 0) * -1.0}; }

inline Mat3 commutator(const Mat3& x, const Mat3& y) { return x * y - y * x; }

// -1/2 Re tr(XY)
inline double killing(const Mat3& x, const Mat3& y) { return -0.5 * (x * y).trace().real(); }

inline TangentVector matrix_bracket_m(const TangentVector& x, const TangentVector& y) {
  return tangent_of(commutator(matrix(x), matrix(y)));
}

// The diagonal (h) part of a matrix, as a matrix.
inline Mat3 diagonal_part(const Mat3& m) {
  Mat3 d = Mat3::Zero();
  for (int i = 0; i < 3; ++i) d(i, i) = m(i, i);
  return d;
}

inline double metric(const std::array<double, 3>& l, const TangentVector& x, const TangentVector& y) {
  double out = 0.0;
  for (int j = 0; j < 3; ++j) out += l[j] * (x[j] * std::conj(y[j])).real();
  return out;
}

// g-orthonormal basis of m.
inline std::array<TangentVector, 6> orthonormal(const std::array<double, 3>& l) {
  std::array<TangentVector, 6> out{};
  for (int j = 0; j < 3; ++j) {
    const double k = 1.0 / std::sqrt(l[j]);
    out[2 * j][j] = k;
    out[2 * j + 1][j] = cplx(0.0, k);
  }
  return out;
}

// Levi-Civita connection at the origin from the Koszul formula for invariant fields:
// alpha(X,Y) = 1/2 [X,Y]_m + U(X,Y), 2 g(U(X,Y), Z) = g([Z,X]_m, Y) + g(X, [Z,Y]_m).
inline TangentVector alpha(const std::array<double, 3>& l, const TangentVector& x, const TangentVector& y) {
  TangentVector out = 0.5 * matrix_bracket_m(x, y);
  for (const auto& z : orthonormal(l)) {
    const double u = 0.5 * (metric(l, matrix_bracket_m(z, x), y) + metric(l, x, matrix_bracket_m(z, y)));
    out += u * z;
  }
  return out;
}

inline TangentVector apply_f(const std::array<int, 3>& zeta, const TangentVector& x) {
  TangentVector out;
  for (int j = 0; j < 3; ++j) out[j] = cplx(0.0, zeta[j]) * x[j];
  return out;
}

inline TangentVector nabla_f(const std::array<double, 3>& l, const std::array<int, 3>& zeta, const TangentVector& x,
                             const TangentVector& y) {
  return alpha(l, x, apply_f(zeta, y)) - apply_f(zeta, alpha(l, x, y));
}

// Ric(X, X) for a homogeneous metric on a compact G/H with G unimodular:
// -1/2 sum |[X,Xi]_m|^2 - 1/2 B(X,X) + 1/4 sum g([Xi,Xj]_m, X)^2, with B = -12 <,>_o on su(3).
inline double ricci_quadratic(const std::array<double, 3>& l, const TangentVector& x) {
  const auto on = orthonormal(l);
  double first = 0.0;
  double third = 0.0;
  for (const auto& xi : on) {
    const TangentVector b = matrix_bracket_m(x, xi);
    first += metric(l, b, b);
    for (const auto& xj : on) {
      const double v = metric(l, matrix_bracket_m(xi, xj), x);
      third += v * v;
    }
  }
  const double killing_xx = killing(matrix(x), matrix(x));
  return -0.5 * first + 6.0 * killing_xx + 0.25 * third;
}

inline cplx disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double re = u(rng);
    const double im = u(rng);
    if (re * re + im * im <= 1.0) return {re, im};
  }
}

inline TangentVector random_tangent(std::mt19937_64& rng) { return {disk(rng), disk(rng), disk(rng)}; }

inline double max_abs(const TangentVector& x) {
  return std::max({std::abs(x.a), std::abs(x.b), std::abs(x.c)});
}

}  // namespace oracle
