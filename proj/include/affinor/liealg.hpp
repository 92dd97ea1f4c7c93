#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace affinor {

using cplx = std::complex<double>;

/// Components of su(3) = h + m1 + m2 + m3.
enum class Part { h, m1, m2, m3 };

/// Element of m = D(a, b, c).
struct TangentVector {
  cplx a{};
  cplx b{};
  cplx c{};

  /// Component j (0, 1, 2) = a, b, c.
  [[nodiscard]] cplx operator[](int j) const { return j == 0 ? a : (j == 1 ? b : c); }
  cplx& operator[](int j) { return j == 0 ? a : (j == 1 ? b : c); }

  TangentVector& operator+=(const TangentVector& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    return *this;
  }
  TangentVector& operator-=(const TangentVector& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    return *this;
  }
  TangentVector& operator*=(cplx k) {
    a *= k;
    b *= k;
    c *= k;
    return *this;
  }
  friend TangentVector operator+(TangentVector x, const TangentVector& y) { return x += y; }
  friend TangentVector operator-(TangentVector x, const TangentVector& y) { return x -= y; }
  friend TangentVector operator*(cplx k, TangentVector x) { return x *= k; }
  friend TangentVector operator*(double k, TangentVector x) { return x *= cplx(k); }
  friend TangentVector operator-(TangentVector x) { return x *= cplx(-1.0); }
  friend bool operator==(const TangentVector&, const TangentVector&) = default;

  /// Only block j (0, 1, 2) kept.
  [[nodiscard]] TangentVector block(int j) const;
  /// Euclidean norm sqrt(|a|^2 + |b|^2 + |c|^2); equals the Killing-form norm.
  [[nodiscard]] double norm() const;
};

/// D(a, b, c).
inline TangentVector D(cplx a, cplx b, cplx c) { return {a, b, c}; }

/// The standard real basis of m: D(1,0,0), D(i,0,0), D(0,1,0), D(0,i,0), D(0,0,1), D(0,0,i).
std::array<TangentVector, 6> tangent_basis();
/// Real coordinates in tangent_basis().
Eigen::Matrix<double, 6, 1> to_real(const TangentVector& x);
TangentVector from_real(const Eigen::Matrix<double, 6, 1>& v);

/// An element of su(3) stored as E(alpha1, alpha2, alpha3) + D(a, b, c).
///
/// The diagonal part is kept as the imaginary parts beta_j of alpha_j = i beta_j, with
/// beta3 = -beta1 - beta2, so the element is traceless and anti-Hermitian by construction.
class SuElement {
 public:
  SuElement() = default;
  SuElement(double beta1, double beta2, const TangentVector& m) : beta1_(beta1), beta2_(beta2), m_(m) {}
  explicit SuElement(const TangentVector& m) : m_(m) {}

  [[nodiscard]] cplx alpha1() const { return {0.0, beta1_}; }
  [[nodiscard]] cplx alpha2() const { return {0.0, beta2_}; }
  [[nodiscard]] cplx alpha3() const { return {0.0, -beta1_ - beta2_}; }
  [[nodiscard]] double beta(int j) const { return j == 0 ? beta1_ : (j == 1 ? beta2_ : -beta1_ - beta2_); }

  /// m-component.
  [[nodiscard]] const TangentVector& tangent() const { return m_; }
  /// h-component (tangent part zeroed).
  [[nodiscard]] SuElement isotropy() const { return {beta1_, beta2_, {}}; }

  [[nodiscard]] Eigen::Matrix3cd to_matrix() const;
  /// Reads the coordinates of an anti-Hermitian traceless matrix. No validation.
  static SuElement from_matrix(const Eigen::Matrix3cd& x);

  SuElement& operator+=(const SuElement& o) {
    beta1_ += o.beta1_;
    beta2_ += o.beta2_;
    m_ += o.m_;
    return *this;
  }
  SuElement& operator-=(const SuElement& o) {
    beta1_ -= o.beta1_;
    beta2_ -= o.beta2_;
    m_ -= o.m_;
    return *this;
  }
  SuElement& operator*=(double k) {
    beta1_ *= k;
    beta2_ *= k;
    m_ *= cplx(k);
    return *this;
  }
  friend SuElement operator+(SuElement x, const SuElement& y) { return x += y; }
  friend SuElement operator-(SuElement x, const SuElement& y) { return x -= y; }
  friend SuElement operator*(double k, SuElement x) { return x *= k; }

  /// Max-abs distance over the six stored coordinates.
  [[nodiscard]] double distance(const SuElement& o) const;

 private:
  double beta1_ = 0.0;
  double beta2_ = 0.0;
  TangentVector m_{};
};

/// E(alpha1, alpha2, alpha3); alphas must be purely imaginary and sum to zero.
/// Throws std::invalid_argument otherwise.
SuElement E(cplx alpha1, cplx alpha2, cplx alpha3);

/// Lie bracket via the coordinate formulas.
SuElement bracket(const SuElement& x, const SuElement& y);
/// Lie bracket as the 3x3 matrix commutator of the reconstructions.
SuElement bracket_matrix(const SuElement& x, const SuElement& y);
/// m-projection of [X, Y] for X, Y in m.
TangentVector bracket_m(const TangentVector& x, const TangentVector& y);

/// Self-test: coordinate bracket against the matrix commutator.
/// Returns the max-abs coordinate discrepancy.
double bracket_self_check(const SuElement& x, const SuElement& y);

/// <X, Y>_o = -1/2 Re tr(XY).
double killing_inner(const SuElement& x, const SuElement& y);
double killing_inner(const TangentVector& x, const TangentVector& y);
/// Same form evaluated on the reconstructed matrices.
double killing_inner_matrix(const SuElement& x, const SuElement& y);

SuElement project(const SuElement& x, Part part);

}  // namespace affinor
