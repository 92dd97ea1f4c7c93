#include "affinor/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace affinor {

namespace {

constexpr double kImagTol = 1e-12;

}  // namespace

TangentVector TangentVector::block(int j) const {
  TangentVector out;
  out[j] = (*this)[j];
  return out;
}

double TangentVector::norm() const { return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c)); }

std::array<TangentVector, 6> tangent_basis() {
  const cplx one(1.0, 0.0);
  const cplx i(0.0, 1.0);
  return {D(one, 0, 0), D(i, 0, 0), D(0, one, 0), D(0, i, 0), D(0, 0, one), D(0, 0, i)};
}

Eigen::Matrix<double, 6, 1> to_real(const TangentVector& x) {
  Eigen::Matrix<double, 6, 1> v;
  v << x.a.real(), x.a.imag(), x.b.real(), x.b.imag(), x.c.real(), x.c.imag();
  return v;
}

TangentVector from_real(const Eigen::Matrix<double, 6, 1>& v) {
  return D({v(0), v(1)}, {v(2), v(3)}, {v(4), v(5)});
}

SuElement E(cplx alpha1, cplx alpha2, cplx alpha3) {
  for (const cplx& al : {alpha1, alpha2, alpha3}) {
    if (std::abs(al.real()) > kImagTol) throw std::invalid_argument("E: alpha must be purely imaginary");
  }
  if (std::abs(alpha1 + alpha2 + alpha3) > kImagTol) throw std::invalid_argument("E: alphas must sum to zero");
  return {alpha1.imag(), alpha2.imag(), {}};
}

//        ( alpha1      a      conj(c) )
//  X  =  ( -conj(a)  alpha2     b     )
//        (   -c     -conj(b)  alpha3  )
Eigen::Matrix3cd SuElement::to_matrix() const {
  const cplx a = m_.a, b = m_.b, c = m_.c;
  Eigen::Matrix3cd x;
  x << alpha1(), a, std::conj(c),
      -std::conj(a), alpha2(), b,
      -c, -std::conj(b), alpha3();
  return x;
}

SuElement SuElement::from_matrix(const Eigen::Matrix3cd& x) {
  return {x(0, 0).imag(), x(1, 1).imag(), D(x(0, 1), x(1, 2), -x(2, 0))};
}

double SuElement::distance(const SuElement& o) const {
  return std::max({std::abs(beta1_ - o.beta1_), std::abs(beta2_ - o.beta2_), std::abs(m_.a - o.m_.a),
                   std::abs(m_.b - o.m_.b), std::abs(m_.c - o.m_.c)});
}

SuElement bracket(const SuElement& x, const SuElement& y) {
  const TangentVector& p = x.tangent();
  const TangentVector& q = y.tangent();

  // [D, D'] = D(conj(b c1 - b1 c), conj(c a1 - c1 a), conj(a b1 - a1 b))
  //           - 2 E(Im(a conj(a1) + conj(c) c1), Im(conj(a) a1 + b conj(b1)), Im(c conj(c1) + conj(b) b1))
  TangentVector dd = D(std::conj(p.b * q.c - q.b * p.c), std::conj(p.c * q.a - q.c * p.a),
                       std::conj(p.a * q.b - q.a * p.b));
  const double e1 = -2.0 * (p.a * std::conj(q.a) + std::conj(p.c) * q.c).imag();
  const double e2 = -2.0 * (std::conj(p.a) * q.a + p.b * std::conj(q.b)).imag();

  // [Z, X] = D(alpha1 a - a alpha2, alpha2 b - b alpha3, alpha3 c - c alpha1); [h, h] = 0.
  auto act = [](const SuElement& z, const TangentVector& v) {
    return D((z.alpha1() - z.alpha2()) * v.a, (z.alpha2() - z.alpha3()) * v.b, (z.alpha3() - z.alpha1()) * v.c);
  };
  dd += act(x, q);
  dd -= act(y, p);
  return {e1, e2, dd};
}

SuElement bracket_matrix(const SuElement& x, const SuElement& y) {
  const Eigen::Matrix3cd mx = x.to_matrix();
  const Eigen::Matrix3cd my = y.to_matrix();
  return SuElement::from_matrix(mx * my - my * mx);
}

TangentVector bracket_m(const TangentVector& x, const TangentVector& y) {
  return D(std::conj(x.b * y.c - y.b * x.c), std::conj(x.c * y.a - y.c * x.a), std::conj(x.a * y.b - y.a * x.b));
}

double bracket_self_check(const SuElement& x, const SuElement& y) {
  return bracket(x, y).distance(bracket_matrix(x, y));
}

double killing_inner(const TangentVector& x, const TangentVector& y) {
  return (x.a * std::conj(y.a) + x.b * std::conj(y.b) + x.c * std::conj(y.c)).real();
}

double killing_inner(const SuElement& x, const SuElement& y) {
  double diag = 0.0;
  for (int j = 0; j < 3; ++j) diag += x.beta(j) * y.beta(j);
  return 0.5 * diag + killing_inner(x.tangent(), y.tangent());
}

double killing_inner_matrix(const SuElement& x, const SuElement& y) {
  return -0.5 * (x.to_matrix() * y.to_matrix()).trace().real();
}

SuElement project(const SuElement& x, Part part) {
  switch (part) {
    case Part::h:
      return x.isotropy();
    case Part::m1:
      return SuElement(x.tangent().block(0));
    case Part::m2:
      return SuElement(x.tangent().block(1));
    case Part::m3:
      return SuElement(x.tangent().block(2));
  }
  return {};
}

}  // namespace affinor
