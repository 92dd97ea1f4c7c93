#include "affinor/flagmetric.hpp"

#include <algorithm>
#include <cmath>

#include "affinor/errors.hpp"

namespace affinor {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

Metric::Metric(double lambda1, double lambda2, double lambda3) : lambda_{lambda1, lambda2, lambda3} {
  for (double l : lambda_) {
    if (!(l > 0.0) || !std::isfinite(l)) throw InvalidInput("metric characteristic values must be positive");
  }
}

FStructure::FStructure(int zeta1, int zeta2, int zeta3) : zeta_{zeta1, zeta2, zeta3} {
  for (int z : zeta_) {
    if (z < -1 || z > 1) throw InvalidInput("f-structure characteristic values must be in {-1, 0, 1}");
  }
}

int FStructure::rank() const {
  return 2 * static_cast<int>(std::count_if(zeta_.begin(), zeta_.end(), [](int z) { return z != 0; }));
}

FStructure FStructure::canonical() const {
  for (int z : zeta_) {
    if (z > 0) return *this;
    if (z < 0) return negated();
  }
  return *this;
}

const std::vector<FStructure>& all_fstructures() {
  static const std::vector<FStructure> list{
      {1, 1, 1},  {1, -1, 1}, {1, 1, -1}, {1, -1, -1},                         // J1..J4
      {1, 1, 0},  {1, 0, 1},  {0, 1, 1},  {1, -1, 0},  {1, 0, -1}, {0, 1, -1},  // f1..f6
      {1, 0, 0},  {0, 1, 0},  {0, 0, 1}};                                      // f7..f9
  return list;
}

std::string FStructure::name() const {
  const FStructure c = canonical();
  const auto& list = all_fstructures();
  const auto it = std::find(list.begin(), list.end(), c);
  if (it == list.end()) return "0";
  const auto idx = static_cast<int>(it - list.begin());
  std::string base = idx < 4 ? "J" + std::to_string(idx + 1) : "f" + std::to_string(idx - 3);
  return c == *this ? base : "-" + base;
}

std::string FStructure::collection() const {
  return "(" + std::to_string(zeta_[0]) + "," + std::to_string(zeta_[1]) + "," + std::to_string(zeta_[2]) + ")";
}

double metric_inner(const Metric& g, const TangentVector& x, const TangentVector& y) {
  double sum = 0.0;
  for (int j = 0; j < 3; ++j) sum += g.lambda(j) * (x[j] * std::conj(y[j])).real();
  return sum;
}

double metric_norm(const Metric& g, const TangentVector& x) { return std::sqrt(metric_inner(g, x, x)); }

TangentVector apply_f(const FStructure& f, const TangentVector& x) {
  return D(static_cast<double>(f.zeta(0)) * kI * x.a, static_cast<double>(f.zeta(1)) * kI * x.b,
           static_cast<double>(f.zeta(2)) * kI * x.c);
}

TangentVector nomizu_U(const Metric& g, const TangentVector& x, const TangentVector& y) {
  // For X in m_p, Y in m_q, p != q, r the remaining index, both orderings of the block
  // formula give U = -(lambda_p - lambda_q) / (2 lambda_r) [X, Y].
  TangentVector out;
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      if (p == q) continue;
      const int r = 3 - p - q;
      const double k = -(g.lambda(p) - g.lambda(q)) / (2.0 * g.lambda(r));
      out += k * bracket_m(x.block(p), y.block(q));
    }
  }
  return out;
}

TangentVector nomizu_U_general(const Metric& g, const TangentVector& x, const TangentVector& y) {
  TangentVector out;
  const auto basis = tangent_basis();
  for (int i = 0; i < 6; ++i) {
    const TangentVector e = (1.0 / std::sqrt(g.lambda(i / 2))) * basis[i];
    const double coeff =
        0.5 * (metric_inner(g, x, bracket_m(e, y)) + metric_inner(g, bracket_m(e, x), y));
    out += coeff * e;
  }
  return out;
}

TangentVector nomizu_alpha(const Metric& g, const TangentVector& x, const TangentVector& y) {
  return 0.5 * bracket_m(x, y) + nomizu_U(g, x, y);
}

TangentVector nabla_f(const Metric& g, const FStructure& f, const TangentVector& x, const TangentVector& y) {
  return nomizu_alpha(g, x, apply_f(f, y)) - apply_f(f, nomizu_alpha(g, x, y));
}

TangentVector nabla_f_closed(const Metric& g, const FStructure& f, const TangentVector& x, const TangentVector& y) {
  const double t = g.t();
  const double s = g.s();
  const double z1 = f.zeta(0), z2 = f.zeta(1), z3 = f.zeta(2);
  const cplx a = x.a, b = x.b, c = x.c;
  const cplx a1 = y.a, b1 = y.b, c1 = y.c;

  const cplx A = std::conj(kI * ((z1 + z3) * (1 + s - t) * b * c1 + (z1 + z2) * (s - t - 1) * b1 * c));
  const cplx B =
      std::conj(kI * ((z2 + z1) * (1 + (1 - s) / t) * c * a1 + (z2 + z3) * ((1 - s) / t - 1) * c1 * a));
  const cplx C =
      std::conj(kI * ((z3 + z2) * ((t - 1) / s + 1) * a * b1 + (z3 + z1) * ((t - 1) / s - 1) * a1 * b));
  return 0.5 * D(A, B, C);
}

TangentVector composition_T(const Metric& g, const FStructure& f, const TangentVector& x, const TangentVector& y) {
  const TangentVector fx = apply_f(f, x);
  const TangentVector fy = apply_f(f, y);
  const TangentVector ffx = apply_f(f, fx);
  const TangentVector ffy = apply_f(f, fy);
  return 0.25 * apply_f(f, nabla_f(g, f, fx, fy) - nabla_f(g, f, ffx, ffy));
}

TangentVector composition_T_closed(const Metric& g, const FStructure& f, const TangentVector& x,
                                   const TangentVector& y) {
  const double t = g.t();
  const double s = g.s();
  const double z1 = f.zeta(0), z2 = f.zeta(1), z3 = f.zeta(2);
  const double zzz = z1 * z2 * z3;
  const cplx a = x.a, b = x.b, c = x.c;
  const cplx a1 = y.a, b1 = y.b, c1 = y.c;

  const cplx A = -zzz * (1 + z2 * z3) *
                 ((z1 + z3) * (1 + s - t) * std::conj(b * c1) + (z1 + z2) * (s - t - 1) * std::conj(b1 * c));
  const cplx B = -zzz * (1 + z1 * z3) *
                 ((z2 + z1) * (1 + (1 - s) / t) * std::conj(c * a1) +
                  (z2 + z3) * ((1 - s) / t - 1) * std::conj(c1 * a));
  const cplx C = -zzz * (1 + z1 * z2) *
                 ((z3 + z2) * ((t - 1) / s + 1) * std::conj(a * b1) +
                  (z3 + z1) * ((t - 1) / s - 1) * std::conj(a1 * b));
  return 0.125 * D(A, B, C);
}

double fundamental_omega(const Metric& g, const FStructure& f, const TangentVector& x, const TangentVector& y) {
  return metric_inner(g, x, apply_f(f, y));
}

double nabla_omega(const Metric& g, const FStructure& f, const TangentVector& x, const TangentVector& y,
                   const TangentVector& z) {
  return metric_inner(g, x, nabla_f(g, f, z, y));
}

double nabla_omega_skew_residual(const Metric& g, const FStructure& f) {
  const auto basis = tangent_basis();
  double worst = 0.0;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      for (const auto& z : basis) {
        const double v = nabla_omega(g, f, x, y, z);
        worst = std::max(worst, std::abs(v + nabla_omega(g, f, y, x, z)));
        worst = std::max(worst, std::abs(v + nabla_omega(g, f, x, z, y)));
      }
    }
  }
  return worst;
}

double killing_residual(const Metric& g, const FStructure& f) {
  const auto basis = tangent_basis();
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const TangentVector x = i == j ? basis[i] : basis[i] + basis[j];
      worst = std::max(worst, nabla_f(g, f, x, x).norm());
    }
  }
  return worst;
}

TangentVector nijenhuis_J(const FStructure& j, const TangentVector& x, const TangentVector& y) {
  if (!j.is_almost_complex()) throw NotAlmostComplex("Nijenhuis tensor of J needs rank 6, got " + j.collection());
  const TangentVector jx = apply_f(j, x);
  const TangentVector jy = apply_f(j, y);
  return 0.25 * (bracket_m(jx, jy) - apply_f(j, bracket_m(jx, y)) - apply_f(j, bracket_m(x, jy)) - bracket_m(x, y));
}

TangentVector nijenhuis_f(const FStructure& f, const TangentVector& x, const TangentVector& y) {
  const TangentVector fx = apply_f(f, x);
  const TangentVector fy = apply_f(f, y);
  return apply_f(f, apply_f(f, bracket_m(x, y))) + bracket_m(fx, fy) - apply_f(f, bracket_m(fx, y)) -
         apply_f(f, bracket_m(x, fy));
}

bool is_naturally_reductive(const Metric& g) {
  const auto basis = tangent_basis();
  const double scale = std::max({g.lambda(0), g.lambda(1), g.lambda(2)});
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      for (const auto& z : basis) {
        const double lhs = metric_inner(g, bracket_m(x, y), z);
        const double rhs = metric_inner(g, x, bracket_m(y, z));
        if (std::abs(lhs - rhs) > 1e-12 * scale) return false;
      }
    }
  }
  return true;
}

TangentSampler::TangentSampler(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  rng_.seed(seq);
}

cplx TangentSampler::disk() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::sqrt(u(rng_));
  const double phi = 2.0 * 3.14159265358979323846 * u(rng_);
  return std::polar(r, phi);
}

TangentVector TangentSampler::operator()() {
  const cplx a = disk();
  const cplx b = disk();
  const cplx c = disk();
  return D(a, b, c);
}

double TangentSampler::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng_);
}

}  // namespace affinor
