#include "affinor/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "affinor/errors.hpp"

namespace affinor {

TangentVector riemann_R(const Metric& g, const TangentVector& x, const TangentVector& y, const TangentVector& z) {
  const SuElement xy = bracket(SuElement(x), SuElement(y));
  const TangentVector iso = bracket(xy.isotropy(), SuElement(z)).tangent();
  return nomizu_alpha(g, x, nomizu_alpha(g, y, z)) - nomizu_alpha(g, y, nomizu_alpha(g, x, z)) -
         nomizu_alpha(g, xy.tangent(), z) - iso;
}

double sectional_curvature(const Metric& g, const TangentVector& x, const TangentVector& y) {
  const double num = metric_inner(g, riemann_R(g, x, y, y), x);
  const double gxy = metric_inner(g, x, y);
  return num / (metric_inner(g, x, x) * metric_inner(g, y, y) - gxy * gxy);
}

namespace {

std::array<TangentVector, 6> orthonormal_basis(const Metric& g) {
  auto basis = tangent_basis();
  for (int i = 0; i < 6; ++i) basis[i] = (1.0 / std::sqrt(g.lambda(i / 2))) * basis[i];
  return basis;
}

double ricci_entry(const Metric& g, const std::array<TangentVector, 6>& on, const TangentVector& y,
                   const TangentVector& z) {
  double sum = 0.0;
  for (const auto& e : on) sum += metric_inner(g, riemann_R(g, e, y, z), e);
  return sum;
}

}  // namespace

RicciForm ricci(const Metric& g) {
  const auto on = orthonormal_basis(g);
  const auto basis = tangent_basis();
  RicciForm r;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) r.matrix(a, b) = ricci_entry(g, on, basis[a], basis[b]);
  }
  for (int j = 0; j < 3; ++j) r.blocks[j] = r.matrix(2 * j, 2 * j);
  return r;
}

std::array<double, 3> ricci_blocks(const Metric& g) {
  const auto on = orthonormal_basis(g);
  const auto basis = tangent_basis();
  std::array<double, 3> out{};
  for (int j = 0; j < 3; ++j) out[j] = ricci_entry(g, on, basis[2 * j], basis[2 * j]);
  return out;
}

namespace {

EinsteinFit fit_blocks(const std::array<double, 3>& r, const Metric& g) {
  double rl = 0.0, ll = 0.0, rr = 0.0;
  for (int j = 0; j < 3; ++j) {
    rl += r[j] * g.lambda(j);
    ll += g.lambda(j) * g.lambda(j);
    rr += r[j] * r[j];
  }
  EinsteinFit fit;
  fit.constant = rl / ll;
  double dev = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double d = r[j] - fit.constant * g.lambda(j);
    dev += d * d;
  }
  fit.residual = rr > 0.0 ? std::sqrt(dev / rr) : std::sqrt(dev);
  return fit;
}

// Ric = rho g with lambda = (1, t, s) means r2 = t r1 and r3 = s r1.
Eigen::Vector2d einstein_equations(double t, double s) {
  const auto r = ricci_blocks(Metric::from_ts(t, s));
  return {r[1] - t * r[0], r[2] - s * r[0]};
}

bool refine(double& t, double& s, double step_tol) {
  constexpr int kMaxIter = 60;
  constexpr double kFd = 1e-7;
  for (int it = 0; it < kMaxIter; ++it) {
    if (t <= 0.0 || s <= 0.0) return false;
    const Eigen::Vector2d f = einstein_equations(t, s);
    Eigen::Matrix2d jac;
    jac.col(0) = (einstein_equations(t + kFd, s) - einstein_equations(t - kFd, s)) / (2 * kFd);
    jac.col(1) = (einstein_equations(t, s + kFd) - einstein_equations(t, s - kFd)) / (2 * kFd);
    const Eigen::FullPivLU<Eigen::Matrix2d> lu(jac);
    if (!lu.isInvertible()) return false;
    Eigen::Vector2d delta = -lu.solve(f);

    // Backtrack while the step would leave the quadrant or increase |F|.
    double damp = 1.0;
    for (int k = 0; k < 30; ++k) {
      const double nt = t + damp * delta(0);
      const double ns = s + damp * delta(1);
      if (nt > 0.0 && ns > 0.0 && einstein_equations(nt, ns).norm() <= f.norm() * (1.0 + 1e-12) + 1e-15) break;
      damp *= 0.5;
    }
    t += damp * delta(0);
    s += damp * delta(1);
    if ((damp * delta).norm() < step_tol) return t > 0.0 && s > 0.0;
  }
  return false;
}

std::vector<double> grid_values(const GridRange& r) {
  if (!(r.step > 0.0) || !(r.hi >= r.lo) || !std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo <= 0.0) {
    throw EmptyGrid("grid range must satisfy 0 < lo <= hi and step > 0");
  }
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((r.hi - r.lo) / r.step + 1e-9));
  for (long k = 0; k <= n; ++k) out.push_back(r.lo + static_cast<double>(k) * r.step);
  if (out.empty()) throw EmptyGrid("grid range contains no values");
  return out;
}

}  // namespace

EinsteinFit einstein_fit(const Metric& g) { return fit_blocks(ricci_blocks(g), g); }

std::vector<EinsteinPoint> einstein_scan(const ScanGrid& grid, const ScanOptions& opts) {
  const auto ts = grid_values(grid.t);
  const auto ss = grid_values(grid.s);
  const auto nt = static_cast<long>(ts.size());
  const auto ns = static_cast<long>(ss.size());

  std::vector<double> res(static_cast<std::size_t>(nt * ns));
  auto at = [&](long i, long j) -> double& { return res[static_cast<std::size_t>(i * ns + j)]; };
  for (long i = 0; i < nt; ++i) {
    for (long j = 0; j < ns; ++j) at(i, j) = einstein_fit(Metric::from_ts(ts[i], ss[j])).residual;
  }

  std::vector<EinsteinPoint> out;
  for (long i = 0; i < nt; ++i) {
    for (long j = 0; j < ns; ++j) {
      const double v = at(i, j);
      if (!(v < opts.candidate_threshold)) continue;
      bool minimum = true;
      for (long di = -1; di <= 1 && minimum; ++di) {
        for (long dj = -1; dj <= 1; ++dj) {
          const long a = i + di, b = j + dj;
          if ((di == 0 && dj == 0) || a < 0 || b < 0 || a >= nt || b >= ns) continue;
          if (at(a, b) < v) {
            minimum = false;
            break;
          }
        }
      }
      if (!minimum) continue;

      double t = ts[i], s = ss[j];
      if (!refine(t, s, opts.refine_tol)) continue;
      const double half_t = 0.5 * grid.t.step, half_s = 0.5 * grid.s.step;
      if (t < ts.front() - half_t || t > ts.back() + half_t || s < ss.front() - half_s || s > ss.back() + half_s) {
        continue;
      }
      const EinsteinFit fit = einstein_fit(Metric::from_ts(t, s));
      if (!(fit.residual < opts.tol)) continue;
      const bool seen = std::any_of(out.begin(), out.end(), [&](const EinsteinPoint& p) {
        return std::hypot(p.t - t, p.s - s) < 1e-6;
      });
      if (!seen) out.push_back({t, s, fit.constant, fit.residual});
    }
  }
  std::sort(out.begin(), out.end(), [](const EinsteinPoint& a, const EinsteinPoint& b) {
    return a.t != b.t ? a.t < b.t : a.s < b.s;
  });
  return out;
}

std::string homothety_label(double t, double s) {
  for (int d = 1; d <= 12; ++d) {
    const std::array<double, 3> v{static_cast<double>(d), d * t, d * s};
    bool integral = true;
    for (double x : v) integral = integral && std::abs(x - std::round(x)) < 1e-8 * d && std::round(x) >= 1.0;
    if (!integral) continue;
    std::array<long, 3> n{};
    for (int k = 0; k < 3; ++k) n[k] = std::lround(v[k]);
    const long g = std::gcd(std::gcd(n[0], n[1]), n[2]);
    if (n[0] / g > 12 || n[1] / g > 12 || n[2] / g > 12) continue;
    return "(" + std::to_string(n[0] / g) + "," + std::to_string(n[1] / g) + "," + std::to_string(n[2] / g) + ")";
  }
  std::ostringstream os;
  os.precision(10);
  os << "(1," << t << "," << s << ")";
  return os.str();
}

}  // namespace affinor
