#include <random>

#include <doctest.h>

#include "affinor/errors.hpp"
#include "affinor/flagmetric.hpp"
#include "oracles.hpp"

using namespace affinor;

namespace {

const cplx I{0.0, 1.0};
constexpr double kTol = 1e-12;

struct Draw {
  Metric g;
  FStructure f;
  std::array<double, 3> l;
};

Draw random_draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lam(0.1, 4.0);
  std::uniform_int_distribution<int> z(-1, 1);
  const std::array<double, 3> l{lam(rng), lam(rng), lam(rng)};
  return {Metric(l[0], l[1], l[2]), FStructure(z(rng), z(rng), z(rng)), l};
}

}  // namespace

TEST_CASE("Metric validation and normalization") {
  CHECK_THROWS_AS(Metric(0.0, 1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(Metric(1.0, -2.0, 1.0), InvalidInput);
  const Metric g(3.0, 3.0, 4.0);
  CHECK(g.t() == doctest::Approx(1.0));
  CHECK(g.s() == doctest::Approx(4.0 / 3.0));
  const Metric h(6.0, 6.0, 8.0);
  CHECK(h.normalized().lambdas() == g.normalized().lambdas());
}

TEST_CASE("metric_inner examples") {
  const Metric g(1, 2, 1);
  CHECK(metric_inner(g, D(0, 1, 0), D(0, 1, 0)) == doctest::Approx(2.0));
  CHECK(metric_inner(Metric(0.3, 5, 2), D(1, 0, 0), D(0, 1, 0)) == 0.0);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 50; ++k) {
    const auto x = oracle::random_tangent(rng);
    const auto y = oracle::random_tangent(rng);
    CHECK(metric_inner(Metric(1, 1, 1), x, y) == doctest::Approx(killing_inner(x, y)).epsilon(1e-12));
  }
}

TEST_CASE("FStructure basics") {
  CHECK_THROWS_AS(FStructure(2, 0, 0), InvalidInput);
  const FStructure f(0, -1, 1);
  CHECK(f.rank() == 4);
  CHECK(f.canonical() == FStructure(0, 1, -1));
  CHECK(f.canonical().name() == "f6");
  CHECK(f.name() == "-f6");
  CHECK(FStructure(1, 1, 1).name() == "J1");
  CHECK(FStructure(1, 0, 0).name() == "f7");
  CHECK(all_fstructures().size() == 13);
  CHECK(f.collection() == "(0,-1,1)");
}

TEST_CASE("apply_f examples") {
  CHECK(apply_f(FStructure(1, 1, 1), D(1, 1, 1)) == D(I, I, I));
  CHECK(oracle::max_abs(apply_f(FStructure(0, 1, 1), D(5, 0, 0))) == 0.0);
  std::mt19937_64 rng(32);
  for (int k = 0; k < 200; ++k) {
    const auto d = random_draw(rng);
    const auto x = oracle::random_tangent(rng);
    const auto y = oracle::random_tangent(rng);
    const auto fx = apply_f(d.f, x);
    CHECK(oracle::max_abs(apply_f(d.f, apply_f(d.f, fx)) + fx) < kTol);
    CHECK(std::abs(metric_inner(d.g, fx, y) + metric_inner(d.g, x, apply_f(d.f, y))) < kTol);
  }
}

TEST_CASE("nomizu_U examples") {
  const Metric g(1, 2, 1);
  CHECK(oracle::max_abs(nomizu_U(g, D(0, 1, 0), D(0, 0, 1)) - D(-0.5, 0, 0)) < kTol);
  CHECK(oracle::max_abs(nomizu_alpha(g, D(0, 1, 0), D(0, 0, 1))) < kTol);
  std::mt19937_64 rng(33);
  for (int k = 0; k < 100; ++k) {
    const auto x = oracle::random_tangent(rng);
    const auto y = oracle::random_tangent(rng);
    CHECK(oracle::max_abs(nomizu_U(Metric(1, 1, 1), x, y)) < kTol);
    const auto d = random_draw(rng);
    CHECK(oracle::max_abs(nomizu_U(d.g, x, y) - nomizu_U(d.g, y, x)) < kTol);
    CHECK(oracle::max_abs(nomizu_U(d.g, x, y) - nomizu_U_general(d.g, x, y)) < 1e-11);
    CHECK(oracle::max_abs(nomizu_alpha(d.g, x, x) - nomizu_U(d.g, x, x)) < kTol);
  }
}

TEST_CASE("alpha matches the Koszul oracle, is torsion-free and metric") {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 300; ++k) {
    const auto d = random_draw(rng);
    const auto x = oracle::random_tangent(rng);
    const auto y = oracle::random_tangent(rng);
    const auto z = oracle::random_tangent(rng);
    CHECK(oracle::max_abs(nomizu_alpha(d.g, x, y) - oracle::alpha(d.l, x, y)) < 1e-11);
    CHECK(oracle::max_abs(nomizu_alpha(d.g, x, y) - nomizu_alpha(d.g, y, x) - oracle::matrix_bracket_m(x, y)) < 1e-11);
    const double metricity = metric_inner(d.g, nomizu_alpha(d.g, z, x), y) + metric_inner(d.g, x, nomizu_alpha(d.g, z, y));
    CHECK(std::abs(metricity) < 1e-11);
  }
}

TEST_CASE("nabla_f examples") {
  const Metric g(1, 1, 1);
  const FStructure j1(1, 1, 1);
  CHECK(oracle::max_abs(nabla_f(g, j1, D(0, 1, 0), D(0, 0, 1)) - D(-I, 0, 0)) < kTol);
  CHECK(oracle::max_abs(nabla_f_closed(g, j1, D(0, 1, 0), D(0, 0, 1)) - D(-I, 0, 0)) < kTol);

  std::mt19937_64 rng(35);
  const Metric g334(3, 3, 4);
  const FStructure f1(1, 1, 0);
  for (int k = 0; k < 100; ++k) {
    const auto x = oracle::random_tangent(rng);
    CHECK(oracle::max_abs(nabla_f(g334, f1, x, x)) < 1e-12);
    const auto d = random_draw(rng);
    for (int j = 0; j < 3; ++j) {
      const auto xj = x.block(j);
      const auto yj = oracle::random_tangent(rng).block(j);
      CHECK(oracle::max_abs(nabla_f(d.g, d.f, xj, yj)) < kTol);
    }
  }
}

TEST_CASE("closed forms agree with the direct path and the oracle") {
  std::mt19937_64 rng(36);
  double worst_nabla = 0.0;
  double worst_t = 0.0;
  double worst_oracle = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto d = random_draw(rng);
    const auto x = oracle::random_tangent(rng);
    const auto y = oracle::random_tangent(rng);
    const double scale = 1.0 + x.norm() * y.norm();
    worst_nabla = std::max(worst_nabla, (nabla_f(d.g, d.f, x, y) - nabla_f_closed(d.g, d.f, x, y)).norm() / scale);
    worst_t = std::max(worst_t, (composition_T(d.g, d.f, x, y) - composition_T_closed(d.g, d.f, x, y)).norm() / scale);
    worst_oracle = std::max(worst_oracle, (nabla_f(d.g, d.f, x, y) - oracle::nabla_f(d.l, d.f.zetas(), x, y)).norm() / scale);
  }
  CHECK(worst_nabla <= 1e-9);
  CHECK(worst_t <= 1e-9);
  CHECK(worst_oracle <= 1e-9);
}

TEST_CASE("composition_T examples") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 100; ++k) {
    const auto d = random_draw(rng);
    const auto x = oracle::random_tangent(rng);
    const auto y = oracle::random_tangent(rng);
    for (const auto& f : all_fstructures()) {
      if (f.rank() < 6) CHECK(composition_T(d.g, f, x, y).norm() < kTol);
    }
    CHECK(composition_T(d.g, FStructure(1, -1, 1), x, y).norm() < 1e-12);
  }
  CHECK(composition_T(Metric(1, 1, 1), FStructure(1, 1, 1), D(0, 1, 0), D(0, 0, 1)).norm() > 0.1);
}

TEST_CASE("fundamental form is skew") {
  CHECK(fundamental_omega(Metric(1, 1, 1), FStructure(1, 1, 1), D(1, 0, 0), D(1, 0, 0)) == 0.0);
  std::mt19937_64 rng(38);
  for (int k = 0; k < 100; ++k) {
    const auto d = random_draw(rng);
    const auto x = oracle::random_tangent(rng);
    const auto y = oracle::random_tangent(rng);
    CHECK(std::abs(fundamental_omega(d.g, d.f, x, x)) < kTol);
    CHECK(std::abs(fundamental_omega(d.g, d.f, x, y) + fundamental_omega(d.g, d.f, y, x)) < kTol);
  }
}

TEST_CASE("Killing condition and totally skew nabla Omega") {
  SUBCASE("Killing instances") {
    CHECK(killing_residual(Metric(3, 3, 4), FStructure(1, 1, 0)) < 1e-12);
    CHECK(nabla_omega_skew_residual(Metric(3, 3, 4), FStructure(1, 1, 0)) < 1e-12);
    CHECK(killing_residual(Metric(1, 1, 1), FStructure(1, 1, 1)) < 1e-12);
    CHECK(nabla_omega_skew_residual(Metric(1, 1, 1), FStructure(1, 1, 1)) < 1e-12);
  }
  SUBCASE("non-Killing instances") {
    CHECK(killing_residual(Metric(1, 1, 1), FStructure(1, 1, 0)) > 1e-3);
    CHECK(nabla_omega_skew_residual(Metric(1, 1, 1), FStructure(1, 1, 0)) > 1e-3);
    CHECK(killing_residual(Metric(1, 2, 1), FStructure(1, 1, 1)) > 1e-3);
    CHECK(nabla_omega_skew_residual(Metric(1, 2, 1), FStructure(1, 1, 1)) > 1e-3);
  }
}

TEST_CASE("Nijenhuis tensor") {
  std::mt19937_64 rng(39);
  for (int k = 0; k < 100; ++k) {
    const auto x = oracle::random_tangent(rng);
    const auto y = oracle::random_tangent(rng);
    CHECK(oracle::max_abs(nijenhuis_J(FStructure(1, -1, 1), x, y)) < kTol);
    CHECK(oracle::max_abs(nijenhuis_J(FStructure(1, 1, 1), x, x)) < kTol);
    CHECK(oracle::max_abs(nijenhuis_J(FStructure(1, 1, 1), x, y) + nijenhuis_J(FStructure(1, 1, 1), y, x)) < kTol);
  }
  CHECK(oracle::max_abs(nijenhuis_J(FStructure(1, 1, 1), D(1, 0, 0), D(0, 1, 0))) > 0.1);
  CHECK_THROWS_AS(nijenhuis_J(FStructure(1, 1, 0), D(1, 0, 0), D(0, 1, 0)), NotAlmostComplex);
}

TEST_CASE("naturally reductive metrics") {
  CHECK(is_naturally_reductive(Metric(1, 1, 1)));
  CHECK(is_naturally_reductive(Metric(2.5, 2.5, 2.5)));
  CHECK_FALSE(is_naturally_reductive(Metric(1, 2, 1)));
  const Metric g(1, 1, 2);
  const double lhs = metric_inner(g, bracket_m(D(1, 0, 0), D(0, 1, 0)), D(0, 0, 1));
  const double rhs = metric_inner(g, D(1, 0, 0), bracket_m(D(0, 1, 0), D(0, 0, 1)));
  CHECK(std::abs(lhs - rhs) > 0.5);
}

TEST_CASE("TangentSampler is reproducible and stays in the unit disk") {
  TangentSampler a(42);
  TangentSampler b(42);
  TangentSampler c(42, 1);
  bool differs = false;
  for (int k = 0; k < 100; ++k) {
    const auto x = a();
    CHECK(x == b());
    differs = differs || !(x == c());
    for (int j = 0; j < 3; ++j) CHECK(std::abs(x[j]) <= 1.0);
  }
  CHECK(differs);
}
