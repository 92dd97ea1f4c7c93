// Prints one PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "affinor/classify.hpp"
#include "affinor/curvature.hpp"
#include "affinor/phispace.hpp"
#include "oracles.hpp"

using namespace affinor;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return {p, d}; }

Locus point(const Rational& t, const Rational& s) {
  return solve_linear_system({{-t, q(1), q(0)}, {-s, q(0), q(1)}});
}

Locus line(const Rational& c0, const Rational& ct, const Rational& cs) { return solve_linear_system({{c0, ct, cs}}); }

const Locus kAll{LocusSet::all()};
const Locus kNone{};

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int n, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome r{false, "exception"};
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = r.pass && secs < budget_s;
  if (!ok) ++failures;
  std::printf("criterion %d: %s  %.3f s (limit %.0f s)  %s\n", n, ok ? "PASS" : "FAIL", secs, budget_s,
              r.detail.c_str());
  std::fflush(stdout);
}

Locus expected_strict(const std::string& name, ClassTag tag) {
  switch (tag) {
    case ClassTag::Kahler:
      if (name == "J2") return line(q(1), q(-1), q(1));
      if (name == "J3") return line(q(-1), q(-1), q(1));
      if (name == "J4") return line(q(-1), q(1), q(1));
      return kNone;
    case ClassTag::Killing:
      if (name == "J1") return point(q(1), q(1));
      if (name == "f1") return point(q(1), q(4, 3));
      if (name == "f2") return point(q(4, 3), q(1));
      if (name == "f3") return point(q(3, 4), q(3, 4));
      return kNone;
    case ClassTag::NearlyKahler:
      if (name == "J1") return point(q(1), q(1));
      if (name == "f1") return line(q(-1), q(1), q(0));
      if (name == "f2") return line(q(-1), q(0), q(1));
      if (name == "f3") return line(q(0), q(1), q(-1));
      if (name == "f7" || name == "f8" || name == "f9") return kAll;
      return kNone;
    default:
      return kNone;
  }
}

Outcome check_strict(ClassTag tag) {
  int bad = 0;
  std::string names;
  for (const auto& f : all_fstructures()) {
    const Locus got = strict_locus(f, tag);
    if (!(got == expected_strict(f.name(), tag))) {
      ++bad;
      names += " " + f.name() + "=" + got.describe();
    }
    if (!got.is_empty()) names += " " + f.name() + ":" + got.describe() + ";";
  }
  return {bad == 0, bad == 0 ? "exact match:" + names : "mismatch:" + names};
}

}  // namespace

int main() {
  criterion(1, 1.0, [] {
    // Kahler locus equals the strict Kahler locus, since Kahler is the smallest class.
    int bad = 0;
    for (const auto& f : all_fstructures()) {
      if (!(kahler_locus(f) == expected_strict(f.name(), ClassTag::Kahler))) ++bad;
    }
    auto r = check_strict(ClassTag::Kahler);
    return Outcome{bad == 0 && r.pass, r.detail};
  });

  criterion(2, 1.0, [] { return check_strict(ClassTag::Killing); });

  criterion(3, 1.0, [] { return check_strict(ClassTag::NearlyKahler); });

  criterion(4, 30.0, [] {
    int bad = 0;
    int records = 0;
    double worst_on = 0.0;
    const std::array<Metric, 5> probes{Metric(1, 1, 1), Metric(1, 2, 3), Metric(3, 3, 4), Metric(2, 1, 1),
                                       Metric(1, 0.3, 1.7)};
    for (const auto& f : all_fstructures()) {
      const bool j1 = f.name() == "J1";
      const Locus h = hermitian_locus(f);
      if (j1 ? !h.is_empty() : !h.is_all()) ++bad;
      if (!strict_locus(f, ClassTag::G1).is_empty()) ++bad;
      for (ClassTag tag : {ClassTag::Hermitian, ClassTag::G1}) {
        const auto rec = classify_record(f, tag);
        ++records;
        if (!rec.consistent()) ++bad;
        for (const auto& w : rec.witnesses) {
          if (w.verdict.trials < 1000) ++bad;
          if (w.on_locus) worst_on = std::max(worst_on, w.verdict.max_residual);
        }
      }
      for (const auto& g : probes) {
        const Verdict v = numeric_verify(f, g, ClassTag::Hermitian);
        if (v.holds == j1 || v.trials < 1000) ++bad;
      }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d records, 1000 samples each, worst on-locus residual %.2e, %d mismatches",
                  records, worst_on, bad);
    return Outcome{bad == 0, buf};
  });

  criterion(5, 60.0, [] {
    std::mt19937_64 rng(20240501);
    std::uniform_real_distribution<double> lam(0.05, 5.0);
    std::uniform_int_distribution<int> z(-1, 1);
    double worst_nabla = 0.0;
    double worst_t = 0.0;
    double worst_oracle = 0.0;
    for (int n = 0; n < 2000; ++n) {
      const std::array<double, 3> l{lam(rng), lam(rng), lam(rng)};
      const Metric g(l[0], l[1], l[2]);
      const FStructure f(z(rng), z(rng), z(rng));
      const auto x = oracle::random_tangent(rng);
      const auto y = oracle::random_tangent(rng);
      const double scale = 1.0 + x.norm() * y.norm();
      worst_nabla = std::max(worst_nabla, (nabla_f_closed(g, f, x, y) - nabla_f(g, f, x, y)).norm() / scale);
      worst_t = std::max(worst_t, (composition_T_closed(g, f, x, y) - composition_T(g, f, x, y)).norm() / scale);
      worst_oracle = std::max(worst_oracle, (nabla_f(g, f, x, y) - oracle::nabla_f(l, f.zetas(), x, y)).norm() / scale);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "2000 draws: nabla_f %.2e, T %.2e, matrix oracle %.2e", worst_nabla, worst_t,
                  worst_oracle);
    return Outcome{worst_nabla <= 1e-9 && worst_t <= 1e-9 && worst_oracle <= 1e-9, buf};
  });

  criterion(6, 5.0, [] {
    const cplx I{0.0, 1.0};
    const auto root = [](int k) { return std::polar(1.0, 2.0 * std::numbers::pi / k); };
    std::string detail;
    bool ok = true;

    const auto th3 = build_theta(make_inner_automorphism({root(3), std::conj(root(3)), 1.0}, 3));
    const auto o3 = order3_structures(th3);
    const auto z3 = o3.J.sign_canonical().characteristic();
    const bool a = z3 && *z3 == std::array<int, 3>{1, 1, 1} &&
                   operator_distance(o3.J.op * o3.J.op, -th3.identity()) <= 1e-9;
    ok &= a;
    detail += std::string("(a) ") + (a ? "ok" : "fail");

    const auto th4 = build_theta(make_inner_automorphism({I, -I, 1.0}, 4));
    const auto o4 = order4_structures(th4);
    const auto z4 = o4.f.sign_canonical().characteristic();
    const bool b = z4 && *z4 == std::array<int, 3>{0, 1, 1};
    ok &= b;
    detail += std::string(", (b) ") + (b ? "ok" : "fail");

    const auto th5 = build_theta(make_inner_automorphism({root(5), std::conj(root(5)), 1.0}, 5));
    const auto o5 = corollary5_relations(th5);
    double worst = 0.0;
    bool c = o5.identities.size() == 11;
    for (const auto& id : o5.identities) {
      worst = std::max(worst, id.residual);
      c &= id.holds && id.residual <= 1e-9;
    }
    ok &= c;
    char buf[80];
    std::snprintf(buf, sizeof buf, ", (c) %zu identities max %.1e", o5.identities.size(), worst);
    detail += buf;

    const auto cat = enumerate_canonical(th5, 5);
    const bool d = cat.observed.f == 8 && cat.observed.J == 4 && cat.counts_match();
    ok &= d;
    std::snprintf(buf, sizeof buf, ", (d) f=%d J=%d P=%d h=%d", cat.observed.f, cat.observed.J, cat.observed.P,
                  cat.observed.h);
    detail += buf;
    return Outcome{ok, detail};
  });

  criterion(7, 60.0, [] {
    const auto pts = einstein_scan({});
    std::set<std::string> classes;
    double worst = 0.0;
    for (const auto& p : pts) {
      classes.insert(homothety_label(p.t, p.s));
      worst = std::max(worst, p.residual);
    }
    const std::set<std::string> expected{"(1,1,1)", "(1,2,1)", "(1,1,2)", "(2,1,1)"};
    double killing_min = 1.0;
    for (const auto& g : {Metric(3, 3, 4), Metric(3, 4, 3), Metric(4, 3, 3)}) {
      killing_min = std::min(killing_min, einstein_fit(g).residual);
    }
    std::string list;
    for (const auto& c : classes) list += c + " ";
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu points, classes %sworst residual %.1e, (3,3,4)-type residual %.3e",
                  pts.size(), list.c_str(), worst, killing_min);
    return Outcome{pts.size() == 4 && classes == expected && worst <= 1e-8 && killing_min > 1e-3, buf};
  });

  criterion(8, 30.0, [] {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> lam(0.1, 4.0);
    std::uniform_int_distribution<int> z(-1, 1);
    const auto element = [&] { return SuElement(u(rng), u(rng), oracle::random_tangent(rng)); };
    double jacobi = 0.0;
    double grading = 0.0;
    double torsion = 0.0;
    double metricity = 0.0;
    double omega = 0.0;
    const std::array<Part, 3> blocks{Part::m1, Part::m2, Part::m3};
    for (int n = 0; n < 1000; ++n) {
      const SuElement x = element();
      const SuElement y = element();
      const SuElement w = element();
      jacobi = std::max(jacobi, (bracket(x, bracket(y, w)) + bracket(y, bracket(w, x)) + bracket(w, bracket(x, y)))
                                    .distance(SuElement{}));
      const int j = n % 3;
      const SuElement mixed = bracket(project(x, blocks[j]), project(y, blocks[(j + 1) % 3]));
      const SuElement same = bracket(project(x, blocks[j]), project(y, blocks[j]));
      grading = std::max({grading, mixed.distance(project(mixed, blocks[(j + 2) % 3])),
                          same.distance(project(same, Part::h))});

      const Metric g(lam(rng), lam(rng), lam(rng));
      const FStructure f(z(rng), z(rng), z(rng));
      const auto a = oracle::random_tangent(rng);
      const auto b = oracle::random_tangent(rng);
      const auto c = oracle::random_tangent(rng);
      torsion = std::max(torsion, (nomizu_alpha(g, a, b) - nomizu_alpha(g, b, a) - bracket_m(a, b)).norm());
      metricity = std::max(metricity, std::abs(metric_inner(g, nomizu_alpha(g, c, a), b) +
                                               metric_inner(g, a, nomizu_alpha(g, c, b))));
      omega = std::max(omega, std::abs(fundamental_omega(g, f, a, b) + fundamental_omega(g, f, b, a)));
    }
    // Totally skew nabla Omega exactly when nabla_X(f)X = 0.
    const bool pos = nabla_omega_skew_residual(Metric(3, 3, 4), FStructure(1, 1, 0)) <= 1e-9 &&
                     killing_residual(Metric(3, 3, 4), FStructure(1, 1, 0)) <= 1e-9;
    const bool neg = nabla_omega_skew_residual(Metric(1, 1, 1), FStructure(1, 1, 0)) > 1e-9 &&
                     killing_residual(Metric(1, 1, 1), FStructure(1, 1, 0)) > 1e-9;
    bool integrable_ok = true;
    for (const auto& f : all_fstructures()) {
      const bool expected = f.name() == "J2" || f.name() == "J3" || f.name() == "J4";
      integrable_ok &= is_integrable(f) == expected;
    }
    const double worst = std::max({jacobi, grading, torsion, metricity, omega});
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "jacobi %.1e, grading %.1e, torsion %.1e, metricity %.1e, omega %.1e, skew-omega %s/%s, "
                  "integrability %s",
                  jacobi, grading, torsion, metricity, omega, pos ? "ok" : "fail", neg ? "ok" : "fail",
                  integrable_ok ? "ok" : "fail");
    return Outcome{worst <= 1e-9 && pos && neg && integrable_ok, buf};
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
