#include "affinor/classify.hpp"

#include <algorithm>
#include <cctype>

#include "affinor/errors.hpp"

namespace affinor {

namespace {

LinearCondition scaled(Rational k, LinearCondition e) { return {k * e.c0, k * e.ct, k * e.cs}; }

LinearCondition sum(const LinearCondition& x, const LinearCondition& y) {
  return {x.c0 + y.c0, x.ct + y.ct, x.cs + y.cs};
}

// The six coefficients of nabla_X(f)Y: two per component of D(A, B, C).
struct NablaCoefficients {
  LinearCondition a1, a2, b1, b2, c1, c2;
};

NablaCoefficients nabla_coefficients(const FStructure& f) {
  const Rational z1 = f.zeta(0), z2 = f.zeta(1), z3 = f.zeta(2);
  return {
      scaled(z1 + z3, {1, -1, 1}),    // (1 + s - t)
      scaled(z1 + z2, {-1, -1, 1}),   // (s - t - 1)
      scaled(z1 + z2, {1, 1, -1}),    // t (1 + (1 - s)/t)
      scaled(z2 + z3, {1, -1, -1}),   // t ((1 - s)/t - 1)
      scaled(z2 + z3, {-1, 1, 1}),    // s ((t - 1)/s + 1)
      scaled(z1 + z3, {-1, 1, -1}),   // s ((t - 1)/s - 1)
  };
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Kahler:
      return "Kf";
    case ClassTag::Killing:
      return "Kill";
    case ClassTag::NearlyKahler:
      return "NKf";
    case ClassTag::Hermitian:
      return "Hf";
    case ClassTag::G1:
      return "G1f";
  }
  return "?";
}

ClassTag parse_class_tag(const std::string& name) {
  const std::string n = lower(name);
  if (n == "kf" || n == "kahler") return ClassTag::Kahler;
  if (n == "kill" || n == "killing") return ClassTag::Killing;
  if (n == "nkf" || n == "nearly-kahler" || n == "nk") return ClassTag::NearlyKahler;
  if (n == "hf" || n == "hermitian") return ClassTag::Hermitian;
  if (n == "g1f" || n == "g1") return ClassTag::G1;
  throw UnknownClassTag("unknown class tag '" + name + "'");
}

std::vector<LinearCondition> class_system(const FStructure& f, ClassTag tag) {
  const auto k = nabla_coefficients(f);
  const Rational z1 = f.zeta(0), z2 = f.zeta(1), z3 = f.zeta(2);
  const Rational zzz = z1 * z2 * z3;
  switch (tag) {
    case ClassTag::Kahler:
      return {k.a1, k.a2, k.b1, k.b2, k.c1, k.c2};
    case ClassTag::Killing:
      return {sum(k.a1, k.a2), sum(k.b1, k.b2), sum(k.c1, k.c2)};
    case ClassTag::NearlyKahler:
      return {scaled(z2 * z3, sum(k.a1, k.a2)), scaled(z1 * z3, sum(k.b1, k.b2)), scaled(z1 * z2, sum(k.c1, k.c2))};
    case ClassTag::Hermitian: {
      const Rational wa = zzz * (1 + z2 * z3), wb = zzz * (1 + z1 * z3), wc = zzz * (1 + z1 * z2);
      return {scaled(wa, k.a1), scaled(wa, k.a2), scaled(wb, k.b1), scaled(wb, k.b2), scaled(wc, k.c1), scaled(wc, k.c2)};
    }
    case ClassTag::G1: {
      const Rational wa = zzz * (1 + z2 * z3), wb = zzz * (1 + z1 * z3), wc = zzz * (1 + z1 * z2);
      return {scaled(wa, sum(k.a1, k.a2)), scaled(wb, sum(k.b1, k.b2)), scaled(wc, sum(k.c1, k.c2))};
    }
  }
  return {};
}

Locus class_locus(const FStructure& f, ClassTag tag) { return solve_linear_system(class_system(f, tag)); }
Locus kahler_locus(const FStructure& f) { return class_locus(f, ClassTag::Kahler); }
Locus killing_locus(const FStructure& f) { return class_locus(f, ClassTag::Killing); }
Locus nkf_locus(const FStructure& f) { return class_locus(f, ClassTag::NearlyKahler); }
Locus hermitian_locus(const FStructure& f) { return class_locus(f, ClassTag::Hermitian); }
Locus g1f_locus(const FStructure& f) { return class_locus(f, ClassTag::G1); }

Locus strict_locus(const FStructure& f, ClassTag tag) {
  const Locus full = class_locus(f, tag);
  switch (tag) {
    case ClassTag::Kahler:
      return full;
    case ClassTag::Killing:
    case ClassTag::NearlyKahler:
    case ClassTag::Hermitian:
      return full.minus(kahler_locus(f));
    case ClassTag::G1:
      return full.minus(nkf_locus(f)).minus(hermitian_locus(f));
  }
  return full;
}

double class_residual(const Metric& g, const FStructure& f, ClassTag tag, const TangentVector& x,
                      const TangentVector& y) {
  TangentVector value;
  double scale = 1.0;
  switch (tag) {
    case ClassTag::Kahler:
      value = nabla_f(g, f, x, y);
      scale += x.norm() * y.norm();
      break;
    case ClassTag::Killing:
      value = nabla_f(g, f, x, x);
      scale += x.norm() * x.norm();
      break;
    case ClassTag::NearlyKahler: {
      const TangentVector fx = apply_f(f, x);
      value = nabla_f(g, f, fx, fx);
      scale += x.norm() * x.norm();
      break;
    }
    case ClassTag::Hermitian:
      value = composition_T(g, f, x, y);
      scale += x.norm() * y.norm();
      break;
    case ClassTag::G1:
      value = composition_T(g, f, x, x);
      scale += x.norm() * x.norm();
      break;
  }
  return value.norm() / scale;
}

Verdict numeric_verify(const FStructure& f, const Metric& g, ClassTag tag, const VerifyOptions& opts) {
  if (opts.trials < 1) throw InvalidInput("numeric_verify: trials must be at least 1");
  TangentSampler sample(opts.seed, opts.stream);
  Verdict v;
  v.trials = opts.trials;
  for (int i = 0; i < opts.trials; ++i) {
    const TangentVector x = sample();
    const TangentVector y = sample();
    v.max_residual = std::max(v.max_residual, class_residual(g, f, tag, x, y));
  }
  v.holds = v.max_residual <= opts.tol;
  return v;
}

bool ClassificationRecord::consistent() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.agrees; });
}

namespace {

std::uint64_t record_stream(const FStructure& f, ClassTag tag, std::size_t witness) {
  std::uint64_t key = 0;
  for (int j = 0; j < 3; ++j) key = key * 3 + static_cast<std::uint64_t>(f.zeta(j) + 1);
  return (key * 8 + static_cast<std::uint64_t>(tag)) * 64 + witness;
}

double to_double(const Rational& q) { return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator()); }

}  // namespace

ClassificationRecord classify_record(const FStructure& f, ClassTag tag, const ClassifyOptions& opts) {
  ClassificationRecord rec;
  rec.f = f;
  rec.tag = tag;
  rec.locus = class_locus(f, tag);
  rec.strict = strict_locus(f, tag);

  std::size_t idx = 0;
  auto check = [&](const RationalPoint& p, bool on_locus) {
    Witness w;
    w.point = p;
    w.on_locus = on_locus;
    const VerifyOptions vo{opts.trials, opts.tol, opts.seed, record_stream(f, tag, idx++)};
    w.verdict = numeric_verify(f, Metric::from_ts(to_double(p.t), to_double(p.s)), tag, vo);
    w.agrees = on_locus ? w.verdict.holds : (!w.verdict.holds && w.verdict.max_residual > opts.off_locus_min);
    rec.witnesses.push_back(w);
  };
  for (const auto& p : rec.locus.interior_points(opts.witnesses)) check(p, true);
  for (const auto& p : rec.locus.exterior_points(opts.witnesses)) check(p, false);
  return rec;
}

std::vector<ClassificationRecord> classify_structure(const FStructure& f, const ClassifyOptions& opts) {
  std::vector<ClassificationRecord> out;
  for (ClassTag tag : kAllClasses) out.push_back(classify_record(f, tag, opts));
  return out;
}

std::vector<ClassificationRecord> classify_all(const ClassifyOptions& opts) {
  std::vector<ClassificationRecord> out;
  for (const auto& f : all_fstructures()) {
    auto recs = classify_structure(f, opts);
    out.insert(out.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  return out;
}

bool is_integrable(const FStructure& f) {
  const auto basis = tangent_basis();
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const TangentVector n = f.is_almost_complex() ? nijenhuis_J(f, x, y) : nijenhuis_f(f, x, y);
      if (n.norm() > 1e-12) return false;
    }
  }
  return true;
}

}  // namespace affinor
