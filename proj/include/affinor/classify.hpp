#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affinor/flagmetric.hpp"
#include "affinor/locus.hpp"

namespace affinor {

/// Kf, Kill f, NKf, Hf, G1f.
enum class ClassTag { Kahler, Killing, NearlyKahler, Hermitian, G1 };

inline constexpr std::array<ClassTag, 5> kAllClasses{ClassTag::Kahler, ClassTag::Killing, ClassTag::NearlyKahler,
                                                     ClassTag::Hermitian, ClassTag::G1};

/// "Kf", "Kill", "NKf", "Hf", "G1f".
std::string to_string(ClassTag tag);
/// Accepts the short names above and kahler, killing, nkf, nearly-kahler, hermitian, g1f,
/// case-insensitively. Throws UnknownClassTag.
ClassTag parse_class_tag(const std::string& name);

/// Linear conditions in (t, s), denominators cleared by the positive factors t and s.
std::vector<LinearCondition> class_system(const FStructure& f, ClassTag tag);

Locus kahler_locus(const FStructure& f);
Locus killing_locus(const FStructure& f);
Locus nkf_locus(const FStructure& f);
Locus hermitian_locus(const FStructure& f);
Locus g1f_locus(const FStructure& f);
Locus class_locus(const FStructure& f, ClassTag tag);

/// Kf as is; Kill, NKf and Hf minus the Kahler locus; G1f minus the NKf and Hf loci.
Locus strict_locus(const FStructure& f, ClassTag tag);

/// Norm of the defining tensor at (X, Y), relative to 1 + |X||Y|. Conditions that only
/// involve X ignore Y.
double class_residual(const Metric& g, const FStructure& f, ClassTag tag, const TangentVector& x,
                      const TangentVector& y);

struct Verdict {
  bool holds = false;
  double max_residual = 0.0;
  int trials = 0;
};

struct VerifyOptions {
  int trials = 1000;
  double tol = 1e-9;
  std::uint64_t seed = TangentSampler::kDefaultSeed;
  std::uint64_t stream = 0;
};

/// Random-vector check of the class condition via the Nomizu connection.
/// Throws InvalidInput when trials < 1.
Verdict numeric_verify(const FStructure& f, const Metric& g, ClassTag tag, const VerifyOptions& opts = {});

struct Witness {
  RationalPoint point;
  bool on_locus = false;
  Verdict verdict;
  bool agrees = false;
};

struct ClassificationRecord {
  FStructure f{0, 0, 0};
  ClassTag tag = ClassTag::Kahler;
  Locus locus;
  Locus strict;
  std::vector<Witness> witnesses;

  [[nodiscard]] bool consistent() const;
};

struct ClassifyOptions {
  int trials = 1000;
  double tol = 1e-9;
  std::uint64_t seed = TangentSampler::kDefaultSeed;
  /// Off-locus probes must exceed this residual.
  double off_locus_min = 1e-6;
  std::size_t witnesses = 3;
};

ClassificationRecord classify_record(const FStructure& f, ClassTag tag, const ClassifyOptions& opts = {});
/// The five records for one structure (sign-canonicalized), in kAllClasses order.
std::vector<ClassificationRecord> classify_structure(const FStructure& f, const ClassifyOptions& opts = {});
/// 13 structures x 5 classes, J1..J4, f1..f9 outer, kAllClasses inner.
std::vector<ClassificationRecord> classify_all(const ClassifyOptions& opts = {});

/// Vanishing of the Nijenhuis tensor on all basis pairs (nijenhuis_J for rank 6,
/// nijenhuis_f otherwise).
bool is_integrable(const FStructure& f);

}  // namespace affinor
