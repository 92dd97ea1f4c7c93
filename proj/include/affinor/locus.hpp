#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace affinor {

using Rational = boost::rational<std::int64_t>;

inline bool is_zero(const Rational& q) { return q.numerator() == 0; }

std::string to_string(const Rational& q);
/// Parses "3", "-4/3" or a terminating decimal such as "1.25". Throws InvalidInput.
Rational parse_rational(const std::string& text);

/// c0 + ct * t + cs * s = 0.
struct LinearCondition {
  Rational c0{0};
  Rational ct{0};
  Rational cs{0};

  [[nodiscard]] bool trivial() const { return is_zero(c0) && is_zero(ct) && is_zero(cs); }
  [[nodiscard]] Rational eval(const Rational& t, const Rational& s) const { return c0 + ct * t + cs * s; }
  friend bool operator==(const LinearCondition&, const LinearCondition&) = default;
};

struct RationalPoint {
  Rational t{0};
  Rational s{0};
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// A connected piece of the open quadrant t > 0, s > 0 cut out by linear equations:
/// empty, a point, an open segment or ray of a line, or the whole quadrant.
class LocusSet {
 public:
  enum class Kind { Empty, Point, Line, All };

  static LocusSet empty() { return LocusSet(Kind::Empty); }
  static LocusSet all() { return LocusSet(Kind::All); }
  /// Empty when the point is outside the quadrant.
  static LocusSet point(RationalPoint p);
  /// The quadrant part of c0 + ct t + cs s = 0; requires (ct, cs) != 0.
  static LocusSet line(LinearCondition eq);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_empty() const { return kind_ == Kind::Empty; }
  [[nodiscard]] const RationalPoint& the_point() const { return point_; }
  /// Normalized equation of a Line: cs = 1, or cs = 0 and ct = 1.
  [[nodiscard]] const LinearCondition& equation() const { return eq_; }
  /// Parameter range of a Line: t when cs != 0, otherwise s. Open interval (lo, hi).
  [[nodiscard]] const Rational& lower() const { return lo_; }
  [[nodiscard]] const std::optional<Rational>& upper() const { return hi_; }
  [[nodiscard]] bool parametrized_by_t() const { return !is_zero(eq_.cs); }

  [[nodiscard]] bool contains(const RationalPoint& p) const;
  /// Exact inclusion.
  [[nodiscard]] bool subset_of(const LocusSet& other) const;
  [[nodiscard]] bool disjoint_from(const LocusSet& other) const;
  /// Point on a Line at the given parameter value.
  [[nodiscard]] RationalPoint at(const Rational& param) const;

  /// "(t,s)=(1,4/3)", "(t,s)=(t,t-1), t>1", "all metrics", "empty".
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const LocusSet&, const LocusSet&) = default;

 private:
  explicit LocusSet(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Empty;
  RationalPoint point_{};
  LinearCondition eq_{};
  Rational lo_{0};
  std::optional<Rational> hi_{};
};

/// A LocusSet with finitely many sub-loci removed.
class Locus {
 public:
  Locus() = default;
  explicit Locus(LocusSet base) : base_(std::move(base)) {}

  [[nodiscard]] const LocusSet& base() const { return base_; }
  [[nodiscard]] const std::vector<LocusSet>& excluded() const { return excluded_; }
  [[nodiscard]] bool is_empty() const { return base_.is_empty(); }
  [[nodiscard]] bool is_all() const { return base_.kind() == LocusSet::Kind::All && excluded_.empty(); }
  [[nodiscard]] bool contains(const RationalPoint& p) const;

  /// this minus other; other must have no exclusions of its own.
  [[nodiscard]] Locus minus(const Locus& other) const;
  /// Exact inclusion for exclusion-free loci, conservative otherwise.
  [[nodiscard]] bool subset_of(const Locus& other) const;

  /// Up to n rational points of the locus, spread over its extent.
  [[nodiscard]] std::vector<RationalPoint> interior_points(std::size_t n) const;
  /// Up to n points of the quadrant outside the locus, drawn from a fixed probe list.
  [[nodiscard]] std::vector<RationalPoint> exterior_points(std::size_t n) const;

  [[nodiscard]] std::string describe() const;

  friend bool operator==(const Locus&, const Locus&) = default;

 private:
  LocusSet base_ = LocusSet::empty();
  std::vector<LocusSet> excluded_;
};

/// Exact solution set of the system within t > 0, s > 0.
Locus solve_linear_system(const std::vector<LinearCondition>& system);

}  // namespace affinor
