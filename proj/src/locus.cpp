#include "affinor/locus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "affinor/errors.hpp"

namespace affinor {

namespace {

bool in_quadrant(const RationalPoint& p) { return p.t > 0 && p.s > 0; }

// Normalizes so that cs = 1, or cs = 0 and ct = 1.
LinearCondition normalize(LinearCondition eq) {
  const Rational k = !is_zero(eq.cs) ? eq.cs : eq.ct;
  return {eq.c0 / k, eq.ct / k, eq.cs / k};
}

std::optional<RationalPoint> intersect_lines(const LinearCondition& e1, const LinearCondition& e2) {
  const Rational det = e1.ct * e2.cs - e1.cs * e2.ct;
  if (is_zero(det)) return std::nullopt;
  // ct t + cs s = -c0
  const Rational t = (-e1.c0 * e2.cs + e2.c0 * e1.cs) / det;
  const Rational s = (-e2.c0 * e1.ct + e1.c0 * e2.ct) / det;
  return RationalPoint{t, s};
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (first == last || res.ec != std::errc() || res.ptr != last) {
    throw InvalidInput("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::string term_with_t(const Rational& q, const char* var) {
  if (q == Rational(1)) return var;
  if (q == Rational(-1)) return std::string("-") + var;
  return to_string(q) + "*" + var;
}

std::string render_affine(const Rational& p, const Rational& q, const char* var) {
  if (is_zero(q)) return to_string(p);
  const std::string tt = term_with_t(q, var);
  if (is_zero(p)) return tt;
  if (q < 0 && p > 0) return to_string(p) + tt;
  return tt + (p > 0 ? "+" : "-") + to_string(boost::abs(p));
}

}  // namespace

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  std::string str;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) str.push_back(ch);
  }
  if (str.empty()) throw InvalidInput("empty number");
  constexpr std::int64_t kLimit = 1'000'000'000;
  Rational out;
  if (const auto slash = str.find('/'); slash != std::string::npos) {
    const std::int64_t num = parse_int(std::string_view(str).substr(0, slash));
    const std::int64_t den = parse_int(std::string_view(str).substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
    if (std::abs(num) > kLimit || std::abs(den) > kLimit) throw InvalidInput("number too large: '" + text + "'");
    out = Rational(num, den);
  } else if (const auto dot = str.find('.'); dot != std::string::npos) {
    const std::string whole = str.substr(0, dot);
    const std::string frac = str.substr(dot + 1);
    if (frac.size() > 9 || frac.empty() || !std::all_of(frac.begin(), frac.end(), ::isdigit)) {
      throw InvalidInput("unsupported decimal '" + text + "'");
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::string digits = (whole.empty() || whole == "-" || whole == "+") ? "0" : whole;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = parse_int(digits);
    if (std::abs(w) > kLimit) throw InvalidInput("number too large: '" + text + "'");
    const std::int64_t f = parse_int(frac);
    const std::int64_t num = std::abs(w) * scale + f;
    out = Rational(negative ? -num : num, scale);
  } else {
    const std::int64_t v = parse_int(str);
    if (std::abs(v) > kLimit) throw InvalidInput("number too large: '" + text + "'");
    out = Rational(v);
  }
  return out;
}

LocusSet LocusSet::point(RationalPoint p) {
  if (!in_quadrant(p)) return empty();
  LocusSet out(Kind::Point);
  out.point_ = p;
  return out;
}

LocusSet LocusSet::line(LinearCondition eq) {
  if (is_zero(eq.ct) && is_zero(eq.cs)) throw Error("LocusSet::line: degenerate equation");
  eq = normalize(eq);
  LocusSet out(Kind::Line);
  out.eq_ = eq;
  if (!is_zero(eq.cs)) {
    // s = p + q t
    const Rational p = -eq.c0;
    const Rational q = -eq.ct;
    if (q > 0) {
      out.lo_ = std::max(Rational(0), -p / q);
    } else if (q < 0) {
      const Rational hi = -p / q;
      if (hi <= 0) return empty();
      out.lo_ = 0;
      out.hi_ = hi;
    } else {
      if (p <= 0) return empty();
      out.lo_ = 0;
    }
  } else {
    if (-eq.c0 <= 0) return empty();
    out.lo_ = 0;
  }
  return out;
}

bool LocusSet::contains(const RationalPoint& p) const {
  switch (kind_) {
    case Kind::Empty:
      return false;
    case Kind::All:
      return in_quadrant(p);
    case Kind::Point:
      return p == point_;
    case Kind::Line:
      return in_quadrant(p) && is_zero(eq_.eval(p.t, p.s));
  }
  return false;
}

bool LocusSet::subset_of(const LocusSet& other) const {
  if (kind_ == Kind::Empty) return true;
  if (other.kind_ == Kind::All) return true;
  switch (kind_) {
    case Kind::All:
      return false;
    case Kind::Point:
      return other.contains(point_);
    case Kind::Line:
      return other.kind_ == Kind::Line && other.eq_ == eq_;
    default:
      return false;
  }
}

bool LocusSet::disjoint_from(const LocusSet& other) const {
  if (is_empty() || other.is_empty()) return true;
  if (kind_ == Kind::All || other.kind_ == Kind::All) return false;
  if (kind_ == Kind::Point) return !other.contains(point_);
  if (other.kind_ == Kind::Point) return !contains(other.point_);
  if (eq_ == other.eq_) return false;
  const auto p = intersect_lines(eq_, other.eq_);
  return !p || !(contains(*p) && other.contains(*p));
}

RationalPoint LocusSet::at(const Rational& param) const {
  if (parametrized_by_t()) return {param, -eq_.c0 - eq_.ct * param};
  return {-eq_.c0, param};
}

std::string LocusSet::describe() const {
  switch (kind_) {
    case Kind::Empty:
      return "empty";
    case Kind::All:
      return "all metrics";
    case Kind::Point:
      return "(t,s)=(" + to_string(point_.t) + "," + to_string(point_.s) + ")";
    case Kind::Line:
      break;
  }
  if (!parametrized_by_t()) return "(t,s)=(" + to_string(-eq_.c0) + ",s), s>0";
  std::string range;
  if (hi_) {
    range = to_string(lo_) + "<t<" + to_string(*hi_);
  } else {
    range = "t>" + to_string(lo_);
  }
  return "(t,s)=(t," + render_affine(-eq_.c0, -eq_.ct, "t") + "), " + range;
}

bool Locus::contains(const RationalPoint& p) const {
  if (!base_.contains(p)) return false;
  return std::none_of(excluded_.begin(), excluded_.end(), [&](const LocusSet& e) { return e.contains(p); });
}

Locus Locus::minus(const Locus& other) const {
  if (!other.excluded_.empty()) throw Error("Locus::minus: subtrahend must have no exclusions");
  const LocusSet& b = other.base_;
  if (base_.subset_of(b)) return Locus();
  if (base_.disjoint_from(b)) return *this;

  // The overlap is b itself, or a single point where two distinct lines cross.
  LocusSet overlap = b;
  if (!b.subset_of(base_)) {
    const auto p = intersect_lines(base_.equation(), b.equation());
    overlap = LocusSet::point(*p);
  }
  Locus out = *this;
  const bool covered = std::any_of(excluded_.begin(), excluded_.end(),
                                   [&](const LocusSet& e) { return overlap.subset_of(e); });
  if (!covered) out.excluded_.push_back(overlap);
  return out;
}

bool Locus::subset_of(const Locus& other) const {
  if (is_empty()) return true;
  if (!base_.subset_of(other.base_)) return false;
  for (const auto& e : other.excluded_) {
    if (e.disjoint_from(base_)) continue;
    const bool removed_here =
        std::any_of(excluded_.begin(), excluded_.end(), [&](const LocusSet& mine) { return e.subset_of(mine); });
    if (!removed_here) return false;
  }
  return true;
}

std::vector<RationalPoint> Locus::interior_points(std::size_t n) const {
  std::vector<RationalPoint> candidates;
  switch (base_.kind()) {
    case LocusSet::Kind::Empty:
      return {};
    case LocusSet::Kind::Point:
      candidates.push_back(base_.the_point());
      break;
    case LocusSet::Kind::All:
      candidates = {{1, 1},           {2, Rational(1, 2)}, {Rational(1, 3), Rational(5, 2)}, {Rational(3, 2), Rational(7, 4)},
                    {Rational(4, 5), Rational(1, 5)}, {3, 2}, {Rational(5, 7), Rational(9, 4)}, {Rational(11, 6), Rational(2, 3)}};
      break;
    case LocusSet::Kind::Line: {
      const Rational lo = base_.lower();
      if (const auto& hi = base_.upper()) {
        const std::int64_t pieces = static_cast<std::int64_t>(2 * n + 2);
        for (std::int64_t k = 1; k < pieces; ++k) candidates.push_back(base_.at(lo + (*hi - lo) * Rational(k, pieces)));
      } else {
        for (const Rational& step : {Rational(1, 2), Rational(1), Rational(5, 3), Rational(3), Rational(1, 7),
                                     Rational(9, 4), Rational(4), Rational(7, 2)}) {
          candidates.push_back(base_.at(lo + step));
        }
      }
      break;
    }
  }
  std::vector<RationalPoint> out;
  for (const auto& p : candidates) {
    if (out.size() >= n) break;
    if (contains(p)) out.push_back(p);
  }
  return out;
}

std::vector<RationalPoint> Locus::exterior_points(std::size_t n) const {
  static const std::vector<RationalPoint> probes{
      {1, 1},
      {2, 1},
      {Rational(3, 2), Rational(5, 7)},
      {Rational(2, 3), Rational(9, 4)},
      {Rational(5, 2), Rational(1, 3)},
      {Rational(7, 5), Rational(11, 6)},
      {Rational(1, 4), 3},
      {Rational(1, 2), Rational(1, 2)},
      {3, 3},
      {Rational(5, 3), Rational(2, 3)},
      {Rational(1, 3), Rational(1, 5)},
  };
  std::vector<RationalPoint> out;
  for (const auto& p : probes) {
    if (out.size() >= n) break;
    if (!contains(p)) out.push_back(p);
  }
  return out;
}

std::string Locus::describe() const {
  std::string out = base_.describe();
  for (const auto& e : excluded_) out += " minus {" + e.describe() + "}";
  return out;
}

Locus solve_linear_system(const std::vector<LinearCondition>& system) {
  std::vector<LinearCondition> rows;
  for (const auto& r : system) {
    if (r.trivial()) continue;
    if (is_zero(r.ct) && is_zero(r.cs)) return Locus();  // 0 = c0 != 0
    rows.push_back(r);
  }
  if (rows.empty()) return Locus(LocusSet::all());

  const LinearCondition& r0 = rows.front();
  const LinearCondition* r1 = nullptr;
  for (const auto& r : rows) {
    if (!is_zero(r.ct * r0.cs - r.cs * r0.ct)) {
      r1 = &r;
      break;
    }
  }

  if (r1 == nullptr) {
    // Rank 1: every row must be a multiple of r0, constant term included.
    for (const auto& r : rows) {
      const Rational k = !is_zero(r0.ct) ? r.ct / r0.ct : r.cs / r0.cs;
      if (r.c0 != k * r0.c0) return Locus();
    }
    return Locus(LocusSet::line(r0));
  }

  const RationalPoint p = *intersect_lines(r0, *r1);
  for (const auto& r : rows) {
    if (!is_zero(r.eval(p.t, p.s))) return Locus();
  }
  return Locus(LocusSet::point(p));
}

}  // namespace affinor
