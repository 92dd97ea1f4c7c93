#include "affinor/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace affinor::report {

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.14e", x);
  return buf;
}

Json to_json(const Rational& q) { return Json{{"num", q.numerator()}, {"den", q.denominator()}}; }

Json to_json(const RationalPoint& p) { return Json{{"t", to_json(p.t)}, {"s", to_json(p.s)}}; }

Json to_json(const LocusSet& set) {
  Json out;
  switch (set.kind()) {
    case LocusSet::Kind::Empty:
      out["kind"] = "empty";
      break;
    case LocusSet::Kind::All:
      out["kind"] = "all";
      break;
    case LocusSet::Kind::Point:
      out["kind"] = "point";
      out["point"] = to_json(set.the_point());
      break;
    case LocusSet::Kind::Line: {
      out["kind"] = "line";
      const auto& eq = set.equation();
      out["equation"] = Json{{"c0", to_json(eq.c0)}, {"ct", to_json(eq.ct)}, {"cs", to_json(eq.cs)}};
      out["parameter"] = set.parametrized_by_t() ? "t" : "s";
      out["lower"] = to_json(set.lower());
      out["upper"] = set.upper() ? to_json(*set.upper()) : Json(nullptr);
      break;
    }
  }
  out["description"] = set.describe();
  return out;
}

Json to_json(const Locus& locus) {
  Json excluded = Json::array();
  for (const auto& e : locus.excluded()) excluded.push_back(to_json(e));
  return Json{{"description", locus.describe()}, {"base", to_json(locus.base())}, {"excluded", excluded}};
}

Json to_json(const Verdict& v) {
  return Json{{"holds", v.holds}, {"max_residual", format_real(v.max_residual)}, {"trials", v.trials}};
}

Json to_json(const ClassificationRecord& rec) {
  Json witnesses = Json::array();
  for (const auto& w : rec.witnesses) {
    witnesses.push_back(Json{{"t", to_json(w.point.t)},
                             {"s", to_json(w.point.s)},
                             {"on_locus", w.on_locus},
                             {"holds", w.verdict.holds},
                             {"max_residual", format_real(w.verdict.max_residual)},
                             {"agrees", w.agrees}});
  }
  return Json{{"f", rec.f.name()},
              {"collection", rec.f.collection()},
              {"class", to_string(rec.tag)},
              {"locus", to_json(rec.locus)},
              {"strict", to_json(rec.strict)},
              {"witnesses", witnesses},
              {"consistent", rec.consistent()}};
}

Json to_json(const IdentityCheck& c) {
  return Json{{"identity", c.name}, {"residual", format_real(c.residual)}, {"holds", c.holds}};
}

Json to_json(const AffinorStructure& f) {
  Json out{{"tag", to_string(f.tag)}, {"rank", f.rank()}};
  if (const auto z = f.characteristic()) {
    out["characteristic"] = Json::array({(*z)[0], (*z)[1], (*z)[2]});
  } else {
    out["characteristic"] = nullptr;
  }
  return out;
}

Json to_json(const StructureCounts& c) { return Json{{"P", c.P}, {"J", c.J}, {"f", c.f}, {"h", c.h}}; }

Json to_json(const EinsteinPoint& p) {
  return Json{{"t", format_real(p.t)},
              {"s", format_real(p.s)},
              {"homothety_class", homothety_label(p.t, p.s)},
              {"einstein_constant", format_real(p.constant)},
              {"residual", format_real(p.residual)}};
}

namespace {

bool is_rational(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den"); }

bool is_scalar(const Json& j) { return !j.is_structured() || is_rational(j); }

std::string scalar_text(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (is_rational(j)) {
    const auto den = j["den"].get<std::int64_t>();
    const std::string num = std::to_string(j["num"].get<std::int64_t>());
    return den == 1 ? num : num + "/" + std::to_string(den);
  }
  return j.dump();
}

std::string inline_text(const Json& j) {
  if (is_scalar(j)) return scalar_text(j);
  if (j.is_object() && j.contains("description")) return j["description"].get<std::string>();
  std::string out;
  if (j.is_array()) {
    for (const auto& e : j) out += (out.empty() ? "" : "; ") + inline_text(e);
    return out.empty() ? "-" : out;
  }
  for (const auto& [k, v] : j.items()) out += (out.empty() ? "" : ", ") + k + "=" + inline_text(v);
  return out;
}

bool table_like(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j) {
    if (!e.is_object() || is_rational(e)) return false;
  }
  return true;
}

void render_table(std::ostringstream& os, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows) {
    for (const auto& [k, v] : r.items()) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  os << "|";
  for (const auto& c : cols) os << " " << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const auto& c : cols) os << " " << (r.contains(c) ? inline_text(r[c]) : "") << " |";
    os << "\n";
  }
}

void render_section(std::ostringstream& os, const Json& obj, int level) {
  for (const auto& [k, v] : obj.items()) {
    if (is_scalar(v)) os << "- **" << k << "**: " << scalar_text(v) << "\n";
  }
  for (const auto& [k, v] : obj.items()) {
    if (is_scalar(v)) continue;
    os << "\n" << std::string(static_cast<std::size_t>(level), '#') << " " << k << "\n\n";
    if (v.is_object()) {
      render_section(os, v, level + 1);
    } else if (table_like(v)) {
      render_table(os, v);
    } else if (v.empty()) {
      os << "(none)\n";
    } else {
      for (const auto& e : v) os << "- " << inline_text(e) << "\n";
    }
  }
}

}  // namespace

std::string to_markdown(const Json& report) {
  std::ostringstream os;
  os << "# affinor " << (report.contains("command") ? scalar_text(report["command"]) : "report") << "\n\n";
  render_section(os, report, 2);
  return os.str();
}

}  // namespace affinor::report
