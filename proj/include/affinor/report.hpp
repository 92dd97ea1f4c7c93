#pragma once

#include <string>

#include <json.hpp>

#include "affinor/classify.hpp"
#include "affinor/curvature.hpp"
#include "affinor/locus.hpp"
#include "affinor/phispace.hpp"

namespace affinor::report {

using Json = nlohmann::ordered_json;

/// Fixed 15-significant-digit scientific notation, e.g. "1.00000000000000e-09".
std::string format_real(double x);

/// {"num": p, "den": q}.
Json to_json(const Rational& q);
Json to_json(const RationalPoint& p);
Json to_json(const LocusSet& set);
Json to_json(const Locus& locus);
Json to_json(const Verdict& v);
Json to_json(const ClassificationRecord& rec);
Json to_json(const IdentityCheck& c);
Json to_json(const AffinorStructure& f);
Json to_json(const StructureCounts& c);
Json to_json(const EinsteinPoint& p);

/// Renders a report object as markdown. Every number is printed from the same string as in
/// the JSON form; rationals as "p/q".
std::string to_markdown(const Json& report);

}  // namespace affinor::report
