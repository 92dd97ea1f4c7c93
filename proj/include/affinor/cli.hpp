#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "affinor/curvature.hpp"
#include "affinor/flagmetric.hpp"
#include "affinor/locus.hpp"

namespace affinor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitBadInput = 2;

/// "1,1,0", "(1,-1,0)" or a name such as "J1" or "f3". Throws InvalidInput.
FStructure parse_fstructure(const std::string& text);

/// Three positive rationals "l1,l2,l3". Throws InvalidInput.
std::array<Rational, 3> parse_metric(const std::string& text);

/// Comma-separated entries of diag(s): 1, -1, i, -i, eN, eN*, eN^p, each optionally negated.
/// eN is exp(2 pi i / N). Throws InvalidInput.
std::array<cplx, 3> parse_element(const std::string& text);

/// "lo:hi:step". Throws InvalidInput.
GridRange parse_grid(const std::string& text);

/// Runs one command line (program name excluded). Reports go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 when an internal cross-check disagrees, 2 on malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affinor::cli
