#include "affinor/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "affinor/classify.hpp"
#include "affinor/errors.hpp"
#include "affinor/phispace.hpp"
#include "affinor/report.hpp"

namespace affinor::cli {

using report::Json;
using report::format_real;
using report::to_json;

namespace {

std::string strip(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') out.push_back(ch);
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_small_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput("not an integer: '" + text + "'");
}

double parse_real(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput("not a number: '" + text + "'");
}

double clean(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

Json complex_json(cplx z) { return Json{{"re", format_real(clean(z.real()))}, {"im", format_real(clean(z.imag()))}}; }

Json grid_json(const GridRange& r) {
  return Json{{"lo", format_real(r.lo)}, {"hi", format_real(r.hi)}, {"step", format_real(r.step)}};
}

Json metric_json(const std::array<Rational, 3>& lambda) {
  return Json{{"lambda", Json::array({to_json(lambda[0]), to_json(lambda[1]), to_json(lambda[2])})},
              {"t", to_json(lambda[1] / lambda[0])},
              {"s", to_json(lambda[2] / lambda[0])}};
}

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

struct Options {
  std::string command;
  std::string f;
  std::string metric;
  std::string cls;
  std::string element;
  std::string grid = "0.01:2.5:0.01";
  std::string probe;
  int order = 3;
  int trials = 1000;
  double tol = 1e-9;
  std::uint64_t seed = TangentSampler::kDefaultSeed;
  std::string format = "json";
};

Json settings_json(const Options& o) {
  return Json{{"seed", o.seed}, {"trials", o.trials}, {"tol", format_real(o.tol)}};
}

std::vector<ClassTag> selected_classes(const Options& o) {
  if (o.cls.empty() || o.cls == "all") return {kAllClasses.begin(), kAllClasses.end()};
  std::vector<ClassTag> out;
  for (const auto& name : split(strip(o.cls), ',')) {
    const ClassTag tag = parse_class_tag(name);
    if (std::find(out.begin(), out.end(), tag) == out.end()) out.push_back(tag);
  }
  return out;
}

FStructure checked_fstructure(const std::string& text) {
  const FStructure f = parse_fstructure(text);
  if (f.is_zero()) throw InvalidInput("the zero structure (0,0,0) is not an f-structure");
  return f;
}

// One row of an exact-versus-numeric comparison at a rational metric.
Json probe_row(const FStructure& f, ClassTag tag, const std::array<Rational, 3>& lambda, const Options& o,
               bool& disagreement) {
  const RationalPoint p{lambda[1] / lambda[0], lambda[2] / lambda[0]};
  const bool in_locus = class_locus(f, tag).contains(p);
  const bool in_strict = strict_locus(f, tag).contains(p);
  const Metric g(to_double(lambda[0]), to_double(lambda[1]), to_double(lambda[2]));
  const Verdict v = numeric_verify(f, g, tag, {o.trials, o.tol, o.seed, 0});
  const ClassifyOptions defaults;
  const bool agrees = in_locus ? v.holds : (!v.holds && v.max_residual > defaults.off_locus_min);
  if (!agrees) disagreement = true;
  return Json{{"f", f.name()},
              {"collection", f.collection()},
              {"class", to_string(tag)},
              {"in_locus", in_locus},
              {"in_strict", in_strict},
              {"holds", v.holds},
              {"max_residual", format_real(v.max_residual)},
              {"agrees", agrees}};
}

Json header(const Options& o, Json options) {
  return Json{{"command", o.command}, {"options", std::move(options)}, {"settings", settings_json(o)}};
}

Json cmd_classify(const Options& o, bool& disagreement) {
  std::vector<FStructure> structures;
  if (o.f.empty()) {
    structures = all_fstructures();
  } else {
    structures.push_back(checked_fstructure(o.f).canonical());
  }
  const auto classes = selected_classes(o);
  std::optional<std::array<Rational, 3>> lambda;
  if (!o.metric.empty()) lambda = parse_metric(o.metric);

  ClassifyOptions opts;
  opts.trials = o.trials;
  opts.tol = o.tol;
  opts.seed = o.seed;

  Json records = Json::array();
  Json probe_rows = Json::array();
  int consistent = 0;
  int total = 0;
  bool g1f_strict_empty = true;
  for (const auto& f : structures) {
    for (ClassTag tag : classes) {
      const auto rec = classify_record(f, tag, opts);
      ++total;
      if (rec.consistent()) {
        ++consistent;
      } else {
        disagreement = true;
      }
      if (tag == ClassTag::G1 && !rec.strict.is_empty()) g1f_strict_empty = false;
      records.push_back(to_json(rec));
      if (lambda) probe_rows.push_back(probe_row(f, tag, *lambda, o, disagreement));
    }
  }

  Json options{{"f", o.f.empty() ? Json("all") : Json(structures.front().collection())},
               {"class", o.cls.empty() ? "all" : o.cls},
               {"metric", lambda ? metric_json(*lambda) : Json(nullptr)}};
  Json rep = header(o, std::move(options));
  Json summary{{"records", total}, {"consistent", consistent}};
  if (std::find(classes.begin(), classes.end(), ClassTag::G1) != classes.end()) {
    summary["strict_g1f_empty"] = g1f_strict_empty;
  }
  rep["summary"] = summary;
  rep["records"] = records;
  if (lambda) rep["probe"] = probe_rows;
  return rep;
}

Json cmd_verify(const Options& o, bool& disagreement) {
  if (o.f.empty()) throw InvalidInput("verify needs --f");
  if (o.metric.empty()) throw InvalidInput("verify needs --metric");
  const FStructure f = checked_fstructure(o.f);
  const auto lambda = parse_metric(o.metric);
  const auto classes = selected_classes(o);
  Json rows = Json::array();
  for (ClassTag tag : classes) rows.push_back(probe_row(f, tag, lambda, o, disagreement));
  Json rep = header(o, Json{{"f", f.collection()}, {"class", o.cls.empty() ? "all" : o.cls}, {"metric", metric_json(lambda)}});
  rep["results"] = rows;
  return rep;
}

std::string default_element(int k) {
  if (k == 4) return "i,-i,1";
  const std::string e = "e" + std::to_string(k);
  return k == 5 ? e + "," + e + "^-1,1" : e + "," + e + "*,1";
}

Json identities_json(const std::vector<IdentityCheck>& ids, bool& all_hold) {
  Json out = Json::array();
  for (const auto& c : ids) {
    out.push_back(to_json(c));
    all_hold = all_hold && c.holds;
  }
  return out;
}

Json cmd_canonical(const Options& o, bool& disagreement) {
  if (o.order < 1) throw InvalidInput("--order must be positive");
  const std::string element = o.element.empty() ? default_element(o.order) : o.element;
  const auto s = parse_element(element);
  const ThetaOperator theta = build_theta(make_inner_automorphism(s, o.order));
  const CanonicalCatalog cat = enumerate_canonical(theta, o.order);

  Json blocks = Json::array();
  for (int j = 0; j < 3; ++j) {
    Json b{{"block", "m" + std::to_string(j + 1)}, {"in_m", theta.blocks()[j]}};
    b.update(complex_json(theta.multipliers()[j]));
    blocks.push_back(b);
  }
  Json spectrum = Json::array();
  for (const auto& z : theta.spectrum()) spectrum.push_back(complex_json(z));
  Json fs = Json::array();
  for (const auto& f : cat.f_structures) fs.push_back(to_json(f));
  Json hs = Json::array();
  for (const auto& h : cat.h_structures) hs.push_back(to_json(h));

  Json elem = Json::array();
  for (const auto& z : s) elem.push_back(complex_json(z));
  Json rep = header(o, Json{{"order", o.order}, {"element", element}});
  rep["element_values"] = elem;
  rep["dim_m"] = theta.dim();
  rep["blocks"] = blocks;
  rep["spectrum"] = spectrum;
  rep["quadratic_factors"] = theta.quadratic_factors();
  rep["irreducible_factors"] = theta.irreducible_factors();
  rep["counts"] = Json{{"predicted", to_json(cat.predicted)},
                       {"observed", to_json(cat.observed)},
                       {"f_up_to_sign", cat.f_up_to_sign},
                       {"match", cat.counts_match()}};
  if (!cat.counts_match()) disagreement = true;
  rep["f_structures"] = fs;
  rep["h_structures"] = hs;

  bool all_hold = true;
  if (o.order == 3) {
    const auto r = order3_structures(theta);
    rep["relations"] = Json{{"J", to_json(r.J)}, {"P", to_json(r.P)}, {"identities", identities_json(r.identities, all_hold)}};
  } else if (o.order == 4) {
    const auto r = order4_structures(theta);
    const auto& c = r.conditions;
    rep["relations"] = Json{{"P", to_json(r.P)},
                            {"f", to_json(r.f)},
                            {"h1", to_json(r.h1)},
                            {"h2", to_json(r.h2)},
                            {"identities", identities_json(r.identities, all_hold)},
                            {"conditions", Json{{"minus_one_not_in_spectrum", c[0]},
                                                {"P_is_minus_identity", c[1]},
                                                {"f_almost_complex", c[2]},
                                                {"h1_is_identity", c[3]},
                                                {"h2_is_zero", c[4]},
                                                {"agree", r.conditions_agree()}}}};
    if (!r.conditions_agree()) disagreement = true;
  } else if (o.order == 5) {
    const auto r = corollary5_relations(theta);
    const auto& c = r.conditions;
    Json ids = identities_json(r.identities, all_hold);
    all_hold = all_hold && r.complement_sum.holds;
    rep["relations"] = Json{{"P", to_json(r.P)},
                            {"J1", to_json(r.J1)},
                            {"J2", to_json(r.J2)},
                            {"f1", to_json(r.f1)},
                            {"f2", to_json(r.f2)},
                            {"h1", to_json(r.h1)},
                            {"h2", to_json(r.h2)},
                            {"identities", ids},
                            {"complement_sum", to_json(r.complement_sum)},
                            {"literal_sum", to_json(r.literal_sum)},
                            {"conditions", Json{{"spectrum_two_elements", c[0]},
                                                {"P_trivial", c[1]},
                                                {"J1_equals_pm_J2", c[2]},
                                                {"f_split", c[3]},
                                                {"h_split", c[4]},
                                                {"agree", r.conditions_agree()}}}};
    if (!r.conditions_agree()) disagreement = true;
  }
  if (!all_hold) disagreement = true;
  return rep;
}

Json cmd_einstein(const Options& o) {
  if (!o.probe.empty()) {
    const auto lambda = parse_metric(o.probe);
    const Metric g(to_double(lambda[0]), to_double(lambda[1]), to_double(lambda[2]));
    const auto r = ricci_blocks(g);
    const EinsteinFit fit = einstein_fit(g);
    const bool einstein = fit.residual <= o.tol;
    Json rep = header(o, Json{{"probe", metric_json(lambda)}});
    rep["probe"] = Json{{"ricci", Json::array({format_real(r[0]), format_real(r[1]), format_real(r[2])})},
                        {"einstein_constant", format_real(fit.constant)},
                        {"residual", format_real(fit.residual)},
                        {"einstein", einstein},
                        {"verdict", einstein ? "Einstein" : "not Einstein"}};
    return rep;
  }
  const GridRange range = parse_grid(o.grid);
  ScanOptions opts;
  opts.tol = o.tol;
  const auto points = einstein_scan({range, range}, opts);
  Json pts = Json::array();
  Json classes = Json::array();
  for (const auto& p : points) {
    pts.push_back(to_json(p));
    classes.push_back(homothety_label(p.t, p.s));
  }
  Json rep = header(o, Json{{"grid", Json{{"t", grid_json(range)}, {"s", grid_json(range)}}}});
  rep["count"] = static_cast<int>(points.size());
  rep["homothety_classes"] = classes;
  rep["points"] = pts;
  return rep;
}

}  // namespace

FStructure parse_fstructure(const std::string& text) {
  const std::string t = strip(text);
  for (const auto& f : all_fstructures()) {
    if (t == f.name()) return f;
    if (t == "-" + f.name()) return f.negated();
  }
  const auto parts = split(t, ',');
  if (parts.size() != 3) throw InvalidInput("expected three entries in '" + text + "'");
  std::array<int, 3> z{};
  for (int j = 0; j < 3; ++j) {
    z[j] = parse_small_int(parts[j]);
    if (z[j] < -1 || z[j] > 1) throw InvalidInput("entries must be -1, 0 or 1 in '" + text + "'");
  }
  if (z == std::array<int, 3>{0, 0, 0}) throw InvalidInput("the zero structure (0,0,0) is not an f-structure");
  return {z[0], z[1], z[2]};
}

std::array<Rational, 3> parse_metric(const std::string& text) {
  const auto parts = split(strip(text), ',');
  if (parts.size() != 3) throw InvalidInput("expected three entries in '" + text + "'");
  std::array<Rational, 3> out;
  for (int j = 0; j < 3; ++j) {
    out[j] = parse_rational(parts[j]);
    if (out[j] <= Rational(0)) throw InvalidInput("metric entries must be positive in '" + text + "'");
  }
  return out;
}

std::array<cplx, 3> parse_element(const std::string& text) {
  const auto parts = split(strip(text), ',');
  if (parts.size() != 3) throw InvalidInput("expected three entries in '" + text + "'");
  std::array<cplx, 3> out;
  for (int j = 0; j < 3; ++j) {
    std::string tok = parts[j];
    double sign = 1.0;
    if (!tok.empty() && (tok.front() == '-' || tok.front() == '+')) {
      if (tok.front() == '-') sign = -1.0;
      tok.erase(0, 1);
    }
    cplx z;
    if (tok == "1") {
      z = 1.0;
    } else if (tok == "i") {
      z = cplx(0.0, 1.0);
    } else if (tok.size() > 1 && tok.front() == 'e') {
      bool conj = false;
      if (tok.back() == '*') {
        conj = true;
        tok.pop_back();
      }
      int power = 1;
      if (const auto caret = tok.find('^'); caret != std::string::npos) {
        power = parse_small_int(tok.substr(caret + 1));
        tok.erase(caret);
      }
      const int n = parse_small_int(tok.substr(1));
      if (n < 1) throw InvalidInput("root of unity order must be positive in '" + parts[j] + "'");
      if (conj) power = -power;
      const int m = ((power % n) + n) % n;
      z = std::polar(1.0, 2.0 * std::numbers::pi * m / n);
    } else {
      throw InvalidInput("unrecognized element entry '" + parts[j] + "'");
    }
    out[j] = sign * z;
  }
  return out;
}

GridRange parse_grid(const std::string& text) {
  const auto parts = split(strip(text), ':');
  if (parts.size() != 3) throw InvalidInput("grid must be lo:hi:step, got '" + text + "'");
  GridRange r{parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
  if (!(r.lo > 0.0) || !(r.hi >= r.lo) || !(r.step > 0.0)) {
    throw InvalidInput("grid must satisfy 0 < lo <= hi and step > 0, got '" + text + "'");
  }
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Invariant f-structures on SU(3)/T_max and canonical structures of k-symmetric spaces", "affinor"};
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--f", o.f, "Characteristic collection, e.g. 1,1,0, or a name such as f1");
  app.add_option("--metric", o.metric, "Metric triple l1,l2,l3 of positive rationals");
  app.add_option("--class", o.cls, "kahler, killing, nkf, hermitian, g1f, or all");
  app.add_option("--order", o.order, "Order k of the automorphism")->capture_default_str();
  app.add_option("--element", o.element, "Diagonal entries of s, e.g. e5,e5^-1,1");
  app.add_option("--grid", o.grid, "Einstein scan range lo:hi:step for both t and s")->capture_default_str();
  app.add_option("--probe", o.probe, "Metric triple to test for the Einstein condition");
  app.add_option("--trials", o.trials, "Random samples per numeric check")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--tol", o.tol, "Numeric tolerance")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "Sampler seed")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "markdown"}));

  app.add_subcommand("classify", "Class loci of the invariant f-structures");
  app.add_subcommand("canonical", "Canonical structures of an inner automorphism of finite order");
  app.add_subcommand("einstein", "Invariant Einstein metrics");
  app.add_subcommand("verify", "Numeric check of one structure at one metric");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  o.command = app.get_subcommands().front()->get_name();

  bool disagreement = false;
  Json rep;
  try {
    if (o.command == "classify") {
      rep = cmd_classify(o, disagreement);
    } else if (o.command == "verify") {
      rep = cmd_verify(o, disagreement);
    } else if (o.command == "canonical") {
      rep = cmd_canonical(o, disagreement);
    } else {
      rep = cmd_einstein(o);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const NotFiniteOrder& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const RegularityViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const UnknownClassTag& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const EmptyGrid& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDisagreement;
  }

  rep["status"] = disagreement ? "disagreement" : "ok";
  if (o.format == "markdown") {
    out << report::to_markdown(rep);
  } else {
    out << rep.dump(2) << "\n";
  }
  if (disagreement) err << "error: internal cross-check disagreement\n";
  return disagreement ? kExitDisagreement : kExitOk;
}

}  // namespace affinor::cli
