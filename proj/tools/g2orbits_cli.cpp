// g2orbits: algebra verification, orbit inspection, parameter scans and
// classification reports for the exceptional cohomogeneity-one actions.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "g2orbits/g2orbits.hpp"

namespace {

using namespace g2orbits;

constexpr int kChecksFailed = 1;
constexpr int kRuntimeError = 3;
constexpr double kSpectrumAgreement = 1e-8;

struct Options {
  std::string format = "text";
  std::optional<double> cluster_tol;
  std::string output;
  std::string type;
  std::optional<double> t;
  std::optional<double> s;
  int samples = 200;
};

double cluster_tol(const Options& o) { return o.cluster_tol.value_or(kDefaultClusterTolerance); }

void emit(const Options& o, Report rep) {
  const OutputFormat f = parse_output_format(o.format);
  // Text output lists notes on their own lines and has no room for the matrix.
  if (f == OutputFormat::text) {
    rep.meta.erase("shape");
    rep.meta.erase("discrepancy_notes");
    for (auto& [key, value] : rep.meta.items())
      if (value.is_object()) value.erase("discrepancy_notes");
  }
  if (o.output.empty()) {
    write_report(std::cout, rep, f);
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + o.output + "'");
  write_report(out, rep, f);
}

int run_verify_algebra(const Options& o) {
  const auto checks = run_algebra_checks();
  emit(o, algebra_report(checks));
  for (const auto& c : checks)
    if (!c.passed) return kChecksFailed;
  return 0;
}

double resolve_t(const Options& o, const ActionSpec& spec) {
  if (o.t) return *o.t;
  if (o.s) return spec.t_from_s(*o.s);
  throw Error("one of --t or --s is required");
}

int run_orbit(const Options& o) {
  const ActionSpec& spec = action_spec(parse_action_type(o.type));
  const double t = resolve_t(o, spec);
  const SpectrumReport r = spectrum_report(spec, t, cluster_tol(o));
  Report rep = spectrum_report_table(r);
  const double dev = compare_spectra(spec, t, cluster_tol(o));
  rep.meta["closed_form_deviation"] = dev;
  rep.meta["closed_form_source"] = closed_form_source(spec.type);
  emit(o, rep);
  if (dev > kSpectrumAgreement) {
    std::cerr << "closed-form deviation " << dev << " exceeds " << kSpectrumAgreement << '\n';
    return kChecksFailed;
  }
  return 0;
}

int run_scan(const Options& o) {
  const ActionSpec& spec = action_spec(parse_action_type(o.type));
  emit(o, scan_report(spec, o.samples, cluster_tol(o)));
  return 0;
}

int run_classify(const Options& o) {
  std::vector<ClassificationResult> results;
  if (o.type.empty())
    for (ActionType type : kAllActionTypes) results.push_back(classify(action_spec(type)));
  else
    results.push_back(classify(action_spec(parse_action_type(o.type))));
  emit(o, classification_report(results));

  // A biharmonic disagreement is reported as a note; a missing or extra
  // root, or a minimal parameter off the published one, is a failure.
  int status = 0;
  for (const auto& c : results) {
    if (std::abs(c.minimal_t - c.published.minimal_t) > kMinimalAgreement) {
      std::cerr << "type " << to_string(c.type) << ": minimal parameter disagrees beyond " << kMinimalAgreement
                << '\n';
      status = kChecksFailed;
    }
    if (c.biharmonic_t.size() != c.published.biharmonic_t.size()) {
      std::cerr << "type " << to_string(c.type) << ": found " << c.biharmonic_t.size() << " biharmonic parameters, expected "
                << c.published.biharmonic_t.size() << '\n';
      status = kChecksFailed;
    }
  }
  return status;
}

int run_tables(const Options& o) {
  const double tol = cluster_tol(o);
  Report rep = tables_report(tol);
  int status = 0;
  for (ActionType type : kAllActionTypes) {
    const ActionSpec& spec = action_spec(type);
    for (double t : representative_parameters(spec)) {
      const double dev = compare_spectra(spec, t, tol);
      if (dev > kSpectrumAgreement) {
        std::cerr << "type " << to_string(type) << " at t = " << t << ": deviation " << dev << " exceeds "
                  << kSpectrumAgreement << '\n';
        status = kChecksFailed;
      }
    }
  }
  emit(o, rep);
  return status;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit geometry of the exceptional cohomogeneity-one actions on G2 and SO(7)"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--cluster-tol", o.cluster_tol, "Eigenvalue clustering tolerance (default 1e-6)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "Write the report to this path instead of stdout");

  const auto types = CLI::IsMember({"II", "III", "IV", "V"});

  auto* verify = app.add_subcommand("verify-algebra", "Run the octonion, bracket, triality and subalgebra suites");

  auto* orbit = app.add_subcommand("orbit", "Spectrum report of one principal orbit");
  orbit->add_option("--type", o.type, "Action type")->required()->check(types);
  auto* param = orbit->add_option_group("parameter", "Exactly one of --t, --s");
  param->add_option("--t", o.t, "Geodesic parameter t");
  param->add_option("--s", o.s, "Section parameter s (t = ratio * s)");
  param->require_option(1);

  auto* scan = app.add_subcommand("scan", "Curvature data at interval midpoints of the parameter range");
  scan->add_option("--type", o.type, "Action type")->required()->check(types);
  scan->add_option("--samples", o.samples, "Number of samples")->check(CLI::PositiveNumber)->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Minimal, austere and biharmonic principal orbits");
  classify_cmd->add_option("--type", o.type, "Action type (all four when omitted)")->check(types);

  auto* tables = app.add_subcommand("tables", "Closed-form versus computed principal curvatures");

  // Global options are also accepted after the subcommand name.
  for (auto* sub : {verify, orbit, scan, classify_cmd, tables}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify_algebra(o);
    if (orbit->parsed()) return run_orbit(o);
    if (scan->parsed()) return run_scan(o);
    if (classify_cmd->parsed()) return run_classify(o);
    if (tables->parsed()) return run_tables(o);
  } catch (const SingularOrbit& e) {
    std::cerr << "error: " << e.what() << " (codimension " << e.codimension() << ")\n";
    return kRuntimeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
