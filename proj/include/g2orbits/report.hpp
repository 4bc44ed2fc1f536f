#pragma once

// Tabular reports: scan rows, spectrum reports, classification summaries and
// closed-form comparisons, rendered as aligned text, CSV, or JSON.

#include <algorithm>
#include <iomanip>
#include <istream>
#include <limits>
#include <locale>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "algebra_checks.hpp"
#include "classification.hpp"
#include "orbit.hpp"

namespace g2orbits {

using Cell = std::variant<double, long long, bool, std::string>;

/// Column-oriented report: free-form metadata plus a rectangular table.
struct Report {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;  // shown in text output, stored in meta for JSON
};

enum class OutputFormat { text, csv, json };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw Error("unknown output format '" + std::string(s) + "' (expected text, csv or json)");
}

/// 17 significant digits, so every double survives a text round trip.
inline std::string format_double(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

inline std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      c);
}

inline nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

} // namespace detail

inline void write_csv(std::ostream& os, const Report& r) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << detail::csv_escape(r.columns[i]);
  os << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_escape(cell_text(row[i]));
    os << '\n';
  }
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["meta"] = r.meta;
  if (!r.notes.empty()) j["meta"]["notes"] = r.notes;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) o[r.columns[i]] = cell_json(row[i]);
    j["rows"].push_back(std::move(o));
  }
  return j;
}

inline void write_json(std::ostream& os, const Report& r) { os << to_json(r).dump(2) << '\n'; }

inline void write_text(std::ostream& os, const Report& r) {
  auto scalar = [](const nlohmann::ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [key, value] : r.meta.items()) {
    if (!value.is_object()) {
      os << key << ": " << scalar(value) << '\n';
      continue;
    }
    for (const auto& [sub, inner] : value.items()) os << key << '.' << sub << ": " << scalar(inner) << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (r.columns.empty()) return;
  if (!r.meta.empty() || !r.notes.empty()) os << '\n';

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
  for (const auto& row : r.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << line[i];
    }
    os << '\n';
  };
  emit(r.columns);
  for (const auto& line : cells) emit(line);
}

inline void write_report(std::ostream& os, const Report& r, OutputFormat f) {
  switch (f) {
  case OutputFormat::text: write_text(os, r); break;
  case OutputFormat::csv: write_csv(os, r); break;
  case OutputFormat::json: write_json(os, r); break;
  }
}

/// A parsed CSV file whose data cells are all numeric.
struct NumericCsv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

inline NumericCsv read_numeric_csv(std::istream& is) {
  NumericCsv out;
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> f;
    std::stringstream ss(l);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!l.empty() && l.back() == ',') f.emplace_back();
    return f;
  };
  if (!std::getline(is, line)) throw Error("read_numeric_csv: empty input");
  out.header = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& f : split(line)) {
      std::istringstream cs(f);
      cs.imbue(std::locale::classic());
      double v;
      if (!(cs >> v)) throw Error("read_numeric_csv: non-numeric cell '" + f + "'");
      row.push_back(v);
    }
    if (row.size() != out.header.size()) throw Error("read_numeric_csv: ragged row");
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// Source label for the closed forms a comparison targets.
inline std::string closed_form_source(ActionType type) {
  return "published principal-curvature table, type " + std::string(to_string(type));
}

inline nlohmann::ordered_json spectrum_json(const ClusteredSpectrum& s) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& e : s) a.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return a;
}

inline std::string multiplicity_pattern(const ClusteredSpectrum& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i].multiplicity);
  return out;
}

inline Report spectrum_report_table(const SpectrumReport& r) {
  Report rep;
  rep.meta["type"] = std::string(to_string(r.type));
  rep.meta["t"] = r.t;
  rep.meta["s"] = r.s;
  rep.meta["orbit_dim"] = r.orbit_dim;
  rep.meta["mean_curvature"] = r.mean_curvature;
  rep.meta["norm_sq"] = r.norm_sq;
  rep.meta["austere"] = r.austere;
  rep.meta["cluster_ambiguous"] = r.cluster_ambiguous;
  nlohmann::ordered_json shape = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.shape.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < r.shape.cols(); ++j) row.push_back(r.shape(i, j));
    shape.push_back(std::move(row));
  }
  rep.meta["shape"] = std::move(shape);
  rep.columns = {"curvature", "multiplicity"};
  for (const auto& e : r.curvatures) rep.rows.push_back({e.value, static_cast<long long>(e.multiplicity)});
  return rep;
}

/// Row per sample: t, s, orbit_dim, mean_curvature, norm_sq, k1..kn.
inline Report scan_report(const ActionSpec& spec, int samples, double cluster_tol = kDefaultClusterTolerance) {
  if (samples < 1) throw Error("scan: samples must be positive");
  Report rep;
  rep.meta["type"] = std::string(to_string(spec.type));
  rep.meta["samples"] = samples;
  rep.meta["t_min"] = spec.t_min;
  rep.meta["t_max"] = spec.t_max;
  rep.meta["section_ratio"] = spec.section_ratio;
  rep.meta["sampling"] = "interval midpoints";
  const double h = (spec.t_max - spec.t_min) / samples;
  for (int i = 0; i < samples; ++i) {
    const double t = spec.t_min + (i + 0.5) * h;
    if (spec.is_singular_parameter(t, kSingularGuard)) continue;
    const SpectrumReport r = spectrum_report(spec, t, cluster_tol);
    if (rep.columns.empty()) {
      rep.columns = {"t", "s", "orbit_dim", "mean_curvature", "norm_sq"};
      for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) rep.columns.push_back("k" + std::to_string(k + 1));
    }
    std::vector<Cell> row{r.t, r.s, static_cast<long long>(r.orbit_dim), r.mean_curvature, r.norm_sq};
    for (double e : r.eigenvalues) row.emplace_back(e);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline nlohmann::ordered_json classification_meta(const ClassificationResult& c) {
  const ActionSpec& spec = action_spec(c.type);
  nlohmann::ordered_json m;
  m["minimal_t"] = c.minimal_t;
  m["minimal_s"] = c.minimal_s;
  m["minimal_austere"] = c.minimal_austere;
  m["published_minimal_t"] = c.published.minimal_t;
  m["published_minimal_formula"] = c.published.minimal_formula;
  m["biharmonic_t"] = c.biharmonic_t;
  m["biharmonic_s"] = c.biharmonic_s;
  m["published_biharmonic_t"] = c.published.biharmonic_t;
  m["published_biharmonic_formula"] = c.published.biharmonic_formula;
  m["singular_orbit_dims"] = {c.endpoint_dim_lo, c.endpoint_dim_hi};
  m["einstein_constant"] = spec.einstein_constant;
  m["closed_form_source"] = closed_form_source(c.type);
  m["discrepancy_notes"] = c.discrepancy_notes;
  return m;
}

/// One row per located parameter, paired with the published value in
/// ascending order. `agrees` uses the tolerances of classify().
inline Report classification_report(const std::vector<ClassificationResult>& results) {
  Report rep;
  rep.columns = {"type", "kind", "t", "s", "published_t", "published_s", "deviation_t", "agrees"};
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& c : results) {
    const ActionSpec& spec = action_spec(c.type);
    const std::string type(to_string(c.type));
    if (results.size() == 1) {
      rep.meta["type"] = type;
      const nlohmann::ordered_json meta = classification_meta(c);
      for (const auto& [k, v] : meta.items()) rep.meta[k] = v;
    } else {
      rep.meta[type] = classification_meta(c);
    }
    for (const auto& n : c.discrepancy_notes) rep.notes.push_back("type " + type + ": " + n);

    const double dm = std::abs(c.minimal_t - c.published.minimal_t);
    rep.rows.push_back({type, std::string("minimal"), c.minimal_t, c.minimal_s, c.published.minimal_t,
                        spec.s_from_t(c.published.minimal_t), dm, dm <= kMinimalAgreement});
    std::vector<double> published = c.published.biharmonic_t;
    std::sort(published.begin(), published.end());
    const std::size_t n = std::max(published.size(), c.biharmonic_t.size());
    for (std::size_t i = 0; i < n; ++i) {
      const double t = i < c.biharmonic_t.size() ? c.biharmonic_t[i] : nan;
      const double p = i < published.size() ? published[i] : nan;
      const double d = std::abs(t - p);
      rep.rows.push_back({type, std::string("biharmonic"), t, spec.s_from_t(t), p, spec.s_from_t(p), d,
                          d <= kBiharmonicAgreement});
    }
  }
  return rep;
}

/// Representative principal parameters: quarter points of the range.
inline std::vector<double> representative_parameters(const ActionSpec& spec) {
  std::vector<double> ts;
  for (double f : {0.25, 0.5, 0.75}) ts.push_back(spec.t_min + f * (spec.t_max - spec.t_min));
  return ts;
}

/// Closed-form versus computed spectra at representative parameters.
inline Report tables_report(double cluster_tol = kDefaultClusterTolerance) {
  Report rep;
  rep.meta["cluster_tol"] = cluster_tol;
  rep.columns = {"type", "t", "s", "index", "closed_form", "computed", "deviation", "multiplicities", "source"};
  for (ActionType type : kAllActionTypes) {
    const ActionSpec& spec = action_spec(type);
    for (double t : representative_parameters(spec)) {
      const SpectrumReport r = spectrum_report(spec, t, cluster_tol);
      const std::vector<double> closed = expand(closed_form_spectrum(type, t));
      const std::string pattern = multiplicity_pattern(r.curvatures);
      for (std::size_t i = 0; i < closed.size(); ++i)
        rep.rows.push_back({std::string(to_string(type)), t, spec.s_from_t(t), static_cast<long long>(i + 1),
                            closed[i], r.eigenvalues[i], std::abs(closed[i] - r.eigenvalues[i]), pattern,
                            closed_form_source(type)});
    }
  }
  return rep;
}

inline Report algebra_report(const std::vector<CheckResult>& checks) {
  Report rep;
  std::size_t failed = 0;
  for (const auto& c : checks) failed += !c.passed;
  rep.meta["checks"] = checks.size();
  rep.meta["failed"] = failed;
  rep.columns = {"status", "group", "check", "detail"};
  for (const auto& c : checks)
    rep.rows.push_back({std::string(c.passed ? "PASS" : "FAIL"), c.group, c.name, c.detail});
  return rep;
}

} // namespace g2orbits
