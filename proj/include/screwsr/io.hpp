#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "screwsr/controllability.hpp"
#include "screwsr/errors.hpp"
#include "screwsr/geodesics.hpp"
#include "screwsr/matrix.hpp"
#include "screwsr/octonion.hpp"
#include "screwsr/verify.hpp"

// Report serialization: JSON documents tagged with a schema version, and CSV
// tables with 17 significant digits and LF line endings.

namespace screwsr {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "screwsr/1";

inline json report_envelope(const std::string& command)
{
  return json{{"schema", kReportSchema}, {"command", command}};
}

/// %.17g, with nan / inf / -inf spelled out.
inline std::string format_number(double v)
{
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Real components of every entry in row-major order: one per entry over R,
/// (re, im) over C and (w, x, y, z) over H.
inline std::vector<double> flatten_components(const Mat& m)
{
  std::vector<double> out;
  for (const auto& q : m.data()) {
    out.push_back(q.w);
    if (m.field() != Field::Real) out.push_back(q.x);
    if (m.field() == Field::Quaternion) {
      out.push_back(q.y);
      out.push_back(q.z);
    }
  }
  return out;
}

/// Column names matching `flatten_components`, e.g. g_0_1 or g_0_1_im.
inline std::vector<std::string> component_names(const Mat& m, const std::string& prefix = "g")
{
  static const char* complex_parts[] = {"re", "im"};
  static const char* quaternion_parts[] = {"w", "x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string base = prefix + "_" + std::to_string(i) + "_" + std::to_string(j);
      if (m.field() == Field::Real)
        names.push_back(base);
      else if (m.field() == Field::Complex)
        for (const char* p : complex_parts) names.push_back(base + "_" + p);
      else
        for (const char* p : quaternion_parts) names.push_back(base + "_" + p);
    }
  return names;
}

/// Nested rows of component arrays (a real matrix gives plain numbers).
inline json matrix_to_json(const Mat& m)
{
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Quaternion& q = m(i, j);
      if (m.field() == Field::Real)
        row.push_back(q.w);
      else if (m.field() == Field::Complex)
        row.push_back(json::array({q.w, q.x}));
      else
        row.push_back(json::array({q.w, q.x, q.y, q.z}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const ControllabilityReport& r)
{
  return json{{"system", r.system},
              {"dim_g", r.dim_g},
              {"dim_span", r.dim_span},
              {"predicted_controllable", r.predicted},
              {"controllable", r.observed},
              {"consistent", r.consistent()},
              {"smallest_kept_eigenvalue", r.spectrum.smallest_kept},
              {"largest_dropped_eigenvalue", r.spectrum.largest_dropped}};
}

inline json to_json(const SpaceFormReport& s)
{
  json j = to_json(s.report);
  j["kappa"] = s.kappa;
  j["lambda"] = s.lambda;
  j["kk_model_dim_span"] = s.kk_model_dim_span;
  j["alternative_predicate"] = s.alternative_predicate;
  j["general_predicate"] = s.general_predicate;
  return j;
}

inline json to_json(const OctoControllabilityReport& o)
{
  json j = to_json(o.report);
  j["bracket_rank"] = o.bracket_rank;
  return j;
}

inline json to_json(const GeodesicCertificate& c)
{
  return json{{"horizontality", c.horizontality},
              {"speed_deviation", c.speed_deviation},
              {"closed_form_residual", c.closed_form_residual},
              {"group_residual", c.group_residual},
              {"subgroup_deviation", c.subgroup_deviation},
              {"bracket_norm", c.bracket_norm},
              {"samples", c.samples}};
}

inline json to_json(const MomentumCertificate& m)
{
  return json{{"c", m.c},
              {"d", m.d},
              {"n", m.n},
              {"cometric_residual", m.cometric_residual},
              {"ad_x_residual", m.ad_x_residual},
              {"ad_z_residual", m.ad_z_residual},
              {"g2_annihilation", m.g2_annihilation},
              {"hamiltonian_residual", m.hamiltonian_residual},
              {"frame_residual", m.frame_residual}};
}

inline json to_json(const CheckResult& c)
{
  json j{{"module", c.module}, {"name", c.name},     {"value", c.value},
         {"bound", c.bound},   {"passed", c.passed}, {"tolerance_bound", c.tolerance_bound}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

/// Summary without timing, so that reports are reproducible byte for byte.
inline json to_json(const VerifySummary& s)
{
  json checks = json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  return json{{"passed", s.passed()}, {"failed", s.failed()}, {"checks", std::move(checks)}};
}

/// Minimal CSV writer: fields are quoted when they contain separators.
class CsvTable
{
public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row)
  {
    if (row.size() != header_.size()) throw DimensionError("CsvTable: row width does not match header");
    rows_.push_back(std::move(row));
  }

  /// Lines starting with '#' before the header.
  void add_comment(const std::string& text) { comments_.push_back(text); }

  std::string str() const
  {
    std::string out;
    for (const auto& c : comments_) out += "# " + c + "\n";
    append(out, header_);
    for (const auto& r : rows_) append(out, r);
    return out;
  }

private:
  static std::string quote(const std::string& f)
  {
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string q = "\"";
    for (char c : f) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }

  static void append(std::string& out, const std::vector<std::string>& fields)
  {
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + quote(fields[i]);
    out += "\n";
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> comments_;
};

/// Writes bytes verbatim (no newline translation).
inline void write_text_file(const std::string& path, const std::string& content)
{
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace screwsr
