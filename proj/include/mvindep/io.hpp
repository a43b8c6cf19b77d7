// Copyright 2026 The mvindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "mvindep/inference.hpp"
#include "mvindep/power.hpp"
#include "mvindep/simulations.hpp"
#include "mvindep/types.hpp"

namespace mvindep {

/// Shortest decimal form that round-trips to the same double. Locale-free.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Locale-free strict double parse of a whole token.
inline bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

namespace detail {

inline std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace detail

/// Parses comma-separated numeric text (no quoting) into a matrix. Rows are
/// 1-based in error messages; a single header row is consumed when flagged
/// (its fields land in column_names when given).
inline Matrix read_csv_text(std::string_view text, bool has_header,
                            std::vector<std::string>* column_names = nullptr) {
  std::vector<std::vector<double>> rows;
  std::size_t expected_cols = 0;
  std::size_t line_no = 0;
  bool header_pending = has_header;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    line = detail::trim_cr(line);
    if (line.empty() && pos > text.size()) break;  // trailing newline
    ++line_no;
    const auto fields = detail::split_commas(line);
    if (header_pending) {
      header_pending = false;
      if (column_names) {
        column_names->clear();
        for (const auto f : fields) column_names->emplace_back(f);
      }
      expected_cols = fields.size();
      continue;
    }
    if (expected_cols == 0) expected_cols = fields.size();
    require(fields.size() == expected_cols, ErrorKind::parse_error,
            "ragged row " + std::to_string(line_no) + ": expected " +
                std::to_string(expected_cols) + " fields, got " +
                std::to_string(fields.size()));
    std::vector<double> row(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      require(parse_double(fields[c], row[c]), ErrorKind::parse_error,
              "non-numeric cell at row " + std::to_string(line_no) +
                  ", column " + std::to_string(c + 1) + ": '" +
                  std::string(fields[c]) + "'");
    }
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), ErrorKind::parse_error, "no data rows");

  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(expected_cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < expected_cols; ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return m;
}

inline Matrix read_csv(const std::string& path, bool has_header,
                       std::vector<std::string>* column_names = nullptr) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_csv_text(buffer.str(), has_header, column_names);
}

inline void write_csv(std::ostream& out, const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

inline void write_csv(const std::string& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::parse_error, "cannot write '" + path + "'");
  write_csv(out, m);
}

/// A loaded (x, y) pair plus provenance.
struct Dataset {
  Matrix x;
  Matrix y;
  std::string source;
  std::vector<std::string> x_names;
  std::vector<std::string> y_names;
};

inline Dataset load_dataset(const std::string& x_path, const std::string& y_path,
                            bool has_header) {
  Dataset d;
  d.x = read_csv(x_path, has_header, &d.x_names);
  d.y = read_csv(y_path, has_header, &d.y_names);
  d.source = x_path + "," + y_path;
  require_same_rows(d.x, d.y);
  return d;
}

enum class OutputFormat { json, csv };

inline OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw Error(ErrorKind::spec_error,
              "unknown output format '" + std::string(name) +
                  "'; valid formats: json, csv");
}

/// Validated run parameters for a single test invocation.
struct RunConfig {
  std::string statistic_name;
  int n_permutations = 1000;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  OutputFormat format = OutputFormat::json;

  void validate() const {
    find_statistic(statistic_name);
    require(n_permutations >= 1, ErrorKind::spec_error,
            "n_permutations must be >= 1");
    require(alpha > 0.0 && alpha < 1.0, ErrorKind::spec_error,
            "alpha must lie in (0, 1)");
  }
};

/// Serializes a test result. JSON keys appear in a fixed order; numbers are
/// written in shortest round-trip form in both formats. The CSV form is one
/// header row plus one data row with empty scale cells for non-multiscale
/// statistics.
inline std::string write_result(const TestResult& result, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["statistic_name"] = result.statistic_name;
    j["statistic"] = result.statistic;
    j["p_value"] = result.p_value;
    j["n_permutations"] = result.n_permutations;
    j["seed"] = result.seed;
    if (result.scale)
      j["scale"] = {result.scale->first, result.scale->second};
    return j.dump(2) + "\n";
  }
  std::string out =
      "statistic_name,statistic,p_value,n_permutations,seed,scale_k,scale_l\n";
  out += result.statistic_name + ',' + format_double(result.statistic) + ',' +
         format_double(result.p_value) + ',' +
         std::to_string(result.n_permutations) + ',' +
         std::to_string(result.seed) + ',';
  if (result.scale) {
    out += std::to_string(result.scale->first) + ',' +
           std::to_string(result.scale->second);
  } else {
    out += ',';
  }
  out += '\n';
  return out;
}

/// Reads back either write_result format (used by round-trip checks).
inline TestResult read_result(std::string_view text, OutputFormat format) {
  TestResult r;
  if (format == OutputFormat::json) {
    const auto j = nlohmann::json::parse(text);
    r.statistic_name = j.at("statistic_name").get<std::string>();
    r.statistic = j.at("statistic").get<double>();
    r.p_value = j.at("p_value").get<double>();
    r.n_permutations = j.at("n_permutations").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("scale"))
      r.scale = std::make_pair(j["scale"][0].get<int>(), j["scale"][1].get<int>());
    return r;
  }
  const std::size_t nl = text.find('\n');
  require(nl != std::string_view::npos, ErrorKind::parse_error,
          "csv result needs a header and a data row");
  std::string_view data = text.substr(nl + 1);
  if (const auto end = data.find('\n'); end != std::string_view::npos)
    data = data.substr(0, end);
  const auto fields = detail::split_commas(detail::trim_cr(data));
  require(fields.size() == 7, ErrorKind::parse_error,
          "csv result row must have 7 fields");
  r.statistic_name = std::string(fields[0]);
  require(parse_double(fields[1], r.statistic) &&
              parse_double(fields[2], r.p_value),
          ErrorKind::parse_error, "csv result has non-numeric fields");
  r.n_permutations = std::stoi(std::string(fields[3]));
  r.seed = std::stoull(std::string(fields[4]));
  if (!fields[5].empty() && !fields[6].empty())
    r.scale = std::make_pair(std::stoi(std::string(fields[5])),
                             std::stoi(std::string(fields[6])));
  return r;
}

/// Power table as plot-ready CSV: grid_value, power, stderr.
inline std::string write_power_csv(const PowerCurve& curve) {
  std::string out = "grid_value,power,stderr\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    out += std::to_string(curve.grid[i]) + ',' +
           format_double(curve.power[i]) + ',' +
           format_double(curve.stderr_at(i)) + '\n';
  }
  return out;
}

inline std::string write_power_json(const PowerCurve& curve) {
  nlohmann::ordered_json j;
  j["statistic_name"] = curve.statistic_name;
  j["simulation"] = find_simulation(curve.sim_kind).name;
  j["axis"] = curve.axis == PowerAxis::sample_size ? "n" : "p";
  j["alpha"] = curve.alpha;
  j["replicates"] = curve.replicates;
  j["n_permutations"] = curve.n_permutations;
  j["seed"] = curve.seed;
  j["kappa"] = curve.kappa;
  j["grid"] = curve.grid;
  j["power"] = curve.power;
  std::vector<double> se;
  se.reserve(curve.grid.size());
  for (std::size_t i = 0; i < curve.grid.size(); ++i)
    se.push_back(curve.stderr_at(i));
  j["stderr"] = se;
  return j.dump(2) + "\n";
}

/// Timing table CSV: statistic, n, mean_seconds.
inline std::string write_bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "statistic,n,mean_seconds\n";
  for (const BenchRow& row : rows) {
    out += row.statistic_name + ',' + std::to_string(row.n) + ',' +
           format_double(row.mean_seconds) + '\n';
  }
  return out;
}

}  // namespace mvindep
