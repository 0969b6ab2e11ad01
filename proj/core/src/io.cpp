// core/src/io.cpp

// Copyright 2026  The gabor-phase-retrieval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "gpr/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gpr {
namespace {

using nlohmann::ordered_json;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return in;
}

ordered_json parse_json(const std::string& path) {
  auto in = open_in(path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    // e.what() carries the line and column of the offending byte.
    throw ParseError(path + ": " + e.what());
  }
}

[[noreturn]] void field_error(const std::string& path, const std::string& field,
                              const std::string& expected) {
  throw ParseError(path + ": field \"" + field + "\" " + expected);
}

double want_number(const ordered_json& j, const std::string& path,
                   const std::string& field) {
  if (!j.contains(field) || !j[field].is_number())
    field_error(path, field, "must be a number");
  return j[field].get<double>();
}

std::uint64_t want_u64(const ordered_json& j, const std::string& path,
                       const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_unsigned())
    field_error(path, field, "must be a non-negative integer");
  return j[field].get<std::uint64_t>();
}

const ordered_json& want_array(const ordered_json& j, const std::string& path,
                               const std::string& field) {
  if (!j.contains(field) || !j[field].is_array())
    field_error(path, field, "must be an array");
  return j[field];
}

/// "name[k]" for messages about one element of an array field.
std::string at(const std::string& field, std::size_t k) {
  return field + "[" + std::to_string(k) + "]";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_field_double(const std::string& path, int line,
                          const std::string& name, const std::string& text) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(path + ":" + std::to_string(line) + ": field \"" + name +
                     "\" is not a number: \"" + text + "\"");
  }
}

/// Value of "key=value" in a "# key=..." header comment, or empty.
std::string header_value(const std::string& line, const std::string& key) {
  const std::string want = key + "=";
  std::istringstream words(line);
  std::string word;
  while (words >> word) {
    if (word.rfind(want, 0) == 0) return word.substr(want.size());
  }
  return {};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_signal(const std::string& path, const Signal& f) {
  ordered_json j;
  j["version"] = kToolVersion;
  j["a"] = f.a;
  j["seed"] = f.seed;
  auto& points = j["points"] = ordered_json::array();
  for (const auto& p : f.points) points.push_back({p.i, p.j});
  auto& coeffs = j["coeffs"] = ordered_json::array();
  for (const auto& c : f.coeffs) coeffs.push_back({c.real(), c.imag()});
  open_out(path) << j.dump(2) << "\n";
}

Signal read_signal(const std::string& path) {
  const ordered_json j = parse_json(path);
  if (!j.is_object()) throw ParseError(path + ": top level must be an object");
  Signal f;
  f.a = want_number(j, path, "a");
  if (!(f.a > 0.0)) field_error(path, "a", "must be positive");
  f.seed = want_u64(j, path, "seed");
  const auto& points = want_array(j, path, "points");
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& p = points[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      field_error(path, at("points", k), "must be an integer pair [i, j]");
    f.points.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  const auto& coeffs = want_array(j, path, "coeffs");
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& c = coeffs[k];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() ||
        !c[1].is_number())
      field_error(path, at("coeffs", k), "must be a number pair [re, im]");
    f.coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
  }
  if (f.points.size() != f.coeffs.size())
    throw ParseError(path + ": \"points\" and \"coeffs\" lengths differ");
  if (f.points.empty()) field_error(path, "points", "must be non-empty");
  return f;
}

void write_samples(const std::string& path, const SpectrogramSamples& samples,
                   const LatticeWindows& w) {
  auto out = open_out(path);
  out << "# " << kToolVersion << " samples\n";
  out << "# T=" << format_double(w.T) << " S=" << format_double(w.S)
      << " R=" << format_double(w.R) << " s=" << format_double(w.s)
      << " nu=" << format_double(samples.nu) << " seed=" << samples.seed
      << "\n";
  out << "x,y,sigma\n";
  for (std::size_t k = 0; k < samples.omega.size(); ++k) {
    out << format_double(samples.omega[k].x) << ","
        << format_double(samples.omega[k].y) << ","
        << format_double(samples.sigma[k]) << "\n";
  }
}

SamplesFile read_samples(const std::string& path) {
  auto in = open_in(path);
  SamplesFile file;
  bool have_config = false;
  bool have_header = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (header_value(line, "T").empty()) continue;
      file.T = parse_field_double(path, lineno, "T", header_value(line, "T"));
      file.S = parse_field_double(path, lineno, "S", header_value(line, "S"));
      file.R = parse_field_double(path, lineno, "R", header_value(line, "R"));
      file.s = parse_field_double(path, lineno, "s", header_value(line, "s"));
      file.samples.nu =
          parse_field_double(path, lineno, "nu", header_value(line, "nu"));
      const std::string seed = header_value(line, "seed");
      try {
        file.samples.seed = std::stoull(seed);
      } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": field \"seed\" is not an integer: \"" + seed +
                         "\"");
      }
      have_config = true;
      continue;
    }
    if (!have_header) {
      if (line != "x,y,sigma")
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": expected header \"x,y,sigma\"");
      have_header = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 3)
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected 3 fields, got " +
                       std::to_string(fields.size()));
    file.samples.omega.push_back(
        {parse_field_double(path, lineno, "x", fields[0]),
         parse_field_double(path, lineno, "y", fields[1])});
    file.samples.sigma.push_back(
        parse_field_double(path, lineno, "sigma", fields[2]));
  }
  if (!have_config)
    throw ParseError(path + ": missing \"# T=... S=... R=... s=...\" header");
  if (file.samples.omega.empty())
    throw ParseError(path + ": no sample rows");
  return file;
}

SolverConfig read_solver_config(const std::string& path) {
  const ordered_json j = parse_json(path);
  if (!j.is_object()) throw ParseError(path + ": top level must be an object");
  SolverConfig config;
  for (const auto& [key, value] : j.items()) {
    if (key == "max_iter") {
      if (!value.is_number_integer() || value.get<int>() <= 0)
        field_error(path, key, "must be a positive integer");
      config.max_iter = value.get<int>();
    } else if (key == "primal_tol") {
      config.primal_tol = want_number(j, path, key);
    } else if (key == "dual_tol") {
      config.dual_tol = want_number(j, path, key);
    } else if (key == "rho") {
      config.rho = want_number(j, path, key);
    } else {
      field_error(path, key, "is not a solver option");
    }
  }
  return config;
}

void write_graph_table(const std::string& path,
                       const std::vector<GraphRow>& rows, double star_r,
                       const std::string& config_echo) {
  auto out = open_out(path);
  out << "# " << kToolVersion << " graph\n";
  if (!config_echo.empty()) out << "# " << config_echo << "\n";
  out << "kind,r,lambda2,c_stab\n";
  const auto print = [&](const char* kind, const GraphRow& row) {
    out << kind << "," << format_double(row.r) << ","
        << format_double(row.lambda2) << ",";
    if (std::isfinite(row.c_stab)) {
      out << format_double(row.c_stab);
    } else {
      out << "inf";
    }
    out << "\n";
  };
  for (const auto& row : rows) print("candidate", row);
  for (const auto& row : rows) {
    if (row.r == star_r) {
      print("star", row);
      break;
    }
  }
}

void write_trace(const std::string& path, const std::vector<double>& t,
                 const std::vector<std::complex<double>>& f,
                 const std::vector<std::complex<double>>& f_star,
                 const std::string& config_echo) {
  auto out = open_out(path);
  out << "# " << kToolVersion << " trace\n";
  if (!config_echo.empty()) out << "# " << config_echo << "\n";
  out << "t,re_f,im_f,re_fstar,im_fstar\n";
  for (std::size_t k = 0; k < t.size(); ++k) {
    out << format_double(t[k]) << "," << format_double(f[k].real()) << ","
        << format_double(f[k].imag()) << "," << format_double(f_star[k].real())
        << "," << format_double(f_star[k].imag()) << "\n";
  }
}

}  // namespace gpr
