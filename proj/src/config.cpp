/*
 Copyright 2026 reachkit contributors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "reachkit/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace reachkit {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& item : obj.items())
    if (known.find(item.key()) == known.end())
      throw Error(ErrorCode::parse_error,
                  "unknown key '" + item.key() + "' in " + where);
}

double as_real(const json& v, const std::string& where) {
  if (!v.is_number())
    throw Error(ErrorCode::parse_error, where + " must be a number");
  return v.get<double>();
}

std::vector<double> as_real_array(const json& v, const std::string& where) {
  if (!v.is_array())
    throw Error(ErrorCode::parse_error, where + " must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(as_real(e, where + " entry"));
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "svg") return OutputFormat::svg;
  throw Error(ErrorCode::parse_error, "unknown format '" + name + "'");
}

const char* format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::svg: return "svg";
  }
  return "csv";
}

namespace {

Config parse_config_impl(const json& doc) {
  if (!doc.is_object())
    throw Error(ErrorCode::parse_error, "config root must be an object");
  reject_unknown_keys(doc, {"system", "numerics", "outputs"}, "config");
  if (!doc.contains("system"))
    throw Error(ErrorCode::parse_error, "missing 'system' block");

  Config config;
  const json& sys = doc["system"];
  if (!sys.is_object())
    throw Error(ErrorCode::parse_error, "'system' must be an object");
  reject_unknown_keys(sys, {"A", "b", "v_min", "v_max", "z0", "t_final"},
                      "system");
  for (const char* key : {"A", "b", "v_min", "v_max", "z0", "t_final"})
    if (!sys.contains(key))
      throw Error(ErrorCode::parse_error,
                  std::string("missing 'system.") + key + "'");

  const auto b = as_real_array(sys["b"], "system.b");
  const auto a_flat = as_real_array(sys["A"], "system.A");
  const auto z0 = as_real_array(sys["z0"], "system.z0");
  const int n = static_cast<int>(b.size());
  if (a_flat.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorCode::validation_error,
                "system.A must hold n*n entries matching b's length");
  if (z0.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::validation_error, "system.z0 length must match b");

  LtiProblem& p = config.problem;
  p.A.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.A(i, j) = a_flat[i * n + j];  // row-major
  p.b = Eigen::Map<const Vector>(b.data(), n);
  p.z0 = Eigen::Map<const Vector>(z0.data(), n);
  p.v_min = as_real(sys["v_min"], "system.v_min");
  p.v_max = as_real(sys["v_max"], "system.v_max");
  p.t_final = as_real(sys["t_final"], "system.t_final");

  if (doc.contains("numerics")) {
    const json& num = doc["numerics"];
    if (!num.is_object())
      throw Error(ErrorCode::parse_error, "'numerics' must be an object");
    reject_unknown_keys(num,
                        {"dt", "zero_tol", "distinct_tol", "imag_tol",
                         "sigma_grid", "lambda_grid", "sphere_samples",
                         "seed"},
                        "numerics");
    NumericalSettings& s = p.settings;
    if (num.contains("dt")) s.dt = as_real(num["dt"], "numerics.dt");
    if (num.contains("zero_tol"))
      s.zero_tol = as_real(num["zero_tol"], "numerics.zero_tol");
    if (num.contains("distinct_tol"))
      s.distinct_tol = as_real(num["distinct_tol"], "numerics.distinct_tol");
    if (num.contains("imag_tol"))
      s.imag_tol = as_real(num["imag_tol"], "numerics.imag_tol");
    if (num.contains("sigma_grid"))
      s.sigma_grid = num["sigma_grid"].get<int>();
    if (num.contains("lambda_grid"))
      s.lambda_grid = num["lambda_grid"].get<int>();
    if (num.contains("sphere_samples"))
      s.sphere_samples = num["sphere_samples"].get<int>();
    if (num.contains("seed")) s.seed = num["seed"].get<std::uint64_t>();
  }

  if (doc.contains("outputs")) {
    const json& out = doc["outputs"];
    if (!out.is_object())
      throw Error(ErrorCode::parse_error, "'outputs' must be an object");
    reject_unknown_keys(out, {"format", "path"}, "outputs");
    if (out.contains("format"))
      config.format = parse_format(out["format"].get<std::string>());
    if (out.contains("path")) config.out_path = out["path"].get<std::string>();
  }

  p.validate();
  return config;
}

}  // namespace

Config parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  try {
    return parse_config_impl(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

Config load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw Error(ErrorCode::parse_error, "cannot open config file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const Config& config) {
  const LtiProblem& p = config.problem;
  const int n = p.dim();
  json doc;
  json& sys = doc["system"];
  sys["A"] = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sys["A"].push_back(p.A(i, j));
  sys["b"] = std::vector<double>(p.b.data(), p.b.data() + n);
  sys["v_min"] = p.v_min;
  sys["v_max"] = p.v_max;
  sys["z0"] = std::vector<double>(p.z0.data(), p.z0.data() + n);
  sys["t_final"] = p.t_final;
  json& num = doc["numerics"];
  num["dt"] = p.settings.dt;
  num["zero_tol"] = p.settings.zero_tol;
  num["distinct_tol"] = p.settings.distinct_tol;
  num["imag_tol"] = p.settings.imag_tol;
  num["sigma_grid"] = p.settings.sigma_grid;
  num["lambda_grid"] = p.settings.lambda_grid;
  num["sphere_samples"] = p.settings.sphere_samples;
  num["seed"] = p.settings.seed;
  json& out = doc["outputs"];
  out["format"] = format_name(config.format);
  out["path"] = config.out_path;
  return doc.dump(2) + "\n";
}

}  // namespace reachkit
