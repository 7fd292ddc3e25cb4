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
#ifndef REACHKIT_CONFIG_HPP
#define REACHKIT_CONFIG_HPP

#include <string>

#include "reachkit/lti_model.hpp"

namespace reachkit {

enum class OutputFormat { csv, json, svg };

OutputFormat parse_format(const std::string& name);
const char* format_name(OutputFormat format);

struct Config {
  LtiProblem problem;  // system block + numerics overrides
  OutputFormat format = OutputFormat::csv;
  std::string out_path;  // outputs.path; empty means current directory
};

/// Strict JSON parse: unknown keys are rejected, missing numerics fall back
/// to defaults. Throws ParseError for malformed documents or wrong types,
/// ValidationError for inconsistent dimensions or bounds.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

/// Inverse of parse_config up to formatting: parse(serialize(c)) == c.
std::string serialize_config(const Config& config);

}  // namespace reachkit

#endif  // REACHKIT_CONFIG_HPP
