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
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reachkit/run_command.hpp"

int main(int argc, char** argv) {
  CLI::App app{"reach set boundary, support function, and volume for "
               "single-input LTI systems with bounded input"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string format;
  double dt = 0.0;
  int grid = 0;
  int samples = 2000;
  std::int64_t seed = -1;

  const std::vector<std::string> commands = {"canonical", "envelope",
                                             "boundary",  "volume",
                                             "validate",  "demo"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON problem description")
        ->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--dt", dt, "quadrature step override");
    sub->add_option("--grid", grid, "sigma/lambda grid override");
    sub->add_option("--samples", samples, "Monte Carlo sample count");
    sub->add_option("--seed", seed, "RNG seed override");
    sub->add_option("--format", format, "csv|json|svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    reachkit::Config config = reachkit::load_config(config_path);
    if (dt > 0.0) config.problem.settings.dt = dt;
    if (grid > 0) {
      config.problem.settings.sigma_grid = grid;
      config.problem.settings.lambda_grid = grid;
    }
    if (seed >= 0)
      config.problem.settings.seed = static_cast<std::uint64_t>(seed);
    if (!format.empty()) config.format = reachkit::parse_format(format);
    return reachkit::run_command(command, config, out_dir, samples);
  } catch (const reachkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return reachkit::exit_code_for(e.code());
  }
}
