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
#include "reachkit/run_command.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "reachkit/artifacts.hpp"

namespace reachkit {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_controllable:
    case ErrorCode::repeated_eigenvalues:
    case ErrorCode::structure_violation:
    case ErrorCode::imaginary_residue:
      return 4;
    default:
      return 2;
  }
}

namespace {

struct Pipeline {
  CanonicalForm cf;
  Kernel kernel;
  InputEnvelope envelope;
};

Pipeline build_pipeline(const LtiProblem& problem) {
  Pipeline p;
  p.cf = canonical_transform(problem);
  p.kernel = make_kernel(p.cf, problem.settings);
  p.envelope = build_envelope(problem, p.cf, p.kernel);
  return p;
}

void emit_boundary(const LtiProblem& problem, const Pipeline& pipe,
                   const std::string& dir, OutputFormat format,
                   const std::string& stem) {
  const int n = problem.dim();
  const auto grid =
      weyl_grid(problem.t_final, n, problem.settings.sigma_grid);
  const Vector x0 = pipe.cf.M * problem.z0;
  const auto samples =
      sweep_boundary(grid, pipe.envelope, x0, problem.t_final, pipe.cf);
  if (format == OutputFormat::json) {
    write_text_file(dir + "/" + stem + ".json", boundary_json(samples, n));
  } else {
    write_text_file(dir + "/" + stem + ".csv", boundary_csv(samples, n));
  }
  if (n == 2) {
    const auto polygon = boundary_polygon_2d(
        pipe.envelope, x0, problem.t_final, problem.settings.sigma_grid,
        Coordinates::original, pipe.cf);
    emit_svg_polygon(polygon, dir + "/" + stem + ".svg");
  }
}

int dispatch(const std::string& name, const Config& config,
             const std::string& dir, int samples) {
  const LtiProblem& problem = config.problem;
  problem.validate();

  if (name == "canonical") {
    const CanonicalForm cf = canonical_transform(problem);
    const std::string doc = canonical_json(cf);
    write_text_file(dir + "/canonical.json", doc);
    std::cout << doc;
    return 0;
  }

  const Pipeline pipe = build_pipeline(problem);

  if (name == "envelope") {
    write_envelope_csv(pipe.envelope, dir + "/envelope.csv");
    return 0;
  }
  if (name == "boundary") {
    emit_boundary(problem, pipe, dir, config.format, "boundary");
    return 0;
  }
  if (name == "volume") {
    const VolumeResult result =
        volume_reach_set(problem, pipe.envelope, pipe.cf);
    const std::string doc = volume_json(result);
    write_text_file(dir + "/volume.json", doc);
    std::cout << doc;
    return 0;
  }
  if (name == "validate") {
    const double tol = 1e-5;
    const ContainmentReport report =
        monte_carlo_containment(problem, pipe.envelope, pipe.cf, samples, tol);
    const std::string doc = containment_json(report, tol);
    write_text_file(dir + "/validate.json", doc);
    std::cout << doc;
    return report.violations > 0 ? 3 : 0;
  }
  if (name == "demo") {
    for (double t : {1.0, 1.5, 2.0, 2.5, 3.0}) {
      LtiProblem sub = problem;
      sub.t_final = t;
      const Pipeline sub_pipe = build_pipeline(sub);
      char stem[32];
      std::snprintf(stem, sizeof(stem), "boundary_t%g", t);
      emit_boundary(sub, sub_pipe, dir, config.format, stem);
    }
    const VolumeResult result =
        volume_reach_set(problem, pipe.envelope, pipe.cf);
    const std::string doc = volume_json(result);
    write_text_file(dir + "/volume.json", doc);
    std::cout << doc;
    return 0;
  }
  throw Error(ErrorCode::validation_error, "unknown command '" + name + "'");
}

}  // namespace

int run_command(const std::string& name, const Config& config,
                const std::string& out_dir, int samples) {
  std::string dir = out_dir.empty() ? config.out_path : out_dir;
  if (dir.empty()) dir = ".";
  try {
    std::filesystem::create_directories(dir);
    return dispatch(name, config, dir, samples);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace reachkit
