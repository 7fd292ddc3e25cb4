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
#ifndef REACHKIT_SETTINGS_HPP
#define REACHKIT_SETTINGS_HPP

#include <cstdint>

#include "reachkit/errors.hpp"

namespace reachkit {

/// Execution policy for the data-parallel kernels (Weyl-chamber sweeps,
/// volume quadrature, Monte Carlo). Results are bit-identical across the
/// two policies: every node/sample writes its own slot and reductions use
/// a fixed pairwise order.
enum class Exec { serial, parallel };

struct NumericalSettings {
  double dt = 0.01;           // quadrature / time-grid step
  double zero_tol = 1e-12;    // root residual tolerance
  double distinct_tol = 1e-8; // relative eigenvalue separation
  double imag_tol = 1e-9;     // allowed relative imaginary residue
  int sigma_grid = 200;       // Weyl-chamber points per axis
  int lambda_grid = 200;      // lambda-axis quadrature points
  int sphere_samples = 0;     // 0 -> dimension default (720 in 2D, 2000 in 3D)
  std::uint64_t seed = 0;

  int directions_for(int n) const {
    if (sphere_samples > 0) return sphere_samples;
    return n <= 2 ? 720 : 2000;
  }

  void validate() const {
    if (!(dt > 0 && zero_tol > 0 && distinct_tol > 0 && imag_tol > 0))
      throw Error(ErrorCode::validation_error, "tolerances must be positive");
    if (sigma_grid < 2 || lambda_grid < 2)
      throw Error(ErrorCode::validation_error, "grids must have >= 2 points");
  }
};

}  // namespace reachkit

#endif  // REACHKIT_SETTINGS_HPP
