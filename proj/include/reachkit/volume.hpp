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
#ifndef REACHKIT_VOLUME_HPP
#define REACHKIT_VOLUME_HPP

#include "reachkit/boundary.hpp"

namespace reachkit {

struct VolumeResult {
  double volume_Z = 0.0;  // original coordinates
  double volume_X = 0.0;  // canonical coordinates
  double det_M = 0.0;
  // |det Dpi| factors as |4*lambda-2|^{n-1} * G(sigma); the quadrature
  // grids of both factors are kept for inspection.
  std::vector<double> jacobian_sigma;  // G at each Weyl-grid node
  std::vector<double> lambda_factor;   // |4*lambda-2|^{n-1} at lambda nodes
  int sigma_grid = 0;
  int lambda_grid = 0;
  double dt = 0.0;
};

/// zeta(sigma) = x_upper(sigma) - x_lower(sigma) = 2 (x_upper - eta).
Vector zeta(const WeylPoint& sigma, const InputEnvelope& envelope,
            const Vector& x0, double t);

/// mu(sigma_1)...mu(sigma_{n-1}) * |4 lambda - 2|^{n-1}
///   * |det [xi(t-sigma_1) ... xi(t-sigma_{n-1})  zeta(sigma)]|.
double jacobian_abs_det(const WeylPoint& sigma, double lambda,
                        const InputEnvelope& envelope, const Vector& x0,
                        double t);

/// Tensor-product trapezoid quadrature over W_t x [0,1]; the Weyl chamber
/// is handled by restricting the per-axis grid to ordered tuples with the
/// cell measure inside W_t as weight. Accumulation uses a fixed pairwise
/// summation order, so serial and parallel runs agree bitwise.
VolumeResult volume_reach_set(const LtiProblem& problem,
                              const InputEnvelope& envelope,
                              const CanonicalForm& cf,
                              Exec exec = Exec::parallel);

/// Shoelace area of a closed polygon (first point == last point accepted).
double polygon_area_2d(const std::vector<Vector>& polygon);

}  // namespace reachkit

#endif  // REACHKIT_VOLUME_HPP
