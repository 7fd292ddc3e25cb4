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
#ifndef REACHKIT_ARTIFACTS_HPP
#define REACHKIT_ARTIFACTS_HPP

#include <string>
#include <vector>

#include "reachkit/sim_oracle.hpp"
#include "reachkit/volume.hpp"

namespace reachkit {

/// M, M_inv, c, eigenvalues as a JSON document.
std::string canonical_json(const CanonicalForm& cf);

/// Two rows per sample (surface in {upper, lower}); header
/// sigma_1,..,sigma_{n-1},surface,x_1..x_n,z_1..z_n, fields at 12
/// significant digits.
std::string boundary_csv(const std::vector<BoundarySample>& samples, int n);
std::string boundary_json(const std::vector<BoundarySample>& samples, int n);

std::string volume_json(const VolumeResult& result);
std::string containment_json(const ContainmentReport& report, double tol);

/// Single closed path, viewBox fitted with a 5% margin, 6-decimal
/// coordinates. Throws WrongDimension unless all points are 2D.
std::string svg_polygon(const std::vector<Vector>& polygon);
void emit_svg_polygon(const std::vector<Vector>& polygon,
                      const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace reachkit

#endif  // REACHKIT_ARTIFACTS_HPP
