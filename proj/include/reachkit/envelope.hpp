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
#ifndef REACHKIT_ENVELOPE_HPP
#define REACHKIT_ENVELOPE_HPP

#include <string>
#include <vector>

#include "reachkit/companion.hpp"

namespace reachkit {

/// Tabulated time-varying Brunovsky input range [u_min(s), u_max(s)] on
/// [0, t_final], together with the cumulative level-set integrals of the
/// kernel it derives from:
///   F_minus(s) = integral of phi over {theta in [0,s] : phi <= 0},
///   F_plus(s)  = integral of phi over {theta in [0,s] : phi > 0}.
/// Knots are the uniform dt grid with the zeros of phi inserted, so the
/// sublevel/superlevel split is exact to root-refinement accuracy.
struct InputEnvelope {
  std::vector<double> s_grid;  // knots, ascending, s_grid.front() == 0
  std::vector<double> zeros;   // roots of phi in [0, t_final]
  std::vector<double> F_minus;
  std::vector<double> F_plus;
  std::vector<double> I_min;
  std::vector<double> I_max;
  std::vector<double> u_min;
  std::vector<double> u_max;
  std::vector<double> mu;
  std::vector<double> nu;
  double t_final = 0.0;

  struct Values {
    double u_min, u_max, mu, nu;
  };
  /// Linear interpolation between knots; exact at knots.
  Values at(double s) const;
};

/// Sign-scan at step dt/10 followed by bisection; tangency (no sign change)
/// is not reported. An identically-zero phi yields an empty list.
std::vector<double> find_zeros_phi(const Kernel& kernel, double horizon,
                                   const NumericalSettings& settings);

InputEnvelope build_envelope(const LtiProblem& problem,
                             const CanonicalForm& cf, const Kernel& kernel);

/// CSV dump: header `s,u_min,u_max,mu,nu`, 12 significant digits per field.
void write_envelope_csv(const InputEnvelope& envelope, const std::string& path);
std::string envelope_csv(const InputEnvelope& envelope);

}  // namespace reachkit

#endif  // REACHKIT_ENVELOPE_HPP
