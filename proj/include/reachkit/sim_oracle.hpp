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
#ifndef REACHKIT_SIM_ORACLE_HPP
#define REACHKIT_SIM_ORACLE_HPP

#include <cstdint>
#include <random>

#include "reachkit/boundary.hpp"

namespace reachkit {

/// Admissible scalar input path on [0, t]. Piecewise-constant and bang-bang
/// paths are uniform limits of admissible continuous paths, so reach-set
/// containment of their endpoints is still required.
struct InputPath {
  enum class Kind { piecewise_constant, clipped_smooth, bang_bang };

  Kind kind = Kind::piecewise_constant;
  double v_min = 0.0, v_max = 0.0;

  // piecewise_constant: values[i] on [knots[i], knots[i+1]).
  // bang_bang: knots are the interior switch times (ascending); the path
  // starts at the upper bound and alternates at each switch.
  std::vector<double> knots;
  std::vector<double> values;

  // clipped_smooth: mid + half * tanh(sum_j amp_j sin(freq_j s + phase_j)).
  std::vector<double> amp, freq, phase;

  // Set for canonical bang-bang paths: bounds are the time-varying
  // u_max(s)/u_min(s) instead of the constants above.
  const InputEnvelope* envelope = nullptr;

  double value(double s) const;
  /// Discontinuity points; RK4 steps never straddle them.
  std::vector<double> breakpoints(double t) const;
};

/// Fixed-step RK4 on dx/dt = A x + b path(s), step <= dt_ode, with steps
/// aligned to the path's breakpoints.
Vector integrate_lti(const Matrix& A, const Vector& b, const InputPath& path,
                     double t, double dt_ode, const Vector& x0);

InputPath sample_input_path(InputPath::Kind kind, double v_min, double v_max,
                            double t, std::mt19937_64& rng);

/// Bang-bang path at the given ordered switch times, upper bound first.
InputPath bang_bang_path(const std::vector<double>& switches, double v_min,
                         double v_max);
InputPath bang_bang_path_canonical(const std::vector<double>& switches,
                                   const InputEnvelope& envelope);

struct ContainmentReport {
  int samples = 0;
  int violations = 0;
  double worst_margin = 0.0;  // max over samples of sup_y(<y,z> - h(y))
};

/// Simulates N random admissible endpoints of the original system and tests
/// each against the support function in original coordinates; a sample
/// violates when its Fenchel gap exceeds tol * (1 + |z|). Sample i draws
/// from an independent substream keyed by (seed, i), so the report is
/// deterministic regardless of scheduling.
ContainmentReport monte_carlo_containment(const LtiProblem& problem,
                                          const InputEnvelope& envelope,
                                          const CanonicalForm& cf, int N,
                                          double tol,
                                          Exec exec = Exec::parallel);

}  // namespace reachkit

#endif  // REACHKIT_SIM_ORACLE_HPP
