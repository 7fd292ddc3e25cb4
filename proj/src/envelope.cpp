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
#include "reachkit/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace reachkit {

std::vector<double> find_zeros_phi(const Kernel& kernel, double horizon,
                                   const NumericalSettings& settings) {
  std::vector<double> zeros;
  if (kernel.trivial || horizon <= 0) return zeros;

  const double step = settings.dt / 10.0;
  const int cells = std::max(1, static_cast<int>(std::ceil(horizon / step)));
  double max_abs = 0.0;
  std::vector<double> values(cells + 1);
  for (int i = 0; i <= cells; ++i) {
    const double s = std::min(horizon, i * step);
    values[i] = phi(s, kernel);
    max_abs = std::max(max_abs, std::abs(values[i]));
  }
  // Identically-zero kernel short-circuits; tangencies are suppressed.
  if (max_abs <= settings.zero_tol) return zeros;

  for (int i = 0; i < cells; ++i) {
    if (!(values[i] * values[i + 1] < 0.0)) continue;
    double lo = std::min(horizon, i * step);
    double hi = std::min(horizon, (i + 1) * step);
    double f_lo = values[i];
    while (hi - lo > 1e-15 * std::max(1.0, horizon)) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = phi(mid, kernel);
      if (f_lo * f_mid <= 0.0) {
        hi = mid;
      } else {
        lo = mid;
        f_lo = f_mid;
      }
    }
    zeros.push_back(0.5 * (lo + hi));
  }
  return zeros;
}

InputEnvelope build_envelope(const LtiProblem& problem,
                             const CanonicalForm& cf, const Kernel& kernel) {
  const double T = problem.t_final;
  const double dt = problem.settings.dt;

  InputEnvelope env;
  env.t_final = T;
  env.zeros = find_zeros_phi(kernel, T, problem.settings);

  const int cells = std::max(1, static_cast<int>(std::round(T / dt)));
  std::vector<double> knots;
  knots.reserve(cells + 1 + env.zeros.size());
  for (int i = 0; i <= cells; ++i) knots.push_back(std::min(T, i * dt));
  knots.back() = T;
  knots.insert(knots.end(), env.zeros.begin(), env.zeros.end());
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end(),
                          [T](double a, double b) {
                            return std::abs(a - b) < 1e-14 * std::max(1.0, T);
                          }),
              knots.end());
  env.s_grid = knots;
  const std::size_t m = knots.size();

  std::vector<double> phi_vals(m);
  for (std::size_t i = 0; i < m; ++i) phi_vals[i] = phi(knots[i], kernel);

  env.F_minus.assign(m, 0.0);
  env.F_plus.assign(m, 0.0);
  for (std::size_t i = 1; i < m; ++i) {
    const double h = knots[i] - knots[i - 1];
    const double cell = 0.5 * (phi_vals[i] + phi_vals[i - 1]) * h;
    // Zero crossings are knots, so each cell is single-signed; the midpoint
    // decides, ties going to the sublevel set.
    const double mid = phi(0.5 * (knots[i] + knots[i - 1]), kernel);
    env.F_minus[i] = env.F_minus[i - 1] + (mid <= 0.0 ? cell : 0.0);
    env.F_plus[i] = env.F_plus[i - 1] + (mid > 0.0 ? cell : 0.0);
  }

  const Vector x0 = cf.M * problem.z0;
  const bool zero_offset = x0.cwiseAbs().maxCoeff() == 0.0;

  env.I_min.resize(m);
  env.I_max.resize(m);
  env.u_min.resize(m);
  env.u_max.resize(m);
  env.mu.resize(m);
  env.nu.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    env.I_min[i] = problem.v_min - problem.v_min * env.F_minus[i] -
                   problem.v_max * env.F_plus[i];
    env.I_max[i] = problem.v_max - problem.v_max * env.F_minus[i] -
                   problem.v_min * env.F_plus[i];
    double offset = 0.0;
    if (!zero_offset)
      offset = cf.c.dot(expm_action_con(knots[i], x0, cf));
    env.u_min[i] = -offset + env.I_min[i];
    env.u_max[i] = -offset + env.I_max[i];
    env.mu[i] = 0.5 * (env.u_max[i] - env.u_min[i]);
    env.nu[i] = 0.5 * (env.u_max[i] + env.u_min[i]);
  }
  return env;
}

InputEnvelope::Values InputEnvelope::at(double s) const {
  const double slack = 1e-12 * std::max(1.0, t_final);
  if (s < -slack || s > t_final + slack)
    throw Error(ErrorCode::out_of_horizon, "envelope query outside [0, t_final]");
  s = std::clamp(s, 0.0, t_final);
  const auto it = std::upper_bound(s_grid.begin(), s_grid.end(), s);
  std::size_t hi = std::min<std::size_t>(
      s_grid.size() - 1, static_cast<std::size_t>(it - s_grid.begin()));
  if (hi == 0) hi = 1;
  const std::size_t lo = hi - 1;
  const double span = s_grid[hi] - s_grid[lo];
  const double w = span > 0.0 ? (s - s_grid[lo]) / span : 0.0;
  auto lerp = [&](const std::vector<double>& v) {
    return v[lo] + w * (v[hi] - v[lo]);
  };
  return Values{lerp(u_min), lerp(u_max), lerp(mu), lerp(nu)};
}

std::string envelope_csv(const InputEnvelope& envelope) {
  std::string out = "s,u_min,u_max,mu,nu\n";
  char buf[160];
  for (std::size_t i = 0; i < envelope.s_grid.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.11e,%.11e,%.11e,%.11e,%.11e\n",
                  envelope.s_grid[i], envelope.u_min[i], envelope.u_max[i],
                  envelope.mu[i], envelope.nu[i]);
    out += buf;
  }
  return out;
}

void write_envelope_csv(const InputEnvelope& envelope,
                        const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::validation_error, "cannot open " + path);
  f << envelope_csv(envelope);
}

}  // namespace reachkit
