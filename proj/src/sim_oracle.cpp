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
#include "reachkit/sim_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace reachkit {

double InputPath::value(double s) const {
  switch (kind) {
    case Kind::piecewise_constant: {
      if (values.empty()) return 0.0;
      auto it = std::upper_bound(knots.begin(), knots.end(), s);
      std::size_t cell = it == knots.begin()
                             ? 0
                             : static_cast<std::size_t>(it - knots.begin()) - 1;
      cell = std::min(cell, values.size() - 1);
      return values[cell];
    }
    case Kind::clipped_smooth: {
      double g = 0.0;
      for (std::size_t j = 0; j < amp.size(); ++j)
        g += amp[j] * std::sin(freq[j] * s + phase[j]);
      const double mid = 0.5 * (v_min + v_max);
      const double half = 0.5 * (v_max - v_min);
      return mid + half * std::tanh(g);
    }
    case Kind::bang_bang: {
      std::size_t flips = static_cast<std::size_t>(
          std::upper_bound(knots.begin(), knots.end(), s) - knots.begin());
      const bool high = flips % 2 == 0;
      if (envelope != nullptr) {
        const auto v = envelope->at(s);
        return high ? v.u_max : v.u_min;
      }
      return high ? v_max : v_min;
    }
  }
  return 0.0;
}

std::vector<double> InputPath::breakpoints(double t) const {
  std::vector<double> pts;
  if (kind == Kind::clipped_smooth) return pts;
  for (double k : knots)
    if (k > 0.0 && k < t) pts.push_back(k);
  return pts;
}

Vector integrate_lti(const Matrix& A, const Vector& b, const InputPath& path,
                     double t, double dt_ode, const Vector& x0) {
  if (dt_ode <= 0.0)
    throw Error(ErrorCode::validation_error, "dt_ode must be positive");

  std::vector<double> edges = path.breakpoints(t);
  edges.push_back(0.0);
  edges.push_back(t);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Vector x = x0;
  auto f = [&](double s, const Vector& state) -> Vector {
    return A * state + b * path.value(s);
  };
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double a = edges[e];
    const double c = edges[e + 1];
    const int steps =
        std::max(1, static_cast<int>(std::ceil((c - a) / dt_ode)));
    const double h = (c - a) / steps;
    for (int i = 0; i < steps; ++i) {
      const double s = a + i * h;
      const Vector k1 = f(s, x);
      const Vector k2 = f(s + 0.5 * h, x + 0.5 * h * k1);
      const Vector k3 = f(s + 0.5 * h, x + 0.5 * h * k2);
      const Vector k4 = f(s + h, x + h * k3);
      x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return x;
}

InputPath sample_input_path(InputPath::Kind kind, double v_min, double v_max,
                            double t, std::mt19937_64& rng) {
  InputPath path;
  path.kind = kind;
  path.v_min = v_min;
  path.v_max = v_max;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  switch (kind) {
    case InputPath::Kind::piecewise_constant: {
      const int cells = 30;
      path.knots.resize(cells + 1);
      path.values.resize(cells);
      for (int i = 0; i <= cells; ++i) path.knots[i] = t * i / cells;
      for (int i = 0; i < cells; ++i)
        path.values[i] = v_min + (v_max - v_min) * unit(rng);
      break;
    }
    case InputPath::Kind::clipped_smooth: {
      const int features = 8;
      std::normal_distribution<double> gauss(0.0, 1.0);
      path.amp.resize(features);
      path.freq.resize(features);
      path.phase.resize(features);
      for (int j = 0; j < features; ++j) {
        path.amp[j] = 1.2 * gauss(rng) / std::sqrt(double(features));
        path.freq[j] = (0.5 + 3.5 * unit(rng)) * 2.0 * M_PI / std::max(t, 1e-9);
        path.phase[j] = 2.0 * M_PI * unit(rng);
      }
      break;
    }
    case InputPath::Kind::bang_bang: {
      std::uniform_int_distribution<int> count(0, 2);
      const int switches = count(rng);
      path.knots.resize(switches);
      for (int i = 0; i < switches; ++i) path.knots[i] = t * unit(rng);
      std::sort(path.knots.begin(), path.knots.end());
      break;
    }
  }
  return path;
}

InputPath bang_bang_path(const std::vector<double>& switches, double v_min,
                         double v_max) {
  InputPath path;
  path.kind = InputPath::Kind::bang_bang;
  path.v_min = v_min;
  path.v_max = v_max;
  path.knots = switches;
  return path;
}

InputPath bang_bang_path_canonical(const std::vector<double>& switches,
                                   const InputEnvelope& envelope) {
  InputPath path;
  path.kind = InputPath::Kind::bang_bang;
  path.knots = switches;
  path.envelope = &envelope;
  return path;
}

namespace {

// splitmix64 of (seed, index): independent substream per sample.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

ContainmentReport monte_carlo_containment(const LtiProblem& problem,
                                          const InputEnvelope& envelope,
                                          const CanonicalForm& cf, int N,
                                          double tol, Exec exec) {
  ContainmentReport report;
  report.samples = N;
  if (N <= 0) return report;
  report.worst_margin = -std::numeric_limits<double>::infinity();

  const Vector x0 = cf.M * problem.z0;
  const SupportScan scan(envelope, cf, x0, problem.t_final,
                         Coordinates::original, problem.settings);

  const double dt_ode = 1e-3 * std::max(problem.t_final, 1e-9);
  std::vector<double> margins(N);
  std::vector<double> scales(N);

  auto run_sample = [&](int i) {
    std::mt19937_64 rng(substream_seed(problem.settings.seed,
                                       static_cast<std::uint64_t>(i)));
    const auto kind = static_cast<InputPath::Kind>(i % 3);
    const InputPath path = sample_input_path(kind, problem.v_min,
                                             problem.v_max, problem.t_final,
                                             rng);
    const Vector z = integrate_lti(problem.A, problem.b, path,
                                   problem.t_final, dt_ode, problem.z0);
    margins[i] = scan.fenchel(z);
    scales[i] = 1.0 + z.norm();
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < N; ++i) run_sample(i);
  } else {
    for (int i = 0; i < N; ++i) run_sample(i);
  }

  for (int i = 0; i < N; ++i) {
    report.worst_margin = std::max(report.worst_margin, margins[i]);
    if (margins[i] > tol * scales[i]) ++report.violations;
  }
  return report;
}

}  // namespace reachkit
