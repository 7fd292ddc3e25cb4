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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "reachkit/envelope.hpp"

using namespace reachkit;

namespace {

LtiProblem example_2d() {
  LtiProblem p;
  p.A.resize(2, 2);
  p.A << 0.1, 0.2, -0.3, 0.1;
  p.b.resize(2);
  p.b << 1.0, 2.0;
  p.v_min = -0.2;
  p.v_max = 0.2;
  p.z0 = Vector::Zero(2);
  p.t_final = 3.0;
  return p;
}

LtiProblem pure_integrator() {
  LtiProblem p;
  p.A.resize(2, 2);
  p.A << 0, 1, 0, 0;
  p.b.resize(2);
  p.b << 0, 1;
  p.v_min = -1;
  p.v_max = 1;
  p.z0 = Vector::Zero(2);
  p.t_final = 1.0;
  return p;
}

InputEnvelope envelope_of(const LtiProblem& p) {
  const CanonicalForm cf = canonical_transform(p);
  const Kernel k = make_kernel(cf, p.settings);
  return build_envelope(p, cf, k);
}

}  // namespace

TEST_CASE("zero census for the three-eigenvalue fixture") {
  Matrix A(3, 3);
  A << 6, 7, 2, -4, -2, 1, -5, 3, 2;
  NumericalSettings settings;
  const Kernel k = make_kernel(eigenvalues(A, settings.distinct_tol));
  const auto zeros = find_zeros_phi(k, 2.0, settings);
  REQUIRE(zeros.size() == 4);
  double max_abs = 0.0;
  for (int i = 0; i <= 2000; ++i)
    max_abs = std::max(max_abs, std::abs(phi(2.0 * i / 2000, k)));
  for (double r : zeros) CHECK(std::abs(phi(r, k)) <= 1e-12 * (1 + max_abs));
  for (std::size_t i = 1; i < zeros.size(); ++i) CHECK(zeros[i - 1] < zeros[i]);
}

TEST_CASE("oscillator kernel has no zeros on [0, 3]") {
  ComplexVector eigs(3);
  eigs << Complex(1, 0), Complex(0, 1), Complex(0, -1);
  NumericalSettings settings;
  CHECK(find_zeros_phi(make_kernel(eigs), 3.0, settings).empty());
}

TEST_CASE("identically zero kernel yields no zeros") {
  ComplexVector eigs(1);
  eigs << Complex(0, 0);
  NumericalSettings settings;
  CHECK(find_zeros_phi(make_kernel(eigs), 1.0, settings).empty());
}

TEST_CASE("collapsed bounds collapse the envelope") {
  LtiProblem p = example_2d();
  p.v_min = p.v_max = 0.15;
  const InputEnvelope env = envelope_of(p);
  for (std::size_t i = 0; i < env.s_grid.size(); ++i) {
    CHECK(env.u_min[i] == doctest::Approx(env.u_max[i]).epsilon(1e-14));
    CHECK(std::abs(env.mu[i]) < 1e-14);
    const double expect =
        0.15 * (1.0 - env.F_minus[i] - env.F_plus[i]);
    CHECK(env.u_max[i] == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("pure integrator keeps the original bounds") {
  const InputEnvelope env = envelope_of(pure_integrator());
  for (std::size_t i = 0; i < env.s_grid.size(); ++i) {
    CHECK(env.u_min[i] == -1.0);
    CHECK(env.u_max[i] == 1.0);
  }
}

TEST_CASE("interpolation: exact at knots, accurate between them") {
  const LtiProblem p = example_2d();
  const InputEnvelope env = envelope_of(p);
  {
    const auto v = env.at(0.0);
    CHECK(v.u_min == doctest::Approx(p.v_min).epsilon(1e-14));
    CHECK(v.u_max == doctest::Approx(p.v_max).epsilon(1e-14));
    CHECK(v.mu == doctest::Approx(0.5 * (p.v_max - p.v_min)).epsilon(1e-14));
    CHECK(std::abs(v.nu) < 1e-14);
  }
  const std::size_t knot = env.s_grid.size() / 2;
  CHECK(env.at(env.s_grid[knot]).u_max ==
        doctest::Approx(env.u_max[knot]).epsilon(1e-14));

  LtiProblem fine = p;
  fine.settings.dt = p.settings.dt / 2;
  const InputEnvelope env_fine = envelope_of(fine);
  for (double s : {0.123, 1.456, 2.789}) {
    CHECK(std::abs(env.at(s).u_max - env_fine.at(s).u_max) < 1e-4);
    CHECK(std::abs(env.at(s).u_min - env_fine.at(s).u_min) < 1e-4);
  }
  CHECK_THROWS_AS(env.at(3.5), Error);
  CHECK_THROWS_AS(env.at(-0.5), Error);
}

TEST_CASE("tabulated identities and sign structure") {
  const LtiProblem p = example_2d();
  const CanonicalForm cf = canonical_transform(p);
  const Kernel kernel = make_kernel(cf, p.settings);
  const InputEnvelope env = build_envelope(p, cf, kernel);
  const double half_span = 0.5 * (p.v_max - p.v_min);

  // running plain trapezoid of phi over the same knots
  double running = 0.0;
  double max_dphi = 0.0;
  for (std::size_t i = 0; i < env.s_grid.size(); ++i) {
    if (i > 0) {
      const double h = env.s_grid[i] - env.s_grid[i - 1];
      running += 0.5 *
                 (phi(env.s_grid[i], kernel) + phi(env.s_grid[i - 1], kernel)) *
                 h;
    }
    max_dphi = std::max(
        max_dphi, std::abs(g_derivative(env.s_grid[i], kernel, 1)));

    CHECK(env.F_minus[i] <= 0.0);
    CHECK(env.F_plus[i] >= 0.0);
    CHECK(env.I_min[i] <= env.I_max[i]);
    CHECK(env.mu[i] >= half_span - 1e-14);
    const double identity =
        (p.v_max - p.v_min) * (1.0 - env.F_minus[i] + env.F_plus[i]);
    CHECK(std::abs((env.I_max[i] - env.I_min[i]) - identity) < 1e-12);
    CHECK(std::abs((env.F_minus[i] + env.F_plus[i]) - running) <
          1e-12 + 0.5 * p.settings.dt * p.settings.dt * (max_dphi + 1.0) *
                      env.s_grid[i]);
  }
}

TEST_CASE("sampled admissible inputs stay inside [I_min, I_max]") {
  const LtiProblem p = example_2d();
  const CanonicalForm cf = canonical_transform(p);
  const Kernel kernel = make_kernel(cf, p.settings);
  const InputEnvelope env = build_envelope(p, cf, kernel);
  const double s = p.t_final;
  const auto end = env.at(s);

  // I(v)(s) = v(s) - int_0^s phi(s - tau) v(tau) dtau, fine trapezoid
  const int cells = 600;
  const double h = s / cells;
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> uv(p.v_min, p.v_max);
  double sample_max = -1e30, sample_min = 1e30;
  for (int trial = 0; trial < 300; ++trial) {
    // piecewise-constant path on 30 blocks
    std::vector<double> blocks(30);
    for (auto& b : blocks) b = uv(rng);
    auto v = [&](double tau) {
      int idx = std::min(29, static_cast<int>(tau / s * 30));
      return blocks[idx];
    };
    double conv = 0.0;
    for (int i = 0; i <= cells; ++i) {
      const double tau = i * h;
      const double w = (i == 0 || i == cells) ? 0.5 : 1.0;
      conv += w * phi(s - tau, kernel) * v(tau) * h;
    }
    const double value = v(s) - conv;
    sample_max = std::max(sample_max, value);
    sample_min = std::min(sample_min, value);
    CHECK(value <= end.u_max + 1e-6);
    CHECK(value >= end.u_min - 1e-6);
  }
  // the sign-tracking bang-bang path attains the extremes
  auto extremal = [&](int sign) {
    double conv = 0.0;
    for (int i = 0; i <= cells; ++i) {
      const double tau = i * h;
      const double w = (i == 0 || i == cells) ? 0.5 : 1.0;
      const double ph = phi(s - tau, kernel);
      const double v = (sign * ph <= 0.0) ? p.v_max : p.v_min;
      conv += w * ph * v * h;
    }
    return (sign > 0 ? p.v_max : p.v_min) - conv;
  };
  CHECK(std::abs(extremal(+1) - end.u_max) < 1e-3);
  CHECK(std::abs(extremal(-1) - end.u_min) < 1e-3);
  CHECK(sample_max <= end.u_max);
  CHECK(sample_min >= end.u_min);
}

TEST_CASE("grid refinement converges at second order") {
  const LtiProblem p = example_2d();
  auto u_max_at_end = [&](double dt) {
    LtiProblem q = p;
    q.settings.dt = dt;
    return envelope_of(q).at(p.t_final).u_max;
  };
  const double ref = u_max_at_end(0.00125);
  const double e1 = std::abs(u_max_at_end(0.04) - ref);
  const double e2 = std::abs(u_max_at_end(0.02) - ref);
  const double order = std::log2(e1 / e2);
  CHECK(order >= 1.8);
}

TEST_CASE("CSV dump: header, 12 significant digits, deterministic") {
  const InputEnvelope env = envelope_of(example_2d());
  const std::string csv = envelope_csv(env);
  CHECK(csv.rfind("s,u_min,u_max,mu,nu\n", 0) == 0);
  // second line: five %.11e fields
  const auto eol = csv.find('\n');
  const auto line = csv.substr(eol + 1, csv.find('\n', eol + 1) - eol - 1);
  int commas = 0;
  for (char ch : line) commas += ch == ',';
  CHECK(commas == 4);
  CHECK(line.find('e') != std::string::npos);
  CHECK(csv == envelope_csv(envelope_of(example_2d())));
}
