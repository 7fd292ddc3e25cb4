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

 End-to-end acceptance suite. Run with no arguments to execute all
 criteria, or `--criterion N` for a single one; prints one PASS/FAIL line
 per criterion and exits nonzero if any executed criterion fails.
*/
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "reachkit/artifacts.hpp"
#include "reachkit/config.hpp"
#include "reachkit/volume.hpp"

using namespace reachkit;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

LtiProblem example_2d(double t = 3.0) {
  LtiProblem p;
  p.A.resize(2, 2);
  p.A << 0.1, 0.2, -0.3, 0.1;
  p.b.resize(2);
  p.b << 1.0, 2.0;
  p.v_min = -0.2;
  p.v_max = 0.2;
  p.z0 = Vector::Zero(2);
  p.t_final = t;
  return p;
}

LtiProblem pure_integrator(double t = 1.0) {
  LtiProblem p;
  p.A.resize(2, 2);
  p.A << 0, 1, 0, 0;
  p.b.resize(2);
  p.b << 0, 1;
  p.v_min = -1;
  p.v_max = 1;
  p.z0 = Vector::Zero(2);
  p.t_final = t;
  return p;
}

LtiProblem oscillator_3d(double t = 1.5) {
  LtiProblem p;
  p.A.resize(3, 3);
  p.A << 0, 1, 0, 0, 0, 1, 1, -1, 1;
  p.b.resize(3);
  p.b << 0, 0, 1;
  p.v_min = -0.2;
  p.v_max = 0.2;
  p.z0 = Vector::Zero(3);
  p.t_final = t;
  return p;
}

struct Fixture {
  LtiProblem problem;
  CanonicalForm cf;
  InputEnvelope envelope;
  Vector x0;

  explicit Fixture(const LtiProblem& p) : problem(p) {
    cf = canonical_transform(problem);
    const Kernel kernel = make_kernel(cf, problem.settings);
    envelope = build_envelope(problem, cf, kernel);
    x0 = cf.M * problem.z0;
  }
};

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// --- criterion 1: canonical transform of the 2D worked example ------------

bool criterion1() {
  const double t0 = now_seconds();
  const CanonicalForm cf = canonical_transform(example_2d());
  const double elapsed = now_seconds() - t0;
  Check c;
  Matrix M_expect(2, 2), Minv_expect(2, 2);
  M_expect << 20.0 / 11, -10.0 / 11, 5.0 / 11, 3.0 / 11;
  Minv_expect << 0.3, 1.0, -0.5, 2.0;
  c.require((cf.M - M_expect).cwiseAbs().maxCoeff() < 1e-9, "M entries");
  c.require((cf.M_inv - Minv_expect).cwiseAbs().maxCoeff() < 1e-9,
            "M_inv entries");
  c.require(std::abs(cf.c(0) - 0.07) < 1e-12 &&
                std::abs(cf.c(1) + 0.20) < 1e-12,
            "characteristic coefficients");
  const double rho = std::abs(cf.eigs(1));
  const double phase = std::abs(std::arg(cf.eigs(1)));
  c.require(std::abs(rho - 0.2646) < 5e-5, "eigenvalue modulus");
  c.require(std::abs(phase - 1.1832) < 5e-5, "eigenvalue phase");
  c.require(elapsed < 1.0, "runtime under 1 s");
  std::printf("criterion 1: %s - canonical-form exactness (%.3fs)%s%s\n",
              c.ok ? "PASS" : "FAIL", elapsed, c.ok ? "" : " [",
              c.ok ? "" : (c.detail + "]").c_str());
  return c.ok;
}

// --- criterion 2: kernel closed form for eigenvalues {1, i, -i} -----------

bool criterion2() {
  ComplexVector eigs(3);
  eigs << Complex(1, 0), Complex(0, 1), Complex(0, -1);
  const Kernel kernel = make_kernel(eigs);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double theta = 3.0 * i / 999;
    const double closed =
        -0.5 * (std::exp(theta) + std::cos(theta) - std::sin(theta));
    worst = std::max(worst, std::abs(phi(theta, kernel) - closed));
  }
  const bool ok = worst <= 1e-10;
  std::printf("criterion 2: %s - kernel closed form (max dev %.2e)\n",
              ok ? "PASS" : "FAIL", worst);
  return ok;
}

// --- criterion 3: zero census on [0, 2] -----------------------------------

bool criterion3() {
  Matrix A(3, 3);
  A << 6, 7, 2, -4, -2, 1, -5, 3, 2;
  NumericalSettings settings;
  const Kernel kernel = make_kernel(eigenvalues(A, settings.distinct_tol));
  const auto zeros = find_zeros_phi(kernel, 2.0, settings);
  Check c;
  c.require(zeros.size() == 4, "exactly 4 zeros");
  double worst = 0.0;
  for (double r : zeros) worst = std::max(worst, std::abs(phi(r, kernel)));
  c.require(worst <= 1e-10, "residual at roots");
  std::printf(
      "criterion 3: %s - zero census (%zu zeros, worst residual %.2e)\n",
      c.ok ? "PASS" : "FAIL", zeros.size(), worst);
  return c.ok;
}

// --- criterion 4: boundary vs switching-control simulation ----------------

Vector rk4_switching(const Fixture& f, const std::vector<double>& switches,
                     double step) {
  const int n = f.problem.dim();
  const double t = f.problem.t_final;
  std::vector<double> edges = switches;
  edges.insert(edges.begin(), 0.0);
  edges.push_back(t);
  Vector x = f.x0;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double a = edges[e], b = edges[e + 1];
    const bool upper = e % 2 == 0;
    const int steps = std::max(1, static_cast<int>(std::ceil((b - a) / step)));
    const double h = (b - a) / steps;
    auto deriv = [&](double s, const Vector& y) {
      Vector d(n);
      for (int i = 0; i + 1 < n; ++i) d(i) = y(i + 1);
      const auto v = f.envelope.at(std::min(s, t));
      d(n - 1) = upper ? v.u_max : v.u_min;
      return d;
    };
    for (int i = 0; i < steps; ++i) {
      const double s = a + i * h;
      const Vector k1 = deriv(s, x);
      const Vector k2 = deriv(s + 0.5 * h, x + 0.5 * h * k1);
      const Vector k3 = deriv(s + 0.5 * h, x + 0.5 * h * k2);
      const Vector k4 = deriv(s + h, x + h * k3);
      x += (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
    }
  }
  return x;
}

bool criterion4() {
  const double t0 = now_seconds();
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int n : {2, 3}) {
    const Fixture f(n == 2 ? example_2d() : oscillator_3d());
    const double t = f.problem.t_final;
    for (int trial = 0; trial < 50; ++trial) {
      WeylPoint sigma;
      for (int k = 0; k + 1 < n; ++k) sigma.sigma.push_back(t * unit(rng));
      std::sort(sigma.sigma.begin(), sigma.sigma.end());
      const auto s = boundary_pair(sigma, f.envelope, f.x0, t);
      const Vector ref = rk4_switching(f, sigma.sigma, 1e-4);
      worst = std::max(worst, (s.x_upper - ref).cwiseAbs().maxCoeff());
    }
  }
  const double elapsed = now_seconds() - t0;
  Check c;
  c.require(worst <= 1e-4, "sup-norm against simulation");
  c.require(elapsed < 30.0, "runtime under 30 s");
  std::printf(
      "criterion 4: %s - boundary oracle equivalence (worst %.2e, %.1fs)\n",
      c.ok ? "PASS" : "FAIL", worst, elapsed);
  return c.ok;
}

// --- criterion 5: double-integrator ground truth --------------------------

bool criterion5() {
  const Fixture f(pure_integrator());
  Check c;
  WeylPoint half, full;
  half.sigma = {0.5};
  full.sigma = {1.0};
  const auto mid = boundary_pair(half, f.envelope, f.x0, 1.0);
  const auto corner = boundary_pair(full, f.envelope, f.x0, 1.0);
  c.require(std::abs(mid.x_upper(0) - 0.25) < 1e-4 &&
                std::abs(mid.x_upper(1)) < 1e-4,
            "passes through (1/4, 0)");
  c.require(std::abs(corner.x_upper(0) - 0.5) < 1e-4 &&
                std::abs(corner.x_upper(1) - 1.0) < 1e-4,
            "passes through (1/2, 1)");
  const auto vol = volume_reach_set(f.problem, f.envelope, f.cf);
  c.require(std::abs(vol.volume_X - 2.0 / 3) < 1e-3, "quadrature volume 2/3");
  const auto poly = boundary_polygon_2d(f.envelope, f.x0, 1.0, 2000,
                                        Coordinates::canonical, f.cf);
  const double area = polygon_area_2d(poly);
  c.require(std::abs(area - 2.0 / 3) < 1e-3, "shoelace volume 2/3");
  std::printf(
      "criterion 5: %s - double-integrator ground truth (vol %.6f, area "
      "%.6f)%s%s\n",
      c.ok ? "PASS" : "FAIL", vol.volume_X, area, c.ok ? "" : " [",
      c.ok ? "" : (c.detail + "]").c_str());
  return c.ok;
}

// --- criterion 6: published 2D volume at t = 2 ----------------------------

bool criterion6() {
  const double t0 = now_seconds();
  const Fixture f(example_2d(2.0));
  const auto vol = volume_reach_set(f.problem, f.envelope, f.cf);
  const auto poly = boundary_polygon_2d(f.envelope, f.x0, 2.0, 2000,
                                        Coordinates::original, f.cf);
  const double area = polygon_area_2d(poly);
  const double elapsed = now_seconds() - t0;

  Check c;
  const double rel_published = std::abs(vol.volume_Z - 0.3043) / 0.3043;
  c.require(rel_published <= 0.02, "published value 0.3043 within 2%");
  c.require(std::abs(1.0 / std::abs(f.cf.det_M) - 1.1) < 1e-12,
            "prefactor 11/10 exact");
  const double rel_oracle = std::abs(vol.volume_Z - area) / area;
  c.require(rel_oracle <= 0.01, "quadrature vs shoelace within 1%");
  c.require(elapsed < 60.0, "runtime under 60 s");
  std::printf(
      "criterion 6: %s - published volume check (computed %.4f, published "
      "0.3043, dev %.1f%%; shoelace %.4f, dev %.2f%%; %.1fs)%s%s\n",
      c.ok ? "PASS" : "FAIL", vol.volume_Z, 100 * rel_published, area,
      100 * rel_oracle, elapsed, c.ok ? "" : " [",
      c.ok ? "" : (c.detail + "]").c_str());
  return c.ok;
}

// --- criterion 7: containment soundness -----------------------------------

bool criterion7() {
  LtiProblem p = example_2d();
  p.settings.seed = 20240817;
  const Fixture f(p);
  Check c;

  const auto report =
      monte_carlo_containment(p, f.envelope, f.cf, 2000, 1e-5);
  c.require(report.violations == 0, "Monte Carlo violations");

  const SupportScan scan(f.envelope, f.cf, f.x0, p.t_final,
                         Coordinates::canonical, p.settings);
  double worst_ratio = 0.0;
  const auto grid = weyl_grid(p.t_final, 2, 100);
  for (const auto& sigma : grid) {
    const auto s = boundary_pair(sigma, f.envelope, f.x0, p.t_final);
    for (const Vector* x : {&s.x_upper, &s.x_lower}) {
      const double gap = std::abs(scan.fenchel(*x));
      worst_ratio =
          std::max(worst_ratio, gap / (1e-5 * (1.0 + x->norm())));
    }
  }
  c.require(worst_ratio <= 1.0, "boundary Fenchel condition");
  std::printf(
      "criterion 7: %s - containment soundness (violations %d/%d, worst "
      "margin %.2e, boundary gap at %.3f of tolerance)\n",
      c.ok ? "PASS" : "FAIL", report.violations, report.samples,
      report.worst_margin, worst_ratio);
  return c.ok;
}

// --- criterion 8: structural invariants on every bundled fixture ----------

bool criterion8() {
  Check c;
  const std::string dir = REACHKIT_CONFIG_DIR;
  for (const char* name :
       {"example_lti_2d.json", "pure_integrator_2d.json",
        "oscillator_3d.json"}) {
    const Config config = load_config(dir + "/" + name);
    const LtiProblem& p = config.problem;
    const Fixture f(p);
    const int n = p.dim();
    const std::string tag = std::string(" [") + name + "]";

    const auto grid = weyl_grid(p.t_final, n, n == 2 ? 40 : 12);
    for (const auto& sigma : grid) {
      const auto s = boundary_pair(sigma, f.envelope, f.x0, p.t_final);
      c.require((s.x_upper + s.x_lower - 2.0 * s.eta).cwiseAbs().maxCoeff() <
                    1e-10,
                "antipodal symmetry" + tag);
      const WeylPoint& sg = sigma;
      // binary fractions keep lam and 1 - lam exactly symmetric in floats
      for (double lam : {0.125, 0.25}) {
        const double a = jacobian_abs_det(sg, lam, f.envelope, f.x0, p.t_final);
        const double b =
            jacobian_abs_det(sg, 1.0 - lam, f.envelope, f.x0, p.t_final);
        c.require(a == b, "lambda symmetry" + tag);
      }
    }

    const Kernel kernel = make_kernel(f.cf, p.settings);
    const double half_span = 0.5 * (p.v_max - p.v_min);
    double running = 0.0;
    for (std::size_t i = 0; i < f.envelope.s_grid.size(); ++i) {
      if (i > 0) {
        const double h = f.envelope.s_grid[i] - f.envelope.s_grid[i - 1];
        running += 0.5 *
                   (phi(f.envelope.s_grid[i], kernel) +
                    phi(f.envelope.s_grid[i - 1], kernel)) *
                   h;
      }
      c.require(f.envelope.mu[i] >= half_span - 1e-12, "mu lower bound" + tag);
      c.require(std::abs(f.envelope.F_minus[i] + f.envelope.F_plus[i] -
                         running) < 1e-9,
                "level-set split identity" + tag);
    }

    if (n == 2) {
      const auto poly = boundary_polygon_2d(f.envelope, f.x0, p.t_final, 300,
                                            Coordinates::canonical, f.cf);
      double min_cross = 1e30;
      for (std::size_t i = 0; i + 2 < poly.size(); ++i) {
        const Vector u = poly[i + 1] - poly[i];
        const Vector v = poly[i + 2] - poly[i + 1];
        min_cross = std::min(min_cross, u(0) * v(1) - u(1) * v(0));
      }
      c.require(min_cross >= -1e-12, "polygon convexity" + tag);
    }
  }
  std::printf("criterion 8: %s - structural invariants%s%s\n",
              c.ok ? "PASS" : "FAIL", c.ok ? "" : " [",
              c.ok ? "" : (c.detail + "]").c_str());
  return c.ok;
}

// --- criterion 9: convergence under refinement ----------------------------

bool criterion9() {
  Check c;

  auto volume_at = [](double dt, int grid) {
    LtiProblem p = example_2d(2.0);
    p.settings.dt = dt;
    p.settings.sigma_grid = grid;
    p.settings.lambda_grid = grid;
    const Fixture f(p);
    return volume_reach_set(p, f.envelope, f.cf).volume_Z;
  };
  const double v_coarse = volume_at(0.01, 200);
  const double v_fine = volume_at(0.005, 400);
  const double vol_change = std::abs(v_fine - v_coarse) / v_fine;
  c.require(vol_change < 0.005, "volume change under refinement");

  auto boundary_at = [](double dt, const std::vector<double>& sigmas) {
    LtiProblem p = example_2d(2.0);
    p.settings.dt = dt;
    const Fixture f(p);
    std::vector<Vector> points;
    for (double s1 : sigmas) {
      WeylPoint sigma;
      sigma.sigma = {s1};
      points.push_back(boundary_pair(sigma, f.envelope, f.x0, 2.0).x_upper);
    }
    return points;
  };
  const std::vector<double> sigmas = {0.0, 0.4, 0.8, 1.2, 1.6, 2.0};
  const auto ref = boundary_at(0.00125, sigmas);
  auto sup_err = [&](const std::vector<Vector>& pts) {
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      worst = std::max(worst, (pts[i] - ref[i]).cwiseAbs().maxCoeff());
    return worst;
  };
  const double e_05 = sup_err(boundary_at(0.005, sigmas));
  const double e_04 = sup_err(boundary_at(0.04, sigmas));
  const double e_02 = sup_err(boundary_at(0.02, sigmas));
  const double order = std::log2(e_04 / e_02);
  c.require(sup_err(boundary_at(0.01, sigmas)) < 1e-3 && e_05 < 1e-3,
            "boundary change under refinement");
  c.require(order >= 1.8, "observed order");
  std::printf(
      "criterion 9: %s - convergence (volume change %.3f%%, boundary err "
      "%.1e, order %.2f)\n",
      c.ok ? "PASS" : "FAIL", 100 * vol_change, e_05, order);
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0)
      selected = std::atoi(argv[i + 1]);

  bool (*criteria[])() = {criterion1, criterion2, criterion3,
                          criterion4, criterion5, criterion6,
                          criterion7, criterion8, criterion9};
  int failures = 0;
  for (int i = 1; i <= 9; ++i) {
    if (selected != 0 && selected != i) continue;
    if (!criteria[i - 1]()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
