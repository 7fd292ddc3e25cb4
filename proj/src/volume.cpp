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
#include "reachkit/volume.hpp"

#include <cmath>

namespace reachkit {

Vector zeta(const WeylPoint& sigma, const InputEnvelope& envelope,
            const Vector& x0, double t) {
  const BoundarySample sample = boundary_pair(sigma, envelope, x0, t);
  return sample.x_upper - sample.x_lower;
}

namespace {

double weyl_jacobian_factor(const WeylPoint& sigma,
                            const InputEnvelope& envelope, const Vector& x0,
                            double t) {
  const int n = static_cast<int>(x0.size());
  double mu_prod = 1.0;
  for (double s : sigma.sigma) mu_prod *= envelope.at(s).mu;

  Matrix cols(n, n);
  for (int k = 0; k < n - 1; ++k) cols.col(k) = xi(t - sigma.sigma[k], n);
  cols.col(n - 1) = zeta(sigma, envelope, x0, t);
  const double det = n == 1 ? cols(0, 0) : cols.determinant();
  return mu_prod * std::abs(det);
}

double pairwise_sum(const std::vector<double>& values, std::size_t lo,
                    std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += values[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(values, lo, mid) + pairwise_sum(values, mid, hi);
}

double pairwise_sum(const std::vector<double>& values) {
  return values.empty() ? 0.0 : pairwise_sum(values, 0, values.size());
}

// Trapezoid weight of a Weyl-grid node: product of per-axis weights over
// the index tuple, divided by m! for each run of m equal indices (the cell
// measure that actually lies inside the ordered chamber).
double weyl_weight(const std::vector<int>& idx, double h, int resolution) {
  double w = 1.0;
  for (int i : idx) w *= (i == 0 || i == resolution - 1) ? 0.5 * h : h;
  std::size_t run = 1;
  for (std::size_t k = 1; k <= idx.size(); ++k) {
    if (k < idx.size() && idx[k] == idx[k - 1]) {
      ++run;
    } else {
      for (std::size_t m = 2; m <= run; ++m) w /= static_cast<double>(m);
      run = 1;
    }
  }
  return w;
}

}  // namespace

double jacobian_abs_det(const WeylPoint& sigma, double lambda,
                        const InputEnvelope& envelope, const Vector& x0,
                        double t) {
  const int n = static_cast<int>(x0.size());
  const double lf = std::pow(std::abs(4.0 * lambda - 2.0), n - 1);
  return lf * weyl_jacobian_factor(sigma, envelope, x0, t);
}

VolumeResult volume_reach_set(const LtiProblem& problem,
                              const InputEnvelope& envelope,
                              const CanonicalForm& cf, Exec exec) {
  const int n = problem.dim();
  const double t = problem.t_final;
  const Vector x0 = cf.M * problem.z0;
  const int res = problem.settings.sigma_grid;
  const int lam_res = problem.settings.lambda_grid;

  VolumeResult result;
  result.det_M = cf.det_M;
  result.sigma_grid = res;
  result.lambda_grid = lam_res;
  result.dt = problem.settings.dt;

  // |4l-2|^{n-1} on the lambda axis, trapezoid.
  result.lambda_factor.resize(lam_res);
  std::vector<double> lam_terms(lam_res);
  for (int j = 0; j < lam_res; ++j) {
    const double lam = static_cast<double>(j) / (lam_res - 1);
    result.lambda_factor[j] = std::pow(std::abs(4.0 * lam - 2.0), n - 1);
    const double w = (j == 0 || j == lam_res - 1) ? 0.5 : 1.0;
    lam_terms[j] = w * result.lambda_factor[j] / (lam_res - 1);
  }
  const double lambda_integral = pairwise_sum(lam_terms);

  if (n == 1) {
    const WeylPoint none{};
    const double g = weyl_jacobian_factor(none, envelope, x0, t);
    result.jacobian_sigma = {g};
    result.volume_X = lambda_integral * g;
    result.volume_Z = result.volume_X / std::abs(cf.det_M);
    return result;
  }

  const auto grid = weyl_grid(t, n, res);
  const double h = t / (res - 1);

  // Recover index tuples alongside the grid for exact weight computation.
  std::vector<std::vector<int>> indices;
  indices.reserve(grid.size());
  {
    std::vector<int> idx(n - 1, 0);
    while (true) {
      indices.push_back(idx);
      int k = n - 2;
      while (k >= 0 && idx[k] == res - 1) --k;
      if (k < 0) break;
      const int v = idx[k] + 1;
      for (int j = k; j < n - 1; ++j) idx[j] = v;
    }
  }

  result.jacobian_sigma.resize(grid.size());
  std::vector<double> terms(grid.size());
  const std::int64_t count = static_cast<std::int64_t>(grid.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const double g = weyl_jacobian_factor(grid[i], envelope, x0, t);
      result.jacobian_sigma[i] = g;
      terms[i] = weyl_weight(indices[i], h, res) * g;
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      const double g = weyl_jacobian_factor(grid[i], envelope, x0, t);
      result.jacobian_sigma[i] = g;
      terms[i] = weyl_weight(indices[i], h, res) * g;
    }
  }

  result.volume_X = lambda_integral * pairwise_sum(terms);
  result.volume_Z = result.volume_X / std::abs(cf.det_M);
  return result;
}

double polygon_area_2d(const std::vector<Vector>& polygon) {
  if (polygon.size() < 3) return 0.0;
  for (const auto& p : polygon)
    if (p.size() != 2)
      throw Error(ErrorCode::wrong_dimension, "polygon points must be 2D");
  std::size_t m = polygon.size();
  if ((polygon.front() - polygon.back()).norm() == 0.0) --m;
  double twice = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Vector& p = polygon[i];
    const Vector& q = polygon[(i + 1) % m];
    twice += p(0) * q(1) - q(0) * p(1);
  }
  return 0.5 * std::abs(twice);
}

}  // namespace reachkit
