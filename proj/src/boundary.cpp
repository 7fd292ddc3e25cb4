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
#include "reachkit/boundary.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace reachkit {

void WeylPoint::validate(double t) const {
  const double slack = 1e-12 * std::max(1.0, t);
  double prev = 0.0;
  for (double s : sigma) {
    if (s < prev - slack || s > t + slack)
      throw Error(ErrorCode::sigma_out_of_chamber,
                  "sigma violates 0 <= sigma_1 <= ... <= t");
    prev = s;
  }
}

std::vector<WeylPoint> weyl_grid(double t, int n, int resolution) {
  if (n < 1) throw Error(ErrorCode::dimension_too_small, "n must be >= 1");
  if (n == 1) return {WeylPoint{}};
  if (resolution < 2)
    throw Error(ErrorCode::validation_error, "resolution must be >= 2");

  std::vector<double> axis(resolution);
  for (int i = 0; i < resolution; ++i)
    axis[i] = t * static_cast<double>(i) / (resolution - 1);

  std::vector<WeylPoint> grid;
  std::vector<int> idx(n - 1, 0);
  while (true) {
    WeylPoint p;
    p.sigma.resize(n - 1);
    for (int k = 0; k < n - 1; ++k) p.sigma[k] = axis[idx[k]];
    grid.push_back(std::move(p));
    // advance to the next non-decreasing index tuple
    int k = n - 2;
    while (k >= 0 && idx[k] == resolution - 1) --k;
    if (k < 0) break;
    const int v = idx[k] + 1;
    for (int j = k; j < n - 1; ++j) idx[j] = v;
  }
  return grid;
}

namespace {

// Trapezoid nodes for [a, b]: envelope knots strictly inside plus endpoints.
std::vector<double> segment_nodes(const InputEnvelope& env, double a,
                                  double b) {
  std::vector<double> nodes;
  nodes.push_back(a);
  const auto lo = std::upper_bound(env.s_grid.begin(), env.s_grid.end(), a);
  const auto hi = std::lower_bound(env.s_grid.begin(), env.s_grid.end(), b);
  for (auto it = lo; it != hi; ++it) nodes.push_back(*it);
  nodes.push_back(b);
  return nodes;
}

// integral over [a, b] of w(s) * xi(t - s) ds, trapezoid on envelope knots.
Vector integrate_weighted_xi(const InputEnvelope& env, double a, double b,
                             double t, int n, bool use_mu) {
  Vector acc = Vector::Zero(n);
  if (!(b > a)) return acc;
  const auto nodes = segment_nodes(env, a, b);
  Vector prev(n), cur(n);
  auto value = [&](double s, Vector& out) {
    const auto v = env.at(s);
    out = (use_mu ? v.mu : v.nu) * xi(t - s, n);
  };
  value(nodes[0], prev);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    value(nodes[i], cur);
    acc += 0.5 * (nodes[i] - nodes[i - 1]) * (prev + cur);
    prev = cur;
  }
  return acc;
}

}  // namespace

BoundarySample boundary_pair(const WeylPoint& sigma,
                             const InputEnvelope& envelope, const Vector& x0,
                             double t) {
  const int n = static_cast<int>(x0.size());
  if (static_cast<int>(sigma.sigma.size()) != n - 1)
    throw Error(ErrorCode::wrong_dimension, "sigma length must be n-1");
  sigma.validate(t);

  BoundarySample sample;
  sample.sigma = sigma;
  sample.eta = chi(t, x0) + integrate_weighted_xi(envelope, 0.0, t, t, n,
                                                  /*use_mu=*/false);

  std::vector<double> breaks;
  breaks.push_back(0.0);
  for (double s : sigma.sigma) breaks.push_back(std::clamp(s, 0.0, t));
  breaks.push_back(t);

  Vector swing = Vector::Zero(n);
  double sign = 1.0;  // +,-,+,... starting on [0, sigma_1]
  for (int k = 0; k + 1 < static_cast<int>(breaks.size()); ++k) {
    swing += sign * integrate_weighted_xi(envelope, breaks[k], breaks[k + 1],
                                          t, n, /*use_mu=*/true);
    sign = -sign;
  }
  sample.x_upper = sample.eta + swing;
  sample.x_lower = sample.eta - swing;
  return sample;
}

void to_original(BoundarySample& sample, const CanonicalForm& cf) {
  sample.z_upper = cf.M_inv * sample.x_upper;
  sample.z_lower = cf.M_inv * sample.x_lower;
}

namespace {

// Real roots in [0, horizon] of P(theta) = sum_k coeff_k theta^k.
std::vector<double> poly_roots_in_range(Vector coeffs, double horizon) {
  int degree = static_cast<int>(coeffs.size()) - 1;
  const double scale = coeffs.cwiseAbs().maxCoeff();
  std::vector<double> roots;
  if (scale == 0.0) return roots;
  while (degree > 0 && std::abs(coeffs(degree)) < 1e-14 * scale) --degree;
  if (degree < 1) return roots;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i)
    companion(i, degree - 1) = -coeffs(i) / coeffs(degree);
  // Transposed-companion convention: eigenvalues are the roots either way.
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  for (int i = 0; i < degree; ++i) {
    const Complex r = solver.eigenvalues()(i);
    if (std::abs(r.imag()) > 1e-9 * std::max(1.0, std::abs(r))) continue;
    const double x = r.real();
    if (x >= -1e-12 && x <= horizon + 1e-12)
      roots.push_back(std::clamp(x, 0.0, horizon));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

double support_function(const Vector& y, const InputEnvelope& envelope,
                        const Vector& x0, double t) {
  const int n = static_cast<int>(y.size());
  const double norm = y.norm();
  if (!(norm > 0.0))
    throw Error(ErrorCode::zero_direction, "support direction must be nonzero");

  const Vector eta =
      chi(t, x0) + integrate_weighted_xi(envelope, 0.0, t, t, n, false);

  // <y, xi(theta)> as a polynomial in theta = t - s.
  Vector coeffs = Vector::Zero(n);
  double inv_fact = 1.0;
  for (int p = 0; p < n; ++p) {  // coefficient of theta^p is y_{n-p}/p!
    coeffs(p) = y(n - 1 - p) * inv_fact;
    inv_fact /= (p + 1);
  }
  std::vector<double> knots_extra;
  for (double theta : poly_roots_in_range(coeffs, t))
    knots_extra.push_back(t - theta);
  std::sort(knots_extra.begin(), knots_extra.end());

  auto bracket = [&](double s) {
    return envelope.at(s).mu * std::abs(y.dot(xi(t - s, n)));
  };
  double integral = 0.0;
  double a = 0.0;
  knots_extra.push_back(t);
  for (double b : knots_extra) {
    if (!(b > a)) continue;
    const auto nodes = segment_nodes(envelope, a, b);
    double prev = bracket(nodes[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const double cur = bracket(nodes[i]);
      integral += 0.5 * (nodes[i] - nodes[i - 1]) * (prev + cur);
      prev = cur;
    }
    a = b;
  }
  return y.dot(eta) + integral;
}

double support_function_original(const Vector& y, const InputEnvelope& envelope,
                                 const CanonicalForm& cf, const Vector& x0,
                                 double t) {
  return support_function(cf.M_inv.transpose() * y, envelope, x0, t);
}

std::vector<Vector> direction_samples(int n, const NumericalSettings& settings) {
  const int m = settings.directions_for(n);
  std::vector<Vector> dirs;
  dirs.reserve(m);
  if (n == 1) {
    dirs.push_back(Vector::Constant(1, 1.0));
    dirs.push_back(Vector::Constant(1, -1.0));
    return dirs;
  }
  if (n == 2) {
    for (int i = 0; i < m; ++i) {
      const double a = 2.0 * std::numbers::pi * i / m;
      Vector y(2);
      y << std::cos(a), std::sin(a);
      dirs.push_back(std::move(y));
    }
    return dirs;
  }
  if (n == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < m; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / m;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden * i;
      Vector y(3);
      y << r * std::cos(a), r * std::sin(a), z;
      dirs.push_back(std::move(y));
    }
    return dirs;
  }
  std::mt19937_64 rng(settings.seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < m; ++i) {
    Vector y(n);
    do {
      for (int k = 0; k < n; ++k) y(k) = gauss(rng);
    } while (y.norm() < 1e-12);
    dirs.push_back(y.normalized());
  }
  return dirs;
}

SupportScan::SupportScan(const InputEnvelope& envelope, const CanonicalForm& cf,
                         const Vector& x0, double t, Coordinates coords,
                         const NumericalSettings& settings)
    : envelope_(envelope), cf_(cf), x0_(x0), t_(t), coords_(coords) {
  dirs_ = direction_samples(cf.dim(), settings);
  h_.reserve(dirs_.size());
  for (const auto& y : dirs_) h_.push_back(support(y));
}

double SupportScan::support(const Vector& y) const {
  if (coords_ == Coordinates::canonical)
    return support_function(y, envelope_, x0_, t_);
  return support_function(cf_.M_inv.transpose() * y, envelope_, x0_, t_);
}

double SupportScan::fenchel(const Vector& point) const {
  const int n = static_cast<int>(point.size());
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    const double v = dirs_[i].dot(point) - h_[i];
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  auto value = [&](const Vector& y) { return y.dot(point) - support(y); };

  if (n == 1) return best;

  if (n == 2) {
    // Golden-section refinement of the angle around the best sample.
    const double span = 2.0 * std::numbers::pi / dirs_.size();
    const double center = std::atan2(dirs_[best_i](1), dirs_[best_i](0));
    auto value_at = [&](double a) {
      Vector y(2);
      y << std::cos(a), std::sin(a);
      return value(y);
    };
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = center - span, b = center + span;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = value_at(c), fd = value_at(d);
    for (int it = 0; it < 60; ++it) {
      if (fc > fd) {
        b = d; d = c; fd = fc;
        c = b - gr * (b - a);
        fc = value_at(c);
      } else {
        a = c; c = d; fc = fd;
        d = a + gr * (b - a);
        fd = value_at(d);
      }
    }
    return std::max({best, fc, fd});
  }

  // n >= 3: deterministic tangent pattern search on the sphere.
  Vector y = dirs_[best_i];
  double fy = best;
  double step = 2.0 * std::sqrt(4.0 * std::numbers::pi / dirs_.size());
  while (step > 1e-8) {
    bool improved = false;
    for (int k = 0; k < n; ++k) {
      for (double sgn : {1.0, -1.0}) {
        Vector cand = y;
        cand(k) += sgn * step;
        cand.normalize();
        const double fv = value(cand);
        if (fv > fy) {
          fy = fv;
          y = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return fy;
}

double fenchel_value(const Vector& point, Coordinates coords,
                     const InputEnvelope& envelope, const CanonicalForm& cf,
                     const Vector& x0, double t,
                     const NumericalSettings& settings) {
  return SupportScan(envelope, cf, x0, t, coords, settings).fenchel(point);
}

ContainmentResult contains(const Vector& point, Coordinates coords,
                           const InputEnvelope& envelope,
                           const CanonicalForm& cf, const Vector& x0, double t,
                           double tol, const NumericalSettings& settings) {
  ContainmentResult result;
  result.violation = fenchel_value(point, coords, envelope, cf, x0, t, settings);
  result.contained = result.violation <= tol;
  return result;
}

std::vector<Vector> boundary_polygon_2d(const InputEnvelope& envelope,
                                        const Vector& x0, double t,
                                        int resolution, Coordinates coords,
                                        const CanonicalForm& cf) {
  if (x0.size() != 2)
    throw Error(ErrorCode::wrong_dimension, "boundary polygon requires n = 2");
  if (resolution < 2)
    throw Error(ErrorCode::validation_error, "resolution must be >= 2");

  std::vector<Vector> poly;
  poly.reserve(2 * resolution + 1);
  auto emit = [&](const BoundarySample& s, bool upper) {
    const Vector& x = upper ? s.x_upper : s.x_lower;
    poly.push_back(coords == Coordinates::canonical ? x
                                                    : Vector(cf.M_inv * x));
  };
  for (int i = 0; i < resolution; ++i) {
    const double s1 = t * static_cast<double>(i) / (resolution - 1);
    emit(boundary_pair(WeylPoint{{s1}}, envelope, x0, t), true);
  }
  // lower(0) coincides with upper(t); continue the sweep past it.
  for (int i = 1; i < resolution; ++i) {
    const double s1 = t * static_cast<double>(i) / (resolution - 1);
    emit(boundary_pair(WeylPoint{{s1}}, envelope, x0, t), false);
  }
  // enforce counterclockwise orientation
  double twice_area = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vector& p = poly[i];
    const Vector& q = poly[(i + 1) % poly.size()];
    twice_area += p(0) * q(1) - q(0) * p(1);
  }
  if (twice_area < 0.0) std::reverse(poly.begin(), poly.end());
  poly.push_back(poly.front());
  return poly;
}

std::vector<BoundarySample> sweep_boundary(const std::vector<WeylPoint>& grid,
                                           const InputEnvelope& envelope,
                                           const Vector& x0, double t,
                                           const CanonicalForm& cf,
                                           Exec exec) {
  std::vector<BoundarySample> out(grid.size());
  const std::int64_t count = static_cast<std::int64_t>(grid.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      out[i] = boundary_pair(grid[i], envelope, x0, t);
      to_original(out[i], cf);
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      out[i] = boundary_pair(grid[i], envelope, x0, t);
      to_original(out[i], cf);
    }
  }
  return out;
}

}  // namespace reachkit
