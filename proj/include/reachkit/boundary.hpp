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
#ifndef REACHKIT_BOUNDARY_HPP
#define REACHKIT_BOUNDARY_HPP

#include <vector>

#include "reachkit/envelope.hpp"

namespace reachkit {

/// Ordered switching parameters 0 <= sigma_1 <= ... <= sigma_{n-1} <= t.
struct WeylPoint {
  std::vector<double> sigma;

  void validate(double t) const;
};

/// Upper/lower boundary points at one Weyl-chamber parameter, in canonical
/// (x) and, once mapped, original (z) coordinates. eta is the set center:
/// the two surfaces are antipodal reflections through it.
struct BoundarySample {
  WeylPoint sigma;
  Vector x_upper, x_lower;
  Vector z_upper, z_lower;
  Vector eta;
};

/// All ordered (n-1)-tuples drawn from a uniform grid of `resolution`
/// points on [0, t]; size C(resolution + n - 2, n - 1). For n = 1 the
/// single empty point is returned.
std::vector<WeylPoint> weyl_grid(double t, int n, int resolution);

/// Parametric boundary pair: signs alternate +,-,+,... for the upper
/// surface across the n subintervals [0,sigma_1], ..., [sigma_{n-1},t];
/// the lower surface negates every mu term. Upper/lower share quadrature
/// nodes so the antipodal identity holds to round-off.
BoundarySample boundary_pair(const WeylPoint& sigma,
                             const InputEnvelope& envelope, const Vector& x0,
                             double t);

/// z = M^{-1} x for both surfaces.
void to_original(BoundarySample& sample, const CanonicalForm& cf);

/// h_X(y) = <y, eta_t> + integral of mu(s) |<y, xi(t-s)>| ds, with the
/// roots of the bracket polynomial inserted as quadrature knots.
double support_function(const Vector& y, const InputEnvelope& envelope,
                        const Vector& x0, double t);

/// h_Z(y) = h_X(M^{-T} y).
double support_function_original(const Vector& y, const InputEnvelope& envelope,
                                 const CanonicalForm& cf, const Vector& x0,
                                 double t);

enum class Coordinates { canonical, original };

struct ContainmentResult {
  bool contained = false;
  double violation = 0.0;  // sup_y (<y,p> - h(y)); <= tol when contained
};

/// Fenchel-gap estimate: global scan over the settings' direction sample,
/// then derivative-free local refinement toward the continuous supremum.
/// x0 is the canonical initial state M z0.
double fenchel_value(const Vector& point, Coordinates coords,
                     const InputEnvelope& envelope, const CanonicalForm& cf,
                     const Vector& x0, double t,
                     const NumericalSettings& settings);

ContainmentResult contains(const Vector& point, Coordinates coords,
                           const InputEnvelope& envelope,
                           const CanonicalForm& cf, const Vector& x0, double t,
                           double tol, const NumericalSettings& settings);

/// n = 2 convenience: closed counterclockwise polygon through the upper
/// sweep (sigma_1: 0 -> t) followed by the lower sweep; first point
/// repeated last.
std::vector<Vector> boundary_polygon_2d(const InputEnvelope& envelope,
                                        const Vector& x0, double t,
                                        int resolution, Coordinates coords,
                                        const CanonicalForm& cf);

/// Boundary pairs over a Weyl grid, in deterministic sigma order
/// regardless of execution policy.
std::vector<BoundarySample> sweep_boundary(const std::vector<WeylPoint>& grid,
                                           const InputEnvelope& envelope,
                                           const Vector& x0, double t,
                                           const CanonicalForm& cf,
                                           Exec exec = Exec::parallel);

/// Unit directions used by contains(): uniform angles in 2D, Fibonacci
/// sphere in 3D, seeded Gaussian directions above.
std::vector<Vector> direction_samples(int n, const NumericalSettings& settings);

/// Caches the support values over the direction sample so repeated
/// membership queries against one reach set stay cheap.
class SupportScan {
 public:
  SupportScan(const InputEnvelope& envelope, const CanonicalForm& cf,
              const Vector& x0, double t, Coordinates coords,
              const NumericalSettings& settings);

  /// sup_y (<y, point> - h(y)): global scan over the cached directions,
  /// then local refinement toward the continuous supremum.
  double fenchel(const Vector& point) const;
  double support(const Vector& y) const;

 private:
  const InputEnvelope& envelope_;
  const CanonicalForm& cf_;
  Vector x0_;
  double t_;
  Coordinates coords_;
  std::vector<Vector> dirs_;
  std::vector<double> h_;
};

}  // namespace reachkit

#endif  // REACHKIT_BOUNDARY_HPP
