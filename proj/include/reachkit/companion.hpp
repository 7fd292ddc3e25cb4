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
#ifndef REACHKIT_COMPANION_HPP
#define REACHKIT_COMPANION_HPP

#include "reachkit/lti_model.hpp"

namespace reachkit {

/// Eigenvalue expansion of the companion-exponential kernel:
///   phi(theta) = -sum_i w_i e^{lambda_i theta},  w_i = lambda_i^n / p'(lambda_i),
///   p'(lambda_i) = prod_{j != i} (lambda_i - lambda_j).
/// A trivial kernel (nilpotent state matrix) evaluates phi identically zero.
struct Kernel {
  ComplexVector eigs;
  ComplexVector weights;  // lambda_i^n / p'(lambda_i)
  ComplexVector pprime;   // p'(lambda_i)
  bool trivial = false;
  double imag_tol = 1e-9;

  int dim() const { return static_cast<int>(eigs.size()); }
};

Kernel make_kernel(const CanonicalForm& cf, const NumericalSettings& settings);
Kernel make_kernel(const ComplexVector& eigs, double imag_tol = 1e-9);

/// phi(theta) = <c, e^{theta A_con} b_con>, evaluated from the finite
/// eigenvalue sum. Throws ImaginaryResidue if conjugate symmetry is broken.
double phi(double theta, const Kernel& kernel);

/// g^{(k)}(theta) = sum_i lambda_i^k e^{lambda_i theta} / p'(lambda_i);
/// the k-th derivative of the top-right entry of e^{theta A_con}.
double g_derivative(double theta, const Kernel& kernel, int k);

/// e^{s A_con} x via the Vandermonde eigenbasis of the companion matrix.
Vector expm_action_con(double s, const Vector& x, const CanonicalForm& cf);

/// Last column of e^{s A_int}: xi_k(s) = s^{n-k} / (n-k)!.
Vector xi(double s, int n);

/// e^{t A_int} x0: chi_k = sum_{l=k}^{n} t^{l-k}/(l-k)! x0_l.
Vector chi(double t, const Vector& x0);

}  // namespace reachkit

#endif  // REACHKIT_COMPANION_HPP
