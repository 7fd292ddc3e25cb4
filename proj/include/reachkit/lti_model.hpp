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
#ifndef REACHKIT_LTI_MODEL_HPP
#define REACHKIT_LTI_MODEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "reachkit/settings.hpp"

namespace reachkit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

/// Single-input LTI system dz/dt = A z + b v with v(s) in [v_min, v_max].
struct LtiProblem {
  Matrix A;
  Vector b;
  double v_min = 0.0;
  double v_max = 0.0;
  Vector z0;
  double t_final = 0.0;
  NumericalSettings settings;

  int dim() const { return static_cast<int>(A.rows()); }
  void validate() const;
};

/// Controllable-canonical transform data: x = M z turns the system into
/// dx/dt = A_con x + b_con v with A_con a companion matrix.
struct CanonicalForm {
  Matrix M;
  Matrix M_inv;
  Vector q;        // last row of the inverse controllability matrix
  Vector c;        // monic characteristic coefficients c_0 .. c_{n-1}
  Matrix A_con;
  Vector b_con;
  ComplexVector eigs;
  double det_M = 0.0;

  int dim() const { return static_cast<int>(M.rows()); }
  /// Nilpotent A (c == 0) needs no eigenvalue kernel: the input-weight
  /// function is identically zero.
  bool kernel_trivial = false;
};

/// [b, Ab, ..., A^{n-1} b]
Matrix controllability_matrix(const Matrix& A, const Vector& b);

/// Characteristic coefficients of A via the Faddeev-LeVerrier recursion:
/// p(l) = l^n + c_{n-1} l^{n-1} + ... + c_0.
Vector char_poly_coeffs(const Matrix& A);

/// Eigenvalues sorted by (real, imag), conjugate pairs symmetrized exactly.
/// Throws RepeatedEigenvalues when the minimum pairwise separation falls
/// below distinct_tol * max(1, max |lambda|).
ComplexVector eigenvalues(const Matrix& A, double distinct_tol);

CanonicalForm canonical_transform(const LtiProblem& problem);

/// Gaussian elimination with partial pivoting. Throws `fail_code` when a
/// pivot magnitude drops below pivot_tol * ||A||_max.
Matrix invert_partial_pivot(const Matrix& A, double pivot_tol,
                            ErrorCode fail_code);

}  // namespace reachkit

#endif  // REACHKIT_LTI_MODEL_HPP
