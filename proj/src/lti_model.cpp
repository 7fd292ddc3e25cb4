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
#include "reachkit/lti_model.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace reachkit {

void LtiProblem::validate() const {
  const int n = dim();
  if (n < 1) throw Error(ErrorCode::validation_error, "n must be >= 1");
  if (A.rows() != A.cols())
    throw Error(ErrorCode::validation_error, "A must be square");
  if (b.size() != n)
    throw Error(ErrorCode::validation_error, "b length must match A");
  if (z0.size() != n)
    throw Error(ErrorCode::validation_error, "z0 length must match A");
  if (!(v_min <= v_max))
    throw Error(ErrorCode::validation_error, "v_min must be <= v_max");
  if (!(t_final > 0))
    throw Error(ErrorCode::validation_error, "t_final must be positive");
  if (!A.allFinite() || !b.allFinite() || !z0.allFinite())
    throw Error(ErrorCode::validation_error, "non-finite system entries");
  settings.validate();
}

Matrix controllability_matrix(const Matrix& A, const Vector& b) {
  const int n = static_cast<int>(A.rows());
  Matrix C(n, n);
  Vector col = b;
  for (int k = 0; k < n; ++k) {
    C.col(k) = col;
    col = A * col;
  }
  return C;
}

Vector char_poly_coeffs(const Matrix& A) {
  const int n = static_cast<int>(A.rows());
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  Vector c = Vector::Zero(n);
  Matrix Mk = Matrix::Zero(n, n);
  const Matrix I = Matrix::Identity(n, n);
  double prev = 1.0;  // coefficient of l^n
  for (int k = 1; k <= n; ++k) {
    Mk = A * Mk + prev * I;
    prev = -(A * Mk).trace() / k;
    c(n - k) = prev;
  }
  return c;
}

ComplexVector eigenvalues(const Matrix& A, double distinct_tol) {
  const int n = static_cast<int>(A.rows());
  Eigen::EigenSolver<Matrix> solver(A, /*computeEigenvectors=*/false);
  std::vector<Complex> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = solver.eigenvalues()(i);

  // Symmetrize conjugate pairs so downstream real-valuedness checks are
  // sharp: pair each eigenvalue with positive imaginary part to its mirror.
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i] || eigs[i].imag() <= 0) continue;
    int best = -1;
    double best_d = std::numeric_limits<double>::max();
    for (int j = 0; j < n; ++j) {
      if (j == i || used[j] || eigs[j].imag() >= 0) continue;
      const double d = std::abs(eigs[j] - std::conj(eigs[i]));
      if (d < best_d) { best_d = d; best = j; }
    }
    if (best >= 0) {
      const Complex avg = 0.5 * (eigs[i] + std::conj(eigs[best]));
      eigs[i] = avg;
      eigs[best] = std::conj(avg);
      used[i] = used[best] = true;
    }
  }
  std::sort(eigs.begin(), eigs.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  double max_abs = 0.0;
  for (const auto& e : eigs) max_abs = std::max(max_abs, std::abs(e));
  const double sep_floor = distinct_tol * std::max(1.0, max_abs);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(eigs[i] - eigs[j]) <= sep_floor)
        throw Error(ErrorCode::repeated_eigenvalues,
                    "eigenvalue separation below distinct_tol");

  ComplexVector out(n);
  for (int i = 0; i < n; ++i) out(i) = eigs[i];
  return out;
}

Matrix invert_partial_pivot(const Matrix& A, double pivot_tol,
                            ErrorCode fail_code) {
  const int n = static_cast<int>(A.rows());
  const double scale = A.cwiseAbs().maxCoeff();
  Matrix work = A;
  Matrix inv = Matrix::Identity(n, n);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(work(i, k)) > std::abs(work(piv, k))) piv = i;
    if (std::abs(work(piv, k)) < pivot_tol * std::max(scale, 1e-300))
      throw Error(fail_code, "pivot below tolerance");
    if (piv != k) {
      work.row(piv).swap(work.row(k));
      inv.row(piv).swap(inv.row(k));
    }
    const double d = work(k, k);
    work.row(k) /= d;
    inv.row(k) /= d;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const double f = work(i, k);
      if (f != 0.0) {
        work.row(i) -= f * work.row(k);
        inv.row(i) -= f * inv.row(k);
      }
    }
  }
  return inv;
}

namespace {

double det_partial_pivot(const Matrix& A) {
  const int n = static_cast<int>(A.rows());
  Matrix work = A;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(work(i, k)) > std::abs(work(piv, k))) piv = i;
    if (piv != k) {
      work.row(piv).swap(work.row(k));
      det = -det;
    }
    det *= work(k, k);
    if (work(k, k) == 0.0) return 0.0;
    for (int i = k + 1; i < n; ++i) {
      const double f = work(i, k) / work(k, k);
      work.row(i) -= f * work.row(k);
    }
  }
  return det;
}

}  // namespace

CanonicalForm canonical_transform(const LtiProblem& problem) {
  problem.validate();
  const int n = problem.dim();
  const Matrix& A = problem.A;

  const Matrix C = controllability_matrix(A, problem.b);
  const Matrix C_inv =
      invert_partial_pivot(C, 1e-12, ErrorCode::not_controllable);

  CanonicalForm cf;
  cf.q = C_inv.row(n - 1).transpose();

  cf.M.resize(n, n);
  Eigen::RowVectorXd row = cf.q.transpose();
  for (int k = 0; k < n; ++k) {
    cf.M.row(k) = row;
    row = row * A;
  }
  cf.M_inv = invert_partial_pivot(cf.M, 1e-12, ErrorCode::not_controllable);
  cf.det_M = det_partial_pivot(cf.M);

  cf.c = char_poly_coeffs(A);

  // M A M^{-1} must match companion structure before it is snapped exact.
  const Matrix raw = cf.M * A * cf.M_inv;
  const double structure_tol = 1e-8 * std::max(1.0, raw.cwiseAbs().maxCoeff());
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double expected = (j == i + 1) ? 1.0 : 0.0;
      if (std::abs(raw(i, j) - expected) > structure_tol)
        throw Error(ErrorCode::structure_violation,
                    "M A M^-1 deviates from companion form");
    }
  }
  for (int j = 0; j < n; ++j)
    if (std::abs(raw(n - 1, j) + cf.c(j)) > structure_tol)
      throw Error(ErrorCode::structure_violation,
                  "companion last row disagrees with characteristic "
                  "coefficients");

  cf.A_con = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) cf.A_con(i, i + 1) = 1.0;
  cf.A_con.row(n - 1) = -cf.c.transpose();

  cf.b_con = Vector::Zero(n);
  cf.b_con(n - 1) = 1.0;

  // Nilpotent A: phi vanishes identically, Lemma-1 distinctness is moot.
  cf.kernel_trivial = cf.c.cwiseAbs().maxCoeff() <
                      1e-14 * std::max(1.0, A.cwiseAbs().maxCoeff());
  if (cf.kernel_trivial) {
    cf.eigs = ComplexVector::Zero(n);
  } else {
    cf.eigs = eigenvalues(A, problem.settings.distinct_tol);
  }
  return cf;
}

}  // namespace reachkit
