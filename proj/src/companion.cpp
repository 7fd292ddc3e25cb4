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
#include "reachkit/companion.hpp"

#include <cmath>

namespace reachkit {

namespace {

double real_with_guard(Complex value, double imag_tol, const char* where) {
  const double residue = std::abs(value.imag()) / (1.0 + std::abs(value));
  if (residue > imag_tol)
    throw Error(ErrorCode::imaginary_residue, where);
  return value.real();
}

}  // namespace

Kernel make_kernel(const ComplexVector& eigs, double imag_tol) {
  const int n = static_cast<int>(eigs.size());
  Kernel kernel;
  kernel.eigs = eigs;
  kernel.imag_tol = imag_tol;
  kernel.pprime = ComplexVector::Ones(n);
  kernel.weights = ComplexVector::Zero(n);
  for (int i = 0; i < n; ++i) {
    Complex prod = 1.0;
    for (int j = 0; j < n; ++j)
      if (j != i) prod *= eigs(i) - eigs(j);
    kernel.pprime(i) = prod;
    kernel.weights(i) = std::pow(eigs(i), n) / prod;
  }
  return kernel;
}

Kernel make_kernel(const CanonicalForm& cf, const NumericalSettings& settings) {
  if (cf.kernel_trivial) {
    Kernel kernel;
    kernel.eigs = cf.eigs;
    kernel.trivial = true;
    kernel.imag_tol = settings.imag_tol;
    return kernel;
  }
  return make_kernel(cf.eigs, settings.imag_tol);
}

double phi(double theta, const Kernel& kernel) {
  if (kernel.trivial) return 0.0;
  Complex sum = 0.0;
  for (int i = 0; i < kernel.dim(); ++i)
    sum += kernel.weights(i) * std::exp(kernel.eigs(i) * theta);
  return -real_with_guard(sum, kernel.imag_tol, "phi kernel sum");
}

double g_derivative(double theta, const Kernel& kernel, int k) {
  const int n = kernel.dim();
  if (k < 0 || k >= n)
    throw Error(ErrorCode::wrong_dimension, "derivative order out of range");
  if (kernel.trivial) {
    // Nilpotent limit: g^{(k)}(theta) = theta^{n-1-k} / (n-1-k)!.
    double v = 1.0;
    for (int m = 1; m <= n - 1 - k; ++m) v *= theta / m;
    return v;
  }
  Complex sum = 0.0;
  for (int i = 0; i < n; ++i)
    sum += std::pow(kernel.eigs(i), k) * std::exp(kernel.eigs(i) * theta) /
           kernel.pprime(i);
  return real_with_guard(sum, kernel.imag_tol, "g derivative sum");
}

Vector expm_action_con(double s, const Vector& x, const CanonicalForm& cf) {
  const int n = cf.dim();
  if (x.size() != n)
    throw Error(ErrorCode::wrong_dimension, "state length mismatch");
  if (cf.kernel_trivial) {
    // A_con = A_int here; use the nilpotent closed form.
    return chi(s, x);
  }
  // Companion right-eigenvectors are Vandermonde columns (1, l_i, ..., l_i^{n-1}).
  Eigen::MatrixXcd V(n, n);
  for (int i = 0; i < n; ++i) {
    Complex p = 1.0;
    for (int k = 0; k < n; ++k) {
      V(k, i) = p;
      p *= cf.eigs(i);
    }
  }
  const ComplexVector a = V.partialPivLu().solve(x.cast<Complex>());
  ComplexVector y = ComplexVector::Zero(n);
  for (int i = 0; i < n; ++i)
    y += a(i) * std::exp(cf.eigs(i) * s) * V.col(i);
  Vector out(n);
  const double imag_tol = 1e-9;
  for (int k = 0; k < n; ++k)
    out(k) = real_with_guard(y(k), imag_tol, "expm action component");
  return out;
}

Vector xi(double s, int n) {
  Vector out(n);
  double v = 1.0;
  out(n - 1) = 1.0;
  for (int k = n - 1; k >= 1; --k) {
    v *= s / (n - k);
    out(k - 1) = v;
  }
  return out;
}

Vector chi(double t, const Vector& x0) {
  const int n = static_cast<int>(x0.size());
  Vector out = Vector::Zero(n);
  for (int k = 1; k <= n; ++k) {
    double pow_fact = 1.0;  // t^{l-k}/(l-k)!
    for (int l = k; l <= n; ++l) {
      out(k - 1) += pow_fact * x0(l - 1);
      pow_fact *= t / (l - k + 1);
    }
  }
  return out;
}

}  // namespace reachkit
