// Copyright 2026 The povmc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>

namespace povmc {

using Complex = std::complex<double>;

/// Jones vector in the (|H>, |V>) basis.
using Vector2 = std::array<Complex, 2>;

/// Default tolerance of the validation predicates.
inline constexpr double kValidationTol = 1e-9;

/// Complex 2x2 matrix in the (|H>, |V>) basis, H at index 0.
struct Matrix2 {
  std::array<Complex, 4> entries{};  // row-major

  constexpr Matrix2() = default;
  constexpr Matrix2(Complex m00, Complex m01, Complex m10, Complex m11)
      : entries{m00, m01, m10, m11} {}

  static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Matrix2 zero() { return {}; }
  static constexpr Matrix2 diag(Complex d0, Complex d1) {
    return {d0, 0.0, 0.0, d1};
  }
  /// Matrix whose columns are `c0` and `c1`.
  static constexpr Matrix2 from_columns(const Vector2& c0, const Vector2& c1) {
    return {c0[0], c1[0], c0[1], c1[1]};
  }

  constexpr Complex& operator()(int row, int col) {
    return entries[static_cast<std::size_t>(2 * row + col)];
  }
  constexpr const Complex& operator()(int row, int col) const {
    return entries[static_cast<std::size_t>(2 * row + col)];
  }

  constexpr Vector2 column(int col) const {
    return {(*this)(0, col), (*this)(1, col)};
  }
  constexpr Vector2 row(int r) const { return {(*this)(r, 0), (*this)(r, 1)}; }

  Matrix2 adjoint() const;
  Complex trace() const;
  Complex det() const;
  bool is_finite() const;

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 operator+(const Matrix2& a, const Matrix2& b);
Matrix2 operator-(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(Complex s, const Matrix2& m);
Matrix2 operator*(const Matrix2& m, Complex s);
Vector2 operator*(const Matrix2& m, const Vector2& v);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const Vector2& a, const Vector2& b);
double norm(const Vector2& v);
/// |v><v|
Matrix2 outer(const Vector2& a, const Vector2& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix2& a, const Matrix2& b);
double max_abs(const Matrix2& m);

double hermiticity_residual(const Matrix2& m);
/// max |m^dag m - I| entrywise.
double unitarity_residual(const Matrix2& m);

bool is_hermitian(const Matrix2& m, double tol = kValidationTol);
bool is_unitary(const Matrix2& m, double tol = kValidationTol);
/// Hermitian within `tol` and smallest eigenvalue >= -tol.
bool is_psd(const Matrix2& m, double tol = kValidationTol);

/// Multiplies `v` by the phase that makes its largest-modulus entry real and
/// positive. Ties (within 1e-12 relative) go to the lower index.
Vector2 gauge_fixed(const Vector2& v);

/// The unit vector orthogonal to unit `v`, gauge fixed.
Vector2 orthogonal_complement(const Vector2& v);

/// Singular value decomposition m = v * diag(d) * u.
struct Svd2 {
  Matrix2 v;
  std::array<double, 2> d{};  // d[0] >= d[1] >= 0
  Matrix2 u;

  Matrix2 reconstruct() const;
};

/// Closed-form 2x2 SVD via the eigenbasis of m^dag m. The columns of u^dag
/// are gauge fixed; degenerate spectra pick the basis-aligned eigenvectors.
Svd2 svd2(const Matrix2& m);

struct HermitianEigen {
  std::array<double, 2> values{};  // descending
  Matrix2 vectors;                 // eigenvectors as gauge-fixed columns

  Matrix2 reconstruct() const;
};

/// Throws NotHermitian when the Hermiticity residual exceeds `tol`.
HermitianEigen eig_hermitian2(const Matrix2& h, double tol = kValidationTol);

/// Hermitian PSD square root. Eigenvalues below 32 eps * max(1, lambda_max)
/// clamp to zero; anything below -tol throws NotPsd.
Matrix2 sqrt_psd(const Matrix2& f, double tol = kValidationTol);

/// Moore-Penrose pseudo-inverse; singular values <= cutoff count as zero.
Matrix2 pinv(const Matrix2& m, double cutoff = 1e-10);

/// Unitary factor of the polar decomposition m = W * |m|, with W completed on
/// ker(m) by the gauge-fixed bases of svd2.
Matrix2 polar_unitary(const Matrix2& m);

/// Unitary W minimizing |W * source - target| (orthogonal Procrustes),
/// W = polar_unitary(target * source^dag).
Matrix2 procrustes_unitary(const Matrix2& source, const Matrix2& target);

/// [[cos a, sin a], [-sin a, cos a]]: rows are the unit vectors at angles a and
/// a + pi/2, so it expresses a Jones vector in the basis rotated by `a`.
Matrix2 basis_rotation(double angle);

/// Action of a polarization rotator: H -> cos a H + sin a V,
/// V -> cos a V - sin a H.
Matrix2 rotator(double angle);

}  // namespace povmc
