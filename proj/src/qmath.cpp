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

#include "povmc/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "povmc/errors.hpp"

namespace povmc {

Matrix2 Matrix2::adjoint() const {
  const auto& m = *this;
  return {std::conj(m(0, 0)), std::conj(m(1, 0)), std::conj(m(0, 1)),
          std::conj(m(1, 1))};
}

Complex Matrix2::trace() const { return entries[0] + entries[3]; }

Complex Matrix2::det() const {
  return entries[0] * entries[3] - entries[1] * entries[2];
}

bool Matrix2::is_finite() const {
  return std::all_of(entries.begin(), entries.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (std::size_t k = 0; k < 4; ++k) r.entries[k] = a.entries[k] + b.entries[k];
  return r;
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (std::size_t k = 0; k < 4; ++k) r.entries[k] = a.entries[k] - b.entries[k];
  return r;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0),
          a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0),
          a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Matrix2 operator*(Complex s, const Matrix2& m) {
  Matrix2 r;
  for (std::size_t k = 0; k < 4; ++k) r.entries[k] = s * m.entries[k];
  return r;
}

Matrix2 operator*(const Matrix2& m, Complex s) { return s * m; }

Vector2 operator*(const Matrix2& m, const Vector2& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

Complex inner(const Vector2& a, const Vector2& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

double norm(const Vector2& v) { return std::hypot(std::abs(v[0]), std::abs(v[1])); }

Matrix2 outer(const Vector2& a, const Vector2& b) {
  return {a[0] * std::conj(b[0]), a[0] * std::conj(b[1]),
          a[1] * std::conj(b[0]), a[1] * std::conj(b[1])};
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  double r = 0.0;
  for (std::size_t k = 0; k < 4; ++k)
    r = std::max(r, std::abs(a.entries[k] - b.entries[k]));
  return r;
}

double max_abs(const Matrix2& m) { return max_abs_diff(m, Matrix2::zero()); }

double hermiticity_residual(const Matrix2& m) {
  return max_abs_diff(m, m.adjoint());
}

double unitarity_residual(const Matrix2& m) {
  return max_abs_diff(m.adjoint() * m, Matrix2::identity());
}

bool is_hermitian(const Matrix2& m, double tol) {
  return m.is_finite() && hermiticity_residual(m) <= tol;
}

bool is_unitary(const Matrix2& m, double tol) {
  return m.is_finite() && unitarity_residual(m) <= tol;
}

bool is_psd(const Matrix2& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  return eig_hermitian2(m, tol).values[1] >= -tol;
}

Vector2 gauge_fixed(const Vector2& v) {
  const double m0 = std::abs(v[0]);
  const double m1 = std::abs(v[1]);
  const double top = std::max(m0, m1);
  if (top == 0.0) return v;
  const Complex pivot = (m0 >= top * (1.0 - 1e-12)) ? v[0] : v[1];
  const Complex phase = std::conj(pivot) / std::abs(pivot);
  Vector2 r{v[0] * phase, v[1] * phase};
  // The pivot is real positive up to rounding; make it exact.
  if (m0 >= top * (1.0 - 1e-12))
    r[0] = std::abs(v[0]);
  else
    r[1] = std::abs(v[1]);
  return r;
}

Vector2 orthogonal_complement(const Vector2& v) {
  return gauge_fixed({-std::conj(v[1]), std::conj(v[0])});
}

namespace {

Vector2 normalized(const Vector2& v) {
  const double n = norm(v);
  return {v[0] / n, v[1] / n};
}

// Eigen-decomposition of the Hermitian part of h, no validation.
HermitianEigen eig_hermitian_unchecked(const Matrix2& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const Complex b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));

  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double r = std::hypot(half, std::abs(b));
  const double scale = std::max({std::abs(a), std::abs(d), std::abs(b)});

  HermitianEigen out;
  out.values = {mean + r, mean - r};
  if (r <= 1e-14 * scale || scale == 0.0) {
    out.vectors = Matrix2::identity();
    return out;
  }
  if (b == Complex(0.0)) {
    out.values = {std::max(a, d), std::min(a, d)};
    out.vectors = a >= d ? Matrix2::identity() : Matrix2(0.0, 1.0, 1.0, 0.0);
    return out;
  }
  // Of the two null vectors of (h - l1 I), take the one without cancellation.
  Vector2 top = half >= 0.0 ? Vector2{half + r, std::conj(b)}
                            : Vector2{b, r - half};
  top = gauge_fixed(normalized(top));
  out.vectors = Matrix2::from_columns(top, orthogonal_complement(top));
  return out;
}

}  // namespace

HermitianEigen eig_hermitian2(const Matrix2& h, double tol) {
  if (!h.is_finite()) throw std::invalid_argument("eig_hermitian2: non-finite input");
  const double res = hermiticity_residual(h);
  if (res > tol) throw NotHermitian(std::nullopt, res);
  return eig_hermitian_unchecked(h);
}

Matrix2 HermitianEigen::reconstruct() const {
  return vectors * Matrix2::diag(values[0], values[1]) * vectors.adjoint();
}

Svd2 svd2(const Matrix2& m) {
  if (!m.is_finite()) throw std::invalid_argument("svd2: non-finite input");

  HermitianEigen e = eig_hermitian_unchecked(m.adjoint() * m);
  Matrix2 images = m * e.vectors;  // columns are sigma_k v_k
  if (norm(images.column(1)) > norm(images.column(0))) {
    e.vectors = Matrix2::from_columns(e.vectors.column(1), e.vectors.column(0));
    images = m * e.vectors;
  }

  Svd2 out;
  out.u = e.vectors.adjoint();
  const Vector2 c0 = images.column(0);
  const Vector2 c1 = images.column(1);
  const double s0 = norm(c0);
  if (s0 == 0.0) {
    out.v = Matrix2::identity();
    out.d = {0.0, 0.0};
    return out;
  }
  const Vector2 v0{c0[0] / s0, c0[1] / s0};
  // Project the second image on the exact complement of v0 so that v stays
  // unitary even when sigma_1 is tiny.
  const Vector2 perp{-std::conj(v0[1]), std::conj(v0[0])};
  const Complex along = inner(perp, c1);
  const double s1 = std::abs(along);
  Vector2 v1;
  if (s1 > 0.0) {
    const Complex phase = along / s1;
    v1 = {perp[0] * phase, perp[1] * phase};
  } else {
    v1 = gauge_fixed(perp);
  }
  out.v = Matrix2::from_columns(v0, v1);
  out.d = {s0, s1};
  return out;
}

Matrix2 Svd2::reconstruct() const { return v * Matrix2::diag(d[0], d[1]) * u; }

Matrix2 sqrt_psd(const Matrix2& f, double tol) {
  HermitianEigen e = eig_hermitian2(f, tol);
  if (e.values[1] < -tol) throw NotPsd(std::nullopt, e.values[1]);
  // Round-off level eigenvalues count as zero.
  const double floor =
      32.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, e.values[0]);
  const auto root = [floor](double x) { return x > floor ? std::sqrt(x) : 0.0; };
  const double r0 = root(e.values[0]);
  const double r1 = root(e.values[1]);
  Matrix2 r = e.vectors * Matrix2::diag(r0, r1) * e.vectors.adjoint();
  // Exact Hermitian symmetry.
  r(0, 0) = r(0, 0).real();
  r(1, 1) = r(1, 1).real();
  r(1, 0) = std::conj(r(0, 1));
  return r;
}

Matrix2 pinv(const Matrix2& m, double cutoff) {
  const Svd2 s = svd2(m);
  const double i0 = s.d[0] > cutoff ? 1.0 / s.d[0] : 0.0;
  const double i1 = s.d[1] > cutoff ? 1.0 / s.d[1] : 0.0;
  return s.u.adjoint() * Matrix2::diag(i0, i1) * s.v.adjoint();
}

Matrix2 polar_unitary(const Matrix2& m) {
  const Svd2 s = svd2(m);
  return s.v * s.u;
}

Matrix2 procrustes_unitary(const Matrix2& source, const Matrix2& target) {
  return polar_unitary(target * source.adjoint());
}

Matrix2 basis_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c, s, -s, c};
}

Matrix2 rotator(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c, -s, s, c};
}

}  // namespace povmc
