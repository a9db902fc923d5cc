// Copyright 2026 The slitspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// library's operator code; states are plain arrays of std::complex.

#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace slitspin::testing {

using C = std::complex<double>;
using Vec4 = std::array<C, 4>;
using Mat2 = std::array<std::array<double, 2>, 2>;
using Mat4 = std::array<std::array<C, 4>, 4>;

inline Mat2 planar_rotation(double a) {
  return {{{std::cos(a), std::sin(a)}, {-std::sin(a), std::cos(a)}}};
}

inline std::array<double, 2> mat_vec(const Mat2& m, std::array<double, 2> x) {
  return {m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1]};
}

/// Kronecker product A (x) B with row index 2i+j, column index 2k+l.
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[2 * i + j][2 * k + l] = a[i][k] * b[j][l];
  return out;
}

inline Vec4 apply(const Mat4& m, const Vec4& x) {
  Vec4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += m[r][c] * x[c];
  return out;
}

inline C dot(const Vec4& a, const Vec4& b) {
  C s = 0.0;
  for (int k = 0; k < 4; ++k) s += std::conj(a[k]) * b[k];
  return s;
}

inline Vec4 u_vec() {
  const double r = 1.0 / std::sqrt(2.0);
  return {r, 0.0, 0.0, r};
}

inline Vec4 v_vec() {
  const double r = 1.0 / std::sqrt(2.0);
  return {0.0, r, -r, 0.0};
}

/// Gram-Schmidt: orthonormalize {u, v} from scratch, then return the
/// coefficients of x and the norm of what is left over.
struct Projection {
  C c_u;
  C c_v;
  double residual;
};

inline Projection gram_schmidt_project(const Vec4& x) {
  Vec4 e1 = u_vec();
  Vec4 e2 = v_vec();
  const C overlap = dot(e1, e2);
  for (int k = 0; k < 4; ++k) e2[k] -= overlap * e1[k];
  const double n2 = std::sqrt(dot(e2, e2).real());
  for (auto& a : e2) a /= n2;
  const C c1 = dot(e1, x);
  const C c2 = dot(e2, x);
  double residual = 0.0;
  for (int k = 0; k < 4; ++k) residual += std::norm(x[k] - c1 * e1[k] - c2 * e2[k]);
  return {c1, c2, std::sqrt(residual)};
}

/// Post-measurement density matrix for a projective measurement of one
/// factor in the basis {R(axis)|+>, R(axis)|->}, evaluated against target.
inline double measured_overlap(const Vec4& psi, int factor, double axis, const Vec4& target) {
  const Mat2 r = planar_rotation(axis);
  Mat4 rho{};
  for (int outcome = 0; outcome < 2; ++outcome) {
    Mat2 p{};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) p[a][b] = r[a][outcome] * r[b][outcome];
    const Mat2 id{{{1, 0}, {0, 1}}};
    const Mat4 proj = factor == 1 ? kron(p, id) : kron(id, p);
    const Vec4 x = apply(proj, psi);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) rho[i][j] += x[i] * std::conj(x[j]);
  }
  C value = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) value += std::conj(target[i]) * rho[i][j] * target[j];
  return value.real();
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

}  // namespace slitspin::testing
