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

#include "slitspin/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slitspin/errors.hpp"

namespace slitspin {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool finite(Amplitude a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

}  // namespace

double Spinor::norm_squared() const { return std::norm(plus) + std::norm(minus); }

bool Spinor::is_finite() const { return finite(plus) && finite(minus); }

bool Spinor::is_normalized() const {
  return is_finite() && std::abs(norm_squared() - 1.0) <= kNormTolerance;
}

TwoSpinState TwoSpinState::product_ket(ProductKet ket) {
  TwoSpinState s;
  s.amplitudes[static_cast<std::size_t>(ket)] = 1.0;
  return s;
}

double TwoSpinState::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return sum;
}

double TwoSpinState::norm() const { return std::sqrt(norm_squared()); }

bool TwoSpinState::is_finite() const {
  return std::all_of(amplitudes.begin(), amplitudes.end(), finite);
}

bool TwoSpinState::is_normalized() const {
  return is_finite() && std::abs(norm_squared() - 1.0) <= kNormTolerance;
}

double TwoSpinState::max_abs_diff(const TwoSpinState& other) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    worst = std::max(worst, std::abs(amplitudes[i] - other.amplitudes[i]));
  }
  return worst;
}

TwoSpinState& TwoSpinState::operator+=(const TwoSpinState& rhs) {
  for (std::size_t i = 0; i < amplitudes.size(); ++i) amplitudes[i] += rhs.amplitudes[i];
  return *this;
}

TwoSpinState& TwoSpinState::operator-=(const TwoSpinState& rhs) {
  for (std::size_t i = 0; i < amplitudes.size(); ++i) amplitudes[i] -= rhs.amplitudes[i];
  return *this;
}

TwoSpinState& TwoSpinState::operator*=(Amplitude scale) {
  for (auto& a : amplitudes) a *= scale;
  return *this;
}

TwoSpinState tensor(const Spinor& a, const Spinor& b) {
  if (!a.is_finite() || !b.is_finite()) {
    throw InvalidInputError("tensor: non-finite spinor amplitude");
  }
  return TwoSpinState{{a.plus * b.plus, a.plus * b.minus, a.minus * b.plus, a.minus * b.minus}};
}

Amplitude inner(const TwoSpinState& s, const TwoSpinState& t) {
  Amplitude sum = 0.0;
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
    sum += std::conj(s.amplitudes[i]) * t.amplitudes[i];
  }
  return sum;
}

Amplitude inner(const Spinor& s, const Spinor& t) {
  return std::conj(s.plus) * t.plus + std::conj(s.minus) * t.minus;
}

TwoSpinState basis_u() { return TwoSpinState{{kInvSqrt2, 0.0, 0.0, kInvSqrt2}}; }

TwoSpinState basis_v() { return TwoSpinState{{0.0, kInvSqrt2, -kInvSqrt2, 0.0}}; }

UvDecomposition decompose_uv(const TwoSpinState& s) {
  const TwoSpinState u = basis_u();
  const TwoSpinState v = basis_v();
  const Amplitude c_u = inner(u, s);
  const Amplitude c_v = inner(v, s);
  const TwoSpinState residual = s - c_u * u - c_v * v;
  return {c_u, c_v, residual.norm()};
}

TwoSpinState from_uv(Amplitude c_u, Amplitude c_v) { return c_u * basis_u() + c_v * basis_v(); }

Ensemble::Ensemble(std::vector<Entry> entries) : entries_(std::move(entries)) {
  double total = 0.0;
  for (const auto& entry : entries_) {
    if (!(entry.weight >= 0.0 && entry.weight <= 1.0)) {
      throw InvalidInputError("ensemble: weight " + std::to_string(entry.weight) +
                              " outside [0, 1]");
    }
    const bool normalized =
        std::visit([](const auto& state) { return state.is_normalized(); }, entry.state);
    if (!normalized) throw InvalidInputError("ensemble: entry state is not normalized");
    total += entry.weight;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw InvalidInputError("ensemble: weights sum to " + std::to_string(total) + ", not 1");
  }
}

double Ensemble::total_weight() const {
  double total = 0.0;
  for (const auto& entry : entries_) total += entry.weight;
  return total;
}

}  // namespace slitspin
