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

// Single- and two-spin state vectors over the fixed {|+>, |->} basis, and
// the two rotationally invariant pair states u and v.

#include <array>
#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

namespace slitspin {

using Amplitude = std::complex<double>;

/// Tolerance on |norm^2 - 1| for anything claimed to be normalized.
inline constexpr double kNormTolerance = 1e-12;

struct Spinor {
  Amplitude plus{};
  Amplitude minus{};

  static Spinor up() { return {1.0, 0.0}; }
  static Spinor down() { return {0.0, 1.0}; }

  double norm_squared() const;
  bool is_finite() const;
  bool is_normalized() const;
};

/// Index of each product ket inside TwoSpinState::amplitudes.
enum class ProductKet : std::size_t {
  kPlusPlus = 0,
  kPlusMinus = 1,
  kMinusPlus = 2,
  kMinusMinus = 3,
};

/// Two-spin state in the ordered basis (|++>, |+->, |-+>, |-->).
struct TwoSpinState {
  std::array<Amplitude, 4> amplitudes{};

  static TwoSpinState product_ket(ProductKet ket);

  Amplitude& operator[](std::size_t i) { return amplitudes[i]; }
  const Amplitude& operator[](std::size_t i) const { return amplitudes[i]; }

  double norm_squared() const;
  double norm() const;
  bool is_finite() const;
  bool is_normalized() const;

  /// Largest componentwise modulus of the difference.
  double max_abs_diff(const TwoSpinState& other) const;

  TwoSpinState& operator+=(const TwoSpinState& rhs);
  TwoSpinState& operator-=(const TwoSpinState& rhs);
  TwoSpinState& operator*=(Amplitude scale);

  friend TwoSpinState operator+(TwoSpinState lhs, const TwoSpinState& rhs) {
    return lhs += rhs;
  }
  friend TwoSpinState operator-(TwoSpinState lhs, const TwoSpinState& rhs) {
    return lhs -= rhs;
  }
  friend TwoSpinState operator*(Amplitude scale, TwoSpinState s) {
    return s *= scale;
  }
  friend TwoSpinState operator*(TwoSpinState s, Amplitude scale) {
    return s *= scale;
  }
  friend bool operator==(const TwoSpinState&, const TwoSpinState&) = default;
};

/// Outer product a (x) b. Throws InvalidInputError on non-finite amplitudes.
TwoSpinState tensor(const Spinor& a, const Spinor& b);

/// <s|t>, conjugate-linear in s.
Amplitude inner(const TwoSpinState& s, const TwoSpinState& t);
Amplitude inner(const Spinor& s, const Spinor& t);

/// u = (|++> + |-->)/sqrt2, the state registered along the normal.
TwoSpinState basis_u();
/// v = (|+-> - |-+>)/sqrt2, the singlet.
TwoSpinState basis_v();

struct UvDecomposition {
  Amplitude c_u;
  Amplitude c_v;
  /// Norm of s - c_u u - c_v v.
  double residual_norm;
};

UvDecomposition decompose_uv(const TwoSpinState& s);

/// c_u u + c_v v.
TwoSpinState from_uv(Amplitude c_u, Amplitude c_v);

/// Weighted mixture of normalized states. Construction enforces that the
/// weights lie in [0, 1] and sum to one, and that every state is normalized.
class Ensemble {
 public:
  using State = std::variant<TwoSpinState, Spinor>;
  struct Entry {
    double weight;
    State state;
  };

  explicit Ensemble(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double total_weight() const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace slitspin
