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

#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "runner.hpp"
#include "slitspin/fringe.hpp"
#include "slitspin/geometry.hpp"
#include "slitspin/oracle.hpp"
#include "slitspin/qstate.hpp"
#include "slitspin/rotor.hpp"

namespace slitspin::cli {
namespace {

using Rng = std::mt19937_64;
using Complex = std::complex<double>;

/// Model-side perturbation used when a law is mutated.
constexpr double kFault = 1e-6;

struct Law {
  std::string name;
  double tolerance;
  std::size_t trials;
  /// Returns the worst observed error. `mutated` injects a fault.
  std::function<double(Rng&, bool mutated)> measure;
};

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

RotationAngle angle(double radians) { return RotationAngle{radians}; }

TwoSpinState random_uv_state(Rng& rng) {
  const Complex c_u(uniform(rng, -1, 1), uniform(rng, -1, 1));
  const Complex c_v(uniform(rng, -1, 1), uniform(rng, -1, 1));
  return from_uv(c_u, c_v);
}

double two_slit_phase(double separation, double wavelength, double theta) {
  return 2.0 * std::numbers::pi * separation / wavelength * std::sin(theta);
}

/// <target| sum_k (P_k (x) I)|psi><psi|(P_k (x) I) |target> with explicit 4x4 matrices.
double density_matrix_transmission(const TwoSpinState& psi, const TwoSpinState& target) {
  using Matrix4 = std::array<std::array<Complex, 4>, 4>;
  Matrix4 rho{};
  for (std::size_t outcome = 0; outcome < 2; ++outcome) {
    Matrix4 projector{};
    for (std::size_t other = 0; other < 2; ++other) {
      projector[2 * outcome + other][2 * outcome + other] = 1.0;
    }
    std::array<Complex, 4> projected{};
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) projected[r] += projector[r][c] * psi[c];
    }
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) rho[r][c] += projected[r] * std::conj(projected[c]);
    }
  }
  Complex value = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) value += std::conj(target[r]) * rho[r][c] * target[c];
  }
  return value.real();
}

std::vector<Law> make_laws() {
  std::vector<Law> laws;

  for (const bool singlet : {false, true}) {
    laws.push_back({singlet ? "rotational invariance v" : "rotational invariance u", 1e-12, 10000,
                    [singlet](Rng& rng, bool mutated) {
                      const TwoSpinState s = singlet ? basis_v() : basis_u();
                      double worst = 0.0;
                      for (int k = 0; k < 10000; ++k) {
                        const double a = uniform(rng, -10, 10);
                        const PairRotation r{angle(a), angle(a + (mutated ? kFault : 0.0))};
                        worst = std::max(worst, apply_pair(r, s).max_abs_diff(s));
                      }
                      return worst;
                    }});
  }

  for (const bool singlet : {false, true}) {
    laws.push_back(
        {singlet ? "pair action on v" : "pair action on u", 1e-12, 10000,
         [singlet](Rng& rng, bool mutated) {
           double worst = 0.0;
           for (int k = 0; k < 10000; ++k) {
             const double a = uniform(rng, -10, 10);
             const double b = uniform(rng, -10, 10);
             const TwoSpinState s = singlet ? basis_v() : basis_u();
             const auto parts =
                 decompose_uv(apply_pair({angle(a), angle(b + (mutated ? kFault : 0.0))}, s));
             const double d = b - a;
             const double want_u = singlet ? std::sin(d) : std::cos(d);
             const double want_v = singlet ? std::cos(d) : -std::sin(d);
             worst = std::max({worst, std::abs(parts.c_u - want_u), std::abs(parts.c_v - want_v),
                               parts.residual_norm});
           }
           return worst;
         }});
  }

  laws.push_back({"single-sided rotation termwise", 1e-12, 1000, [](Rng& rng, bool mutated) {
                    double worst = 0.0;
                    const double r = 1.0 / std::sqrt(2.0);
                    for (int k = 0; k < 1000; ++k) {
                      const double a = uniform(rng, -10, 10);
                      const TwoSpinState out =
                          apply_pair({angle(0.0), angle(a + (mutated ? kFault : 0.0))}, basis_u());
                      const TwoSpinState want{{std::cos(a) * r, -std::sin(a) * r,
                                               std::sin(a) * r, std::cos(a) * r}};
                      worst = std::max(worst, out.max_abs_diff(want));
                    }
                    return worst;
                  }});

  laws.push_back({"pair composition", 1e-12, 10000, [](Rng& rng, bool mutated) {
                    double worst = 0.0;
                    for (int k = 0; k < 10000; ++k) {
                      const double a = uniform(rng, -10, 10);
                      const double b = uniform(rng, -10, 10);
                      const double c = uniform(rng, -10, 10);
                      const TwoSpinState out = compose_pair_state(
                          pair_state(b - a), angle(b), angle(c + (mutated ? kFault : 0.0)));
                      worst = std::max(worst, out.max_abs_diff(pair_state(c - a)));
                    }
                    return worst;
                  }});

  laws.push_back({"group action", 1e-12, 10000, [](Rng& rng, bool mutated) {
                    double worst = 0.0;
                    for (int k = 0; k < 10000; ++k) {
                      const TwoSpinState s = random_uv_state(rng);
                      const double a1 = uniform(rng, -10, 10), b1 = uniform(rng, -10, 10);
                      const double a2 = uniform(rng, -10, 10), b2 = uniform(rng, -10, 10);
                      const TwoSpinState twice =
                          apply_pair({angle(a1), angle(b1)}, apply_pair({angle(a2), angle(b2)}, s));
                      const TwoSpinState once = apply_pair(
                          {angle(a1 + a2), angle(b1 + b2 + (mutated ? kFault : 0.0))}, s);
                      worst = std::max(worst, twice.max_abs_diff(once));
                    }
                    return worst;
                  }});

  laws.push_back({"reduction law", 1e-12, 10000, [](Rng& rng, bool mutated) {
                    double worst = 0.0;
                    for (int k = 0; k < 10000; ++k) {
                      const TwoSpinState s = random_uv_state(rng);
                      const PairRotation r{angle(uniform(rng, -10, 10)), angle(uniform(rng, -10, 10))};
                      PairRotation reduced = r.reduced();
                      if (mutated) reduced.beta = reduced.beta + angle(kFault);
                      worst = std::max(worst, apply_pair(r, s).max_abs_diff(apply_pair(reduced, s)));
                    }
                    return worst;
                  }});

  laws.push_back({"norm preservation", 1e-12, 10000, [](Rng& rng, bool mutated) {
                    double worst = 0.0;
                    for (int k = 0; k < 10000; ++k) {
                      TwoSpinState s;
                      for (auto& a : s.amplitudes) a = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
                      TwoSpinState out =
                          apply_pair({angle(uniform(rng, -10, 10)), angle(uniform(rng, -10, 10))}, s);
                      if (mutated) out *= 1.0 + kFault;
                      worst = std::max(worst, std::abs(out.norm() - s.norm()));
                    }
                    return worst;
                  }});

  laws.push_back({"two-slit oracle equivalence", 1e-9, 10000, [](Rng&, bool mutated) {
                    const double d = 2e-6, wavelength = 500e-9;
                    const SlitGeometry g({-d / 2, d / 2}, wavelength, 1.0);
                    std::vector<double> grid(10000);
                    for (std::size_t k = 0; k < grid.size(); ++k) {
                      grid[k] = -0.3 + 0.6 * static_cast<double>(k) / 9999.0;
                    }
                    const FringeProfile profile = intensity_profile(g, grid, ModelOptions{});
                    double worst = 0.0;
                    for (const auto& s : profile.samples()) {
                      const double c = std::cos(0.5 * two_slit_phase(d, wavelength, s.theta));
                      const double model = s.intensity + (mutated ? kFault : 0.0);
                      worst = std::max(worst, std::abs(model - c * c));
                    }
                    return worst;
                  }});

  // Error is the worst distance, in grid steps, between a profile maximum
  // and the nearest predicted d sin(theta) = m lambda / 2 position.
  laws.push_back({"paper-convention maxima", 1.0, 10000, [](Rng&, bool mutated) {
                    const double d = 2e-6, wavelength = 500e-9, lo = -0.3, hi = 0.3;
                    const SlitGeometry g({-d / 2, d / 2}, wavelength, 1.0);
                    const std::size_t n = 10000;
                    const double step = (hi - lo) / static_cast<double>(n - 1);
                    std::vector<double> grid(n);
                    for (std::size_t k = 0; k < n; ++k) grid[k] = lo + step * static_cast<double>(k);
                    ModelOptions options;
                    options.convention = mutated ? PhaseConvention::kHalf : PhaseConvention::kPaper;
                    const FringeProfile profile = intensity_profile(g, grid, options);
                    const auto samples = profile.samples();
                    std::vector<double> predicted;
                    for (int m = -20; m <= 20; ++m) {
                      const double s = m * wavelength / (2 * d);
                      if (std::abs(s) < 1 && std::asin(s) > lo && std::asin(s) < hi) {
                        predicted.push_back(std::asin(s));
                      }
                    }
                    std::vector<double> found;
                    for (std::size_t k = 1; k + 1 < n; ++k) {
                      if (samples[k].intensity >= samples[k - 1].intensity &&
                          samples[k].intensity > samples[k + 1].intensity) {
                        found.push_back(samples[k].theta);
                      }
                    }
                    if (found.size() != predicted.size()) return std::numeric_limits<double>::infinity();
                    double worst = 0.0;
                    for (std::size_t k = 0; k < found.size(); ++k) {
                      worst = std::max(worst, std::abs(found[k] - predicted[k]) / step);
                    }
                    return worst;
                  }});

  laws.push_back({"pairwise identity N=2..6", 1e-9, 50000, [](Rng& rng, bool mutated) {
                    double worst = 0.0;
                    for (std::size_t n = 2; n <= 6; ++n) {
                      for (int k = 0; k < 10000; ++k) {
                        std::vector<double> phases(n);
                        for (auto& p : phases) p = uniform(rng, -20, 20);
                        const auto check = oracle::pairwise_identity_check(oracle::WavePhaseSet(phases));
                        worst = std::max(worst, check.diff + (mutated ? kFault : 0.0));
                      }
                    }
                    return worst;
                  }});

  laws.push_back({"multi-slit vs oracle", 1e-9, 1000, [](Rng& rng, bool mutated) {
                    double worst = 0.0;
                    for (int k = 0; k < 1000; ++k) {
                      const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
                      std::vector<double> positions(n);
                      double x = uniform(rng, -1e-5, 0);
                      for (auto& a : positions) {
                        a = x;
                        x += uniform(rng, 1e-7, 5e-6);
                      }
                      const double wavelength = uniform(rng, 3e-7, 8e-7);
                      const double theta = uniform(rng, -1.2, 1.2);
                      const SlitGeometry g(positions, wavelength, uniform(rng, 0.1, 5.0));
                      std::vector<double> phases;
                      for (double a : positions) {
                        phases.push_back(2 * std::numbers::pi * a * std::sin(theta) / wavelength);
                      }
                      const double want = oracle::classical_intensity(oracle::WavePhaseSet(phases));
                      const double model = multi_slit_intensity(g, ScreenPoint(theta), PhaseConvention::kHalf);
                      worst = std::max(worst, std::abs(model + (mutated ? kFault : 0.0) - want));
                    }
                    return worst;
                  }});

  laws.push_back({"detection flatness", 1e-12, 6, [](Rng&, bool mutated) {
                    std::vector<double> grid(2001);
                    for (std::size_t k = 0; k < grid.size(); ++k) {
                      grid[k] = -1.2 + 2.4 * static_cast<double>(k) / 2000.0;
                    }
                    const std::vector<std::vector<std::size_t>> sets = {{1}, {2}, {1, 2}};
                    double worst = 0.0;
                    for (std::size_t n : {2, 3}) {
                      const SlitGeometry g = SlitGeometry::uniform(n, 2e-6, 500e-9, 1.0);
                      for (const auto& set : sets) {
                        const std::vector<std::size_t> detection =
                            mutated ? std::vector<std::size_t>{} : set;
                        const auto profile = intensity_profile(g, grid, ModelOptions{}, detection);
                        worst = std::max(worst, profile.max_intensity() - profile.min_intensity());
                      }
                    }
                    return worst;
                  }});

  laws.push_back({"measurement ensemble", 1e-12, 1000, [](Rng& rng, bool mutated) {
                    double worst = 0.0;
                    for (int k = 0; k < 1000; ++k) {
                      const double phi = uniform(rng, -10, 10);
                      const TwoSpinState psi = pair_state(phi);
                      const Ensemble e = measure_factor(psi, 1, 0.0);
                      double weight_error = e.size() == 2 ? 0.0 : 1.0;
                      for (const auto& entry : e.entries()) {
                        weight_error = std::max(weight_error, std::abs(entry.weight - 0.5));
                      }
                      const double model =
                          ensemble_transmission(e, TransmittedChoice::kU) + (mutated ? kFault : 0.0);
                      const double c = std::cos(phi);
                      const double brute = density_matrix_transmission(psi, basis_u());
                      worst = std::max({worst, weight_error, std::abs(model - c * c / 2),
                                        std::abs(model - brute)});
                    }
                    return worst;
                  }});

  laws.push_back({"transmitted/absorbed symmetry", 1e-12, 10000, [](Rng&, bool mutated) {
                    const SlitGeometry g = SlitGeometry::uniform(2, 2e-6, 500e-9, 1.0);
                    std::vector<double> grid(10000);
                    for (std::size_t k = 0; k < grid.size(); ++k) {
                      grid[k] = -1.5 + 3.0 * static_cast<double>(k) / 9999.0;
                    }
                    double worst = 0.0;
                    for (auto convention : {PhaseConvention::kHalf, PhaseConvention::kPaper}) {
                      ModelOptions u_options;
                      u_options.convention = convention;
                      ModelOptions v_options = u_options;
                      v_options.transmitted = TransmittedChoice::kV;
                      const FringeProfile u_profile = intensity_profile(g, grid, u_options);
                      const FringeProfile v_profile = intensity_profile(g, grid, v_options);
                      const auto u = u_profile.samples();
                      const auto v = v_profile.samples();
                      for (std::size_t k = 0; k < u.size(); ++k) {
                        const double sum = u[k].intensity + v[k].intensity + (mutated ? kFault : 0.0);
                        worst = std::max(worst, std::abs(sum - 1.0));
                      }
                    }
                    return worst;
                  }});

  // Relative to max(1, |phi_ik|): the identity is exact in real arithmetic.
  laws.push_back({"phase additivity", 1e-13, 1000, [](Rng& rng, bool mutated) {
                    const SlitGeometry g({-3e-6, -1e-6, 0.5e-6, 4e-6}, 633e-9, 1.0);
                    double worst = 0.0;
                    for (int k = 0; k < 1000; ++k) {
                      const ScreenPoint p(uniform(rng, -1.5, 1.5));
                      for (std::size_t i = 1; i <= 4; ++i) {
                        for (std::size_t j = 1; j <= 4; ++j) {
                          for (std::size_t l = 1; l <= 4; ++l) {
                            if (i == j || j == l || i == l) continue;
                            const double direct = pair_phase(g, p, i, l) + (mutated ? kFault : 0.0);
                            const double chained = pair_phase(g, p, i, j) + pair_phase(g, p, j, l);
                            worst = std::max(worst, std::abs(direct - chained) /
                                                        std::max(1.0, std::abs(direct)));
                          }
                        }
                      }
                    }
                    return worst;
                  }});

  laws.push_back({"phase antisymmetry", 0.0, 1000, [](Rng& rng, bool mutated) {
                    const SlitGeometry g({-3e-6, -1e-6, 0.5e-6, 4e-6}, 633e-9, 1.0);
                    double worst = 0.0;
                    for (int k = 0; k < 1000; ++k) {
                      const ScreenPoint p(uniform(rng, -1.5, 1.5));
                      for (std::size_t i = 1; i <= 4; ++i) {
                        for (std::size_t j = i + 1; j <= 4; ++j) {
                          const double sum =
                              pair_phase(g, p, i, j) + pair_phase(g, p, j, i) + (mutated ? kFault : 0.0);
                          worst = std::max(worst, std::abs(sum));
                        }
                      }
                    }
                    return worst;
                  }});

  return laws;
}

std::string short_number(double x) {
  std::ostringstream out;
  out << std::setprecision(3) << x;
  return out.str();
}

}  // namespace

std::vector<std::string> law_names() {
  std::vector<std::string> names;
  for (const auto& law : make_laws()) names.push_back(law.name);
  return names;
}

std::vector<LawResult> run_verify(const VerifyOptions& options) {
  const std::vector<Law> laws = make_laws();
  if (options.mutate &&
      std::none_of(laws.begin(), laws.end(), [&](const Law& l) { return l.name == *options.mutate; })) {
    throw std::invalid_argument("unknown law '" + *options.mutate + "'");
  }
  std::vector<LawResult> results;
  for (std::size_t k = 0; k < laws.size(); ++k) {
    const Law& law = laws[k];
    Rng rng(options.seed + k);
    const bool mutated = options.mutate && *options.mutate == law.name;
    const double error = law.measure(rng, mutated);
    results.push_back({law.name, error, law.tolerance, law.trials, error <= law.tolerance});
  }
  return results;
}

std::string render_report(const std::vector<LawResult>& results) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ')
        << "max_error=" << short_number(r.max_error) << "  tolerance=" << short_number(r.tolerance)
        << "  trials=" << r.trials << "\n";
  }
  const auto failed = std::count_if(results.begin(), results.end(), [](const LawResult& r) { return !r.passed; });
  out << (failed == 0 ? "all " + std::to_string(results.size()) + " laws hold\n"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) + " laws violated\n");
  return out.str();
}

bool all_passed(const std::vector<LawResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.passed; });
}

}  // namespace slitspin::cli
