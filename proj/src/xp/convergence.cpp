// Copyright 2026 The gpue-lab Authors.
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

#include "gpue/xp/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpue/error.hpp"

namespace gpue::xp {

namespace {

// Ties in the selection key (such as +-lambda pairs) are resolved by real
// part, then imaginary part, after rounding the key to a 1e-10 relative grid.
std::vector<Complex> select(std::vector<Complex> spectrum, int k, TrackBy track) {
  auto key = [track](const Complex& z) { return track == TrackBy::kSmallestAbsImag ? std::abs(z.imag()) : std::abs(z); };
  double top = 1.0;
  for (const auto& z : spectrum) top = std::max(top, key(z));
  const double quantum = 1e-10 * top;
  std::stable_sort(spectrum.begin(), spectrum.end(), [&](const Complex& x, const Complex& y) {
    const double kx = std::round(key(x) / quantum), ky = std::round(key(y) / quantum);
    if (kx != ky) return kx < ky;
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  spectrum.resize(static_cast<std::size_t>(k));
  std::sort(spectrum.begin(), spectrum.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return spectrum;
}

double greedy_match_drift(const std::vector<Complex>& from, const std::vector<Complex>& to) {
  std::vector<bool> used(to.size(), false);
  double worst = 0.0;
  for (const auto& z : from) {
    std::size_t best = to.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(z - to[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best < to.size()) used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

}  // namespace

ConvergenceReport convergence_ladder(const SpectrumBuilder& builder, std::span<const int> sizes, int k,
                                     TrackBy track, double tolerance) {
  if (sizes.size() < 2) throw ValidationError("convergence_ladder: need at least two sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw ValidationError("convergence_ladder: sizes must be strictly ascending");
  if (k < 1 || k > sizes.front()) throw ValidationError("convergence_ladder: need 1 <= k <= smallest size");

  ConvergenceReport report;
  report.sizes.assign(sizes.begin(), sizes.end());
  report.tolerance = tolerance;
  for (int n : sizes) {
    auto spectrum = builder(n);
    if (spectrum.size() < static_cast<std::size_t>(k))
      throw ValidationError("convergence_ladder: builder returned fewer than k eigenvalues");
    report.tracked.push_back(select(std::move(spectrum), k, track));
  }
  for (std::size_t j = 0; j + 1 < report.tracked.size(); ++j)
    report.drift.push_back(greedy_match_drift(report.tracked[j], report.tracked[j + 1]));

  double scale = 1.0;
  for (const auto& z : report.tracked.back()) scale = std::max(scale, std::abs(z));
  report.spectral_scale = scale;
  report.converged = report.drift.back() < tolerance * scale;
  return report;
}

std::vector<Complex> hbk_ladder_spectrum(int n, ProductForm form) {
  return hermitian_part_spectrum(build_hbk(n, form));
}

std::vector<Complex> hpt_ladder_spectrum(int n) { return hpt_spectrum(build_hpt(n)); }

std::vector<Complex> okubo_ladder_spectrum(int n, const OkuboOptions& options) {
  const int side = okubo_side_for_size(n);
  return hermitian_part_spectrum(build_okubo(side, side, options));
}

std::vector<Complex> diagonal_control_spectrum(int n) {
  std::vector<Complex> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.emplace_back(static_cast<double>(i), 0.0);
  return out;
}

}  // namespace gpue::xp
