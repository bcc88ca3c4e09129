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

#ifndef GPUE_XP_CONVERGENCE_HPP_
#define GPUE_XP_CONVERGENCE_HPP_

#include <functional>
#include <span>
#include <vector>

#include "gpue/xp/hamiltonians.hpp"

namespace gpue::xp {

enum class TrackBy {
  kSmallestAbsImag,  // H_PT: eigenvalues nearest the real axis
  kSmallestAbs,      // Hermitian families: eigenvalues nearest zero
};

struct ConvergenceReport {
  std::vector<int> sizes;
  std::vector<std::vector<Complex>> tracked;  // per size
  std::vector<double> drift;                  // per adjacent pair of sizes
  double spectral_scale = 1.0;                // max(1, max |tracked| at the last size)
  double tolerance = 1e-6;                    // relative Cauchy tolerance on the last drift
  bool converged = false;
};

// Full spectrum of the truncated operator at basis size N.
using SpectrumBuilder = std::function<std::vector<Complex>(int)>;

// Tracks the k eigenvalues selected by `track` at every size, and measures
// the drift between adjacent sizes as the largest distance under a greedy
// nearest-neighbour matching in the complex plane. converged means the last
// drift is below tolerance * spectral_scale. ValidationError unless sizes
// are strictly ascending, at least two, and k <= sizes.front().
ConvergenceReport convergence_ladder(const SpectrumBuilder& builder, std::span<const int> sizes, int k,
                                     TrackBy track, double tolerance = 1e-6);

// Spectrum builders for the ladder.
std::vector<Complex> hbk_ladder_spectrum(int n, ProductForm form = ProductForm::kNormalOrdered);
std::vector<Complex> hpt_ladder_spectrum(int n);
std::vector<Complex> okubo_ladder_spectrum(int n, const OkuboOptions& options = {});
// diag(1, 2, ..., N): a family whose low eigenvalues never move.
std::vector<Complex> diagonal_control_spectrum(int n);

}  // namespace gpue::xp

#endif  // GPUE_XP_CONVERGENCE_HPP_
