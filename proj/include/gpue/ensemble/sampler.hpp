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

#ifndef GPUE_ENSEMBLE_SAMPLER_HPP_
#define GPUE_ENSEMBLE_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gpue/ensemble/gamma_shape.hpp"
#include "gpue/ensemble/matrix_algebra.hpp"
#include "gpue/numerics/rng.hpp"

namespace gpue::ensemble {

struct SamplerConfig {
  double sigma = 1.0;
  GammaShape shape;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  // Chunk k draws from RngStream(seed, k). Output depends on (seed, chunks)
  // only, never on threads.
  std::size_t chunks = 16;
  unsigned threads = 1;
};

// a, b ~ N(0, sigma^2/2); c, d ~ N(0, sigma^2/(2 cosh 2gamma)); the exact
// marginals of the Gaussian weight e^{-tr(H† H)/(2 sigma^2)} on this family.
MatrixABCD sample_matrix(const GammaShape& shape, double sigma, numerics::RngStream& rng);

// `count` raw spacings s = E+ - E- (units of sigma), concatenated in chunk
// order. Throws ValidationError for sigma <= 0, count == 0 or chunks == 0.
std::vector<double> sample_spacings(const SamplerConfig& config);

}  // namespace gpue::ensemble

#endif  // GPUE_ENSEMBLE_SAMPLER_HPP_
