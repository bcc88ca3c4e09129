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

#include "gpue/ensemble/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "gpue/error.hpp"

namespace gpue::ensemble {

MatrixABCD sample_matrix(const GammaShape& shape, double sigma, numerics::RngStream& rng) {
  const double sd_ab = sigma / std::sqrt(2.0);
  const double sd_cd = sigma / std::sqrt(2.0 * shape.cosh2g);
  MatrixABCD m;
  m.a = numerics::gaussian_draw(rng, 0.0, sd_ab);
  m.b = numerics::gaussian_draw(rng, 0.0, sd_ab);
  m.c = numerics::gaussian_draw(rng, 0.0, sd_cd);
  m.d = numerics::gaussian_draw(rng, 0.0, sd_cd);
  m.epsilon = shape.epsilon;
  return m;
}

std::vector<double> sample_spacings(const SamplerConfig& config) {
  if (!(config.sigma > 0.0)) throw ValidationError("sample_spacings: sigma must be positive");
  if (config.count == 0) throw ValidationError("sample_spacings: count must be at least 1");
  if (config.chunks == 0) throw ValidationError("sample_spacings: chunks must be at least 1");

  const std::size_t chunks = std::min(config.chunks, config.count);
  std::vector<std::size_t> offsets(chunks + 1, 0);
  for (std::size_t k = 0; k < chunks; ++k)
    offsets[k + 1] = offsets[k] + config.count / chunks + (k < config.count % chunks ? 1 : 0);

  std::vector<double> out(config.count);
  auto run_chunk = [&](std::size_t k) {
    numerics::RngStream rng(config.seed, k);
    for (std::size_t i = offsets[k]; i < offsets[k + 1]; ++i)
      out[i] = spacing(eigenvalues2(sample_matrix(config.shape, config.sigma, rng)));
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    for (std::size_t k = 0; k < chunks; ++k) run_chunk(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t k = next++; k < chunks; k = next++) run_chunk(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace gpue::ensemble
