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

#include "gpue/numerics/rng.hpp"

#include "gpue/error.hpp"

namespace gpue::numerics {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32),
                    0x9e3779b9u};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(make_engine(seed, stream_id)) {}

double gaussian_draw(RngStream& rng, double mean, double stddev) {
  if (stddev < 0.0) throw ValidationError("gaussian_draw: stddev must be non-negative");
  const double z = rng.standard_normal();
  if (stddev == 0.0) return mean;
  return mean + stddev * z;
}

}  // namespace gpue::numerics
