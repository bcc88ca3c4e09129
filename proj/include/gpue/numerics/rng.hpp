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

#ifndef GPUE_NUMERICS_RNG_HPP_
#define GPUE_NUMERICS_RNG_HPP_

#include <cstdint>
#include <random>

namespace gpue::numerics {

// A reproducible random stream keyed by (seed, stream_id). Streams are values:
// copy one to fork it, give each worker its own stream_id to split.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  double standard_normal() { return normal_(engine_); }
  // Uniform on [0, 1).
  double uniform() { return uniform_(engine_); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
};

// mean + stddev * z with z standard normal. stddev = 0 returns mean exactly.
double gaussian_draw(RngStream& rng, double mean, double stddev);

}  // namespace gpue::numerics

#endif  // GPUE_NUMERICS_RNG_HPP_
