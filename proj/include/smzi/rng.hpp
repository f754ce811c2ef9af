// Copyright 2026 The smzi Authors
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

#include <cstdint>

namespace smzi {

/// splitmix64 step; also used to derive sub-seeds deterministically.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Small self-contained generator (xoshiro256++) so that streams are
/// bit-identical across platforms and standard-library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double next_unit();

    /// Uniform in (-pi, pi].
    double next_angle();

    /// Standard normal via Box-Muller (deterministic, caches the pair).
    double next_gaussian();

  private:
    std::uint64_t s_[4];
    double cached_gaussian_ = 0.0;
    bool has_cached_ = false;
};

} // namespace smzi
