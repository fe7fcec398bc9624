// Copyright 2026 The adaptstab Authors
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
#include <random>

namespace adaptstab {

/// Seeded generator passed explicitly wherever randomness is needed. split()
/// derives an independent child stream, so parallel workers can each own one
/// without sharing state.
class Rng {
   public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    bool coin() { return (engine_() >> 63U) != 0; }
    /// Uniform double in [0, 1).
    double uniform();
    double normal();

    Rng split();

    std::mt19937_64& engine() noexcept { return engine_; }

   private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace adaptstab
