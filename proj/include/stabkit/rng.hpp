// Copyright 2026 The stabkit authors
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

#ifndef STABKIT_RNG_HPP
#define STABKIT_RNG_HPP

#include <cstdint>

namespace stabkit {

/// SplitMix64 finalizer. Stateless, platform-independent.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based random source for measurements. The bit consumed by the
/// k-th measurement of a run depends only on (seed, k), never on which
/// worker or schedule performs the measurement, so replays are exact.
struct CounterRng {
    uint64_t seed = 0;

    bool bit(uint64_t ordinal) const {
        return splitmix64(seed ^ splitmix64(ordinal ^ 0xd1b54a32d192ed03ULL)) & 1;
    }
};

/// Small sequential generator used for circuit generation. Deterministic
/// across platforms (unlike std::uniform_int_distribution).
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound) {
        return next() % bound;
    }

    /// Uniform double in [0, 1).
    double unit() {
        return (next() >> 11) * 0x1.0p-53;
    }

  private:
    uint64_t state_;
};

}  // namespace stabkit

#endif
