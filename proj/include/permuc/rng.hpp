// Copyright 2026 The permuc authors
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

#pragma once

#include <cstdint>
#include <vector>

namespace permuc {

/// splitmix64 step; used both as a stream generator and to derive sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based seed split: children of a seed are indexed by a fixed
/// pass/instance counter, so adding a pass never shifts the randomness
/// consumed by earlier passes.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t s = seed ^ (0xa0761d6478bd642fULL * (counter + 1));
    return splitmix64(s);
}

/// Pass identifiers for sub_seed counters.
enum class pass_id : std::uint64_t {
    placement = 1,
    routing = 2,
    scheduling = 3,
    benchgen = 4,
};

inline std::uint64_t sub_seed(std::uint64_t seed, pass_id p) {
    return sub_seed(seed, static_cast<std::uint64_t>(p));
}

/// Small deterministic RNG with hand-rolled distributions. std::mt19937_64
/// is portable but the standard distributions are not; these are.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in the open interval (lo, hi).
    double uniform_open(double lo, double hi) {
        double u;
        do {
            u = uniform();
        } while (u == 0.0);
        return lo + u * (hi - lo);
    }

    /// Uniform integer in [0, n), n >= 1. Rejection-sampled, unbiased.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace permuc
