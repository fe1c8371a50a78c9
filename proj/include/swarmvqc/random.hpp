// Copyright 2026 The SwarmVQC Authors
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

/**
 * @file
 * Seeded random streams.
 *
 * Every stochastic step draws from its own engine, seeded by mixing a
 * master seed with a stream tag and indices through SplitMix64:
 *
 *     s = mix(master);  for each key k: s = mix(s ^ mix(k + golden))
 *
 * so a particle's draws in iteration k do not depend on how many other
 * particles were processed before it, and serial and threaded runs see
 * the same numbers. Uniform doubles use the top 53 bits of the engine
 * output, which keeps results identical across standard libraries.
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace swarmvqc {

using Engine = std::mt19937_64;

/// Stream tags. Values are part of the reproducibility contract.
enum class Stream : std::uint64_t {
    SwarmInit = 1,
    SwarmStep = 2,
    Shuffle = 3,
    Shots = 4,
    Synthetic = 5,
    AnsatzInit = 6,
};

[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

[[nodiscard]] constexpr std::uint64_t
derive_seed(std::uint64_t master, Stream stream,
            std::initializer_list<std::uint64_t> indices = {}) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ splitmix64(static_cast<std::uint64_t>(stream)));
    for (const auto index : indices) {
        s = splitmix64(s ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    }
    return s;
}

[[nodiscard]] inline Engine
make_engine(std::uint64_t master, Stream stream,
            std::initializer_list<std::uint64_t> indices = {}) {
    return Engine(derive_seed(master, stream, indices));
}

/// Uniform double in [0, 1).
[[nodiscard]] inline double uniform01(Engine &engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

[[nodiscard]] inline double uniform(Engine &engine, double lo, double hi) {
    return lo + (hi - lo) * uniform01(engine);
}

/// Uniform integer in [0, bound), bound > 0, via rejection.
[[nodiscard]] inline std::uint64_t uniform_index(Engine &engine,
                                                 std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw = engine();
    while (draw >= limit) {
        draw = engine();
    }
    return draw % bound;
}

/// Standard normal via Box-Muller (one value per call, second discarded).
[[nodiscard]] double standard_normal(Engine &engine);

/// Fisher-Yates with uniform_index, so the permutation is portable.
template <class RandomIt>
void portable_shuffle(RandomIt first, RandomIt last, Engine &engine) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
        const auto j = uniform_index(engine, i);
        std::swap(first[i - 1], first[j]);
    }
}

} // namespace swarmvqc
