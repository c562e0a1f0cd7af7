// Copyright 2026 The itemnet Authors.
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

#ifndef ITEMNET_RANDOM_HPP_
#define ITEMNET_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace itemnet {

/**
 * Reproducible randomness.
 *
 * All stochastic code draws from std::mt19937_64, whose output sequence is fixed by
 * the C++ standard. Distributions from <random> are implementation-defined, so the
 * helpers below map raw 64-bit draws to integers and reals themselves; results are
 * identical across standard libraries for the same seed.
 */
using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent substream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a over bytes.
constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Seed for substream `stream` of master seed `seed`.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix64(seed ^ mix64(stream));
}

/// Uniform integer in [0, bound) by rejection; bound must be positive.
std::uint64_t uniform_below(Rng &rng, std::uint64_t bound);

/// Uniform real in [0, 1) with 53 random bits.
inline double uniform_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform_unit(Rng &rng) { return uniform_unit(rng()); }

/// In-place Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle(std::vector<T> &values, Rng &rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace itemnet

#endif // ITEMNET_RANDOM_HPP_
