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

#ifndef ITEMNET_SAMPLING_HPP_
#define ITEMNET_SAMPLING_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "itemnet/ingest.hpp"

namespace itemnet {

struct SamplingParams {
    double confidence = 0.85;
    double margin_of_error = 0.2;
    std::size_t min_genre_count = 100;
    std::set<std::string> excluded_genres{"Hentai"};
    std::uint64_t seed = 0;

    /// Throws Error(OutOfRange) unless 0 < confidence < 1 and margin_of_error > 0.
    void validate() const;
};

struct StratumPlan {
    std::size_t population = 0; ///< N: stratum members with a score
    double variance = 0.0;      ///< S^2 of score, denominator N - 1
    std::size_t sample_size = 0;
    bool degenerate = false; ///< N == 1: S^2 undefined, the lone member is taken

    bool operator==(const StratumPlan &) const = default;
};

struct SamplePlan {
    std::map<std::string, StratumPlan> per_genre;
    std::size_t union_size = 0;

    std::size_t total_drawn() const;
};

/// Two-sided critical value: Phi(z) = 1 - (1 - confidence) / 2.
double z_critical(double confidence);

/**
 * Finite-population sample size for estimating a mean,
 *
 *   n = ceil( Z^2 S^2 N / ((N - 1) E^2 + Z^2 S^2) ),
 *
 * clamped to [0, N]. Throws Error(OutOfRange) if N < 1, S2 < 0, E <= 0 or the
 * confidence is outside (0, 1).
 */
std::size_t sample_size(std::size_t population, double variance, double confidence, double margin_of_error);

/// Genre -> occurrence count for genres occurring strictly more than
/// min_genre_count times, minus excluded genres. Items keep all their genres.
std::map<std::string, std::size_t> filter_genres(const Catalog &catalog, const SamplingParams &params);

struct SampleResult {
    SamplePlan plan;
    std::vector<std::string> items; ///< sampled item ids, in catalog order
    std::vector<std::string> warnings;
};

/**
 * Per-genre simple random sampling without replacement, then the union over
 * strata. Stratum frames hold the members with a score, in catalog order; each
 * stratum draws from its own mt19937_64 seeded from (seed, genre name).
 */
SampleResult stratified_sample(const Catalog &catalog, const SamplingParams &params);

/// Columns: genre, N, S2, n.
void write_sample_plan(std::ostream &out, const SamplePlan &plan);

} // namespace itemnet

#endif // ITEMNET_SAMPLING_HPP_
