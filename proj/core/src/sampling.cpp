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

#include "itemnet/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"
#include "itemnet/normal.hpp"
#include "itemnet/random.hpp"

namespace itemnet {

void SamplingParams::validate() const {
    if (!(confidence > 0.0 && confidence < 1.0))
        throw Error(Errc::OutOfRange, "confidence must lie in (0, 1)");
    if (!(margin_of_error > 0.0))
        throw Error(Errc::OutOfRange, "margin of error must be positive");
}

std::size_t SamplePlan::total_drawn() const {
    std::size_t total = 0;
    for (const auto &[genre, stratum] : per_genre)
        total += stratum.sample_size;
    return total;
}

double z_critical(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0))
        throw Error(Errc::OutOfRange, "confidence must lie in (0, 1)");
    return normal_quantile(0.5 + 0.5 * confidence);
}

std::size_t sample_size(std::size_t population, double variance, double confidence, double margin_of_error) {
    if (population < 1)
        throw Error(Errc::OutOfRange, "population must be at least 1");
    if (!(variance >= 0.0))
        throw Error(Errc::OutOfRange, "variance must be non-negative");
    if (!(margin_of_error > 0.0))
        throw Error(Errc::OutOfRange, "margin of error must be positive");
    const double z = z_critical(confidence);
    const double numerator = z * z * variance * static_cast<double>(population);
    if (numerator == 0.0)
        return 0;
    const double denominator =
        static_cast<double>(population - 1) * margin_of_error * margin_of_error + z * z * variance;
    const double exact = numerator / denominator;
    // Values within rounding noise of an integer must not round up past it.
    const double n = std::ceil(exact - 1e-9 * std::max(1.0, exact));
    return static_cast<std::size_t>(std::clamp(n, 0.0, static_cast<double>(population)));
}

std::map<std::string, std::size_t> filter_genres(const Catalog &catalog, const SamplingParams &params) {
    std::map<std::string, std::size_t> counts;
    for (const CatalogEntry &entry : catalog)
        for (const auto &genre : entry.genres)
            ++counts[genre];
    std::erase_if(counts, [&](const auto &kv) {
        return kv.second <= params.min_genre_count || params.excluded_genres.count(kv.first) > 0;
    });
    return counts;
}

namespace {

double sample_variance(const std::vector<double> &values) {
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    return ss / (n - 1.0);
}

} // namespace

SampleResult stratified_sample(const Catalog &catalog, const SamplingParams &params) {
    params.validate();
    SampleResult result;
    const auto strata = filter_genres(catalog, params);
    std::vector<bool> chosen(catalog.size(), false);

    for (const auto &[genre, occurrences] : strata) {
        std::vector<std::size_t> frame;
        std::vector<double> scores;
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            const CatalogEntry &entry = catalog[i];
            if (entry.score && entry.genres.count(genre) > 0) {
                frame.push_back(i);
                scores.push_back(*entry.score);
            }
        }
        StratumPlan stratum;
        stratum.population = frame.size();
        if (frame.empty()) {
            result.warnings.push_back("stratum '" + genre + "' has no scored members; skipped");
            result.plan.per_genre.emplace(genre, stratum);
            continue;
        }
        if (frame.size() == 1) {
            stratum.degenerate = true;
            stratum.variance = 0.0;
            stratum.sample_size = 1;
            result.warnings.push_back("DegenerateStratum: '" + genre + "' has a single member; taken with S2 = 0");
        } else {
            stratum.variance = sample_variance(scores);
            stratum.sample_size =
                sample_size(frame.size(), stratum.variance, params.confidence, params.margin_of_error);
        }
        Rng rng(substream_seed(params.seed, fnv1a(genre)));
        // Partial Fisher-Yates: the first n slots become the sample.
        for (std::size_t k = 0; k < stratum.sample_size; ++k) {
            auto j = k + static_cast<std::size_t>(uniform_below(rng, frame.size() - k));
            std::swap(frame[k], frame[j]);
            chosen[frame[k]] = true;
        }
        result.plan.per_genre.emplace(genre, stratum);
    }
    for (std::size_t i = 0; i < catalog.size(); ++i)
        if (chosen[i])
            result.items.push_back(catalog[i].item_id);
    result.plan.union_size = result.items.size();
    return result;
}

void write_sample_plan(std::ostream &out, const SamplePlan &plan) {
    std::vector<std::string> row{"genre", "N", "S2", "n"};
    write_delimited_row(out, row);
    for (const auto &[genre, stratum] : plan.per_genre) {
        row = {genre, std::to_string(stratum.population), format_real(stratum.variance),
               std::to_string(stratum.sample_size)};
        write_delimited_row(out, row);
    }
}

} // namespace itemnet
