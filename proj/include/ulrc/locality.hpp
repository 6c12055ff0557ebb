/*
 * Copyright 2026 The ulrc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ULRC_LOCALITY_HPP
#define ULRC_LOCALITY_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ulrc/rational.hpp"

namespace ulrc {

/// Per-symbol locality limits: counts[j-1] symbols may have locality up to j,
/// shared local distance delta. The last count must be nonzero.
struct LocalityRequirement {
    std::uint32_t delta = 2;
    std::vector<std::uint64_t> counts;  // (n_1, ..., n_{r*})

    std::uint64_t length() const;    // n = sum of counts
    std::size_t max_locality() const { return counts.size(); }  // r*
    void validate() const;
};

/// Exact per-symbol localities of a concrete code, aggregated as counts of
/// symbols with locality exactly j. Trailing zeros are tolerated on input
/// and ignored by the bound machinery.
struct LocalityProfile {
    std::uint32_t delta = 2;
    std::vector<std::uint64_t> counts;

    std::uint64_t length() const;
    std::size_t effective_max_locality() const;  // index of last nonzero count
    void validate() const;
};

/// Quantities derived from one (count, locality) pair: the count splits as
/// full_groups*(j+delta-1) + remainder with remainder < j+delta-1, ratio is
/// the exact count/(j+delta-1), and dim_cap is the per-locality dimension
/// contribution (the two-case formula on the remainder).
struct DerivedParams {
    std::uint64_t full_groups;  // floor(ratio)
    std::uint64_t remainder;
    Rational ratio;
    std::uint64_t dim_cap;
};

DerivedParams derive_params(std::uint64_t count, std::uint64_t locality, std::uint32_t delta);

/// Partial-sum dominance test: the profile satisfies the requirement iff
/// every prefix of the profile counts at least matches the requirement's.
bool profile_satisfies_requirement(const LocalityProfile& profile, const LocalityRequirement& req);

inline constexpr std::uint64_t kDefaultProfileEnumerationCap = 20;

/// Visits every length-r* count vector with the dominance property and total
/// n, in the order that decrements the first coordinate last (first emitted
/// vector piles everything on locality 1).
void for_each_satisfying_profile(const LocalityRequirement& req,
                                 const std::function<void(const LocalityProfile&)>& visit,
                                 std::uint64_t cap = kDefaultProfileEnumerationCap);

std::vector<LocalityProfile> enumerate_profiles(const LocalityRequirement& req,
                                                std::uint64_t cap = kDefaultProfileEnumerationCap);

}  // namespace ulrc

#endif
