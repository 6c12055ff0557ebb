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

#ifndef ULRC_BOUNDS_HPP
#define ULRC_BOUNDS_HPP

#include <optional>

#include "ulrc/locality.hpp"

namespace ulrc {

/// Singleton-type distance bound for codes where every symbol has locality
/// at most r and local distance delta.
std::int64_t classic_distance_bound(std::uint64_t n, std::uint64_t k, std::uint64_t r,
                                    std::uint32_t delta);

/// Dimension cap of a locality profile: the sum of the per-locality caps.
std::uint64_t profile_dimension_bound(const LocalityProfile& profile);

struct ProfileDistance {
    std::int64_t value;
    std::uint32_t r;  // the saturating locality level used by the bound
};

/// Distance bound for a fixed locality profile. Throws ConstraintError when
/// k exceeds profile_dimension_bound (no code with this profile and
/// dimension exists).
ProfileDistance profile_distance_bound(const LocalityProfile& profile, std::uint64_t k);

/// The delta = 2 specialization, evaluated through its own literal formula
/// (deliberately not a wrapper around profile_distance_bound, so the two
/// act as cross-checks). Throws unless profile.delta == 2.
std::int64_t delta2_profile_distance_bound(const LocalityProfile& profile, std::uint64_t k);

/// Dimension cap of a locality requirement: exact rational and its floor.
struct RequirementDimension {
    Rational exact;
    std::int64_t floor;
};
RequirementDimension requirement_dimension_bound(const LocalityRequirement& req);

struct RequirementDistance {
    std::int64_t value;
    std::uint32_t r;
    std::int64_t loose;  // same expression with r forced to the maximum locality
};

/// Closed-form distance bound for a locality requirement, plus the loose
/// variant that skips computing r.
RequirementDistance requirement_distance_bound(const LocalityRequirement& req, std::uint64_t k);

struct ExhaustiveRequirementBounds {
    std::uint64_t dim_bound;
    std::vector<std::uint64_t> dim_witness;
    std::optional<std::int64_t> dist_bound;       // present when k was supplied
    std::vector<std::uint64_t> dist_witness;
};

/// Maximizes the profile bounds over every profile satisfying the
/// requirement. Witnesses are the first maximizers in enumeration order.
/// With k supplied, profiles whose dimension cap is below k are skipped; if
/// none remains, the requirement is unsatisfiable at dimension k
/// (ConstraintError).
ExhaustiveRequirementBounds requirement_exhaustive_bounds(
    const LocalityRequirement& req, std::optional<std::uint64_t> k,
    std::uint64_t cap = kDefaultProfileEnumerationCap);

struct TwoLocalityBounds {
    std::int64_t corollary;                 // two-case restatement of the closed form
    std::optional<std::int64_t> tightened;  // ceil-based variant, when the condition holds
    bool condition_held;
};

/// Bounds for requirements with exactly two locality values j1 < j2. The
/// tightened variant applies when the j1 remainder is 0 or at least delta-1.
TwoLocalityBounds two_locality_distance_bounds(std::uint64_t j1, std::uint64_t n1,
                                               std::uint64_t j2, std::uint64_t n2,
                                               std::uint32_t delta, std::uint64_t k);

/// Everything the `bounds` CLI surface reports for one input.
struct BoundReport {
    bool is_requirement = true;
    std::uint32_t delta = 2;
    std::vector<std::uint64_t> counts;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> k;

    std::optional<std::int64_t> d_classic;  // at r = declared max locality

    // profile inputs
    std::optional<std::uint64_t> k_ub_prf;
    std::optional<ProfileDistance> d_ub_prf;
    std::optional<std::int64_t> d_ub_prf_delta2;

    // requirement inputs
    std::optional<RequirementDimension> k_ub_req;
    std::optional<std::uint64_t> k_ub_req_prf;
    std::vector<std::uint64_t> k_ub_req_prf_witness;
    std::optional<std::int64_t> d_ub_req_prf;
    std::vector<std::uint64_t> d_ub_req_prf_witness;
    std::optional<RequirementDistance> d_ub_req;
    std::optional<TwoLocalityBounds> two_locality;

    /// k exceeds the applicable dimension cap: no code exists, distance
    /// fields stay empty.
    bool dimension_infeasible = false;
    /// Some populated distance value is non-positive: no code exists.
    bool distance_infeasible = false;
};

BoundReport make_bound_report(const LocalityRequirement& req, std::optional<std::uint64_t> k,
                              std::uint64_t cap = kDefaultProfileEnumerationCap);
BoundReport make_bound_report(const LocalityProfile& profile, std::optional<std::uint64_t> k);

}  // namespace ulrc

#endif
