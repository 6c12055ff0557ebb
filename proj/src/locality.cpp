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

#include "ulrc/locality.hpp"

#include <numeric>

#include "ulrc/errors.hpp"

namespace ulrc {

std::uint64_t LocalityRequirement::length() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t(0));
}

void LocalityRequirement::validate() const {
    if (delta < 2) throw ConstraintError("delta must be at least 2");
    if (counts.empty() || counts.back() == 0)
        throw ConstraintError("requirement must end with a nonzero count");
}

std::uint64_t LocalityProfile::length() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t(0));
}

std::size_t LocalityProfile::effective_max_locality() const {
    for (std::size_t j = counts.size(); j-- > 0;)
        if (counts[j] != 0) return j + 1;
    return 0;
}

void LocalityProfile::validate() const {
    if (delta < 2) throw ConstraintError("delta must be at least 2");
    if (effective_max_locality() == 0) throw ConstraintError("profile has no symbols");
}

DerivedParams derive_params(std::uint64_t count, std::uint64_t locality, std::uint32_t delta) {
    if (locality < 1) throw ConstraintError("locality must be at least 1");
    if (delta < 2) throw ConstraintError("delta must be at least 2");
    const std::uint64_t width = locality + delta - 1;
    DerivedParams d;
    d.full_groups = count / width;
    d.remainder = count % width;
    d.ratio = Rational(std::int64_t(count), std::int64_t(width));
    if (d.remainder <= delta - 2) {
        d.dim_cap = d.full_groups * locality;
    } else {
        d.dim_cap = count - std::uint64_t(d.ratio.ceil()) * (delta - 1);
    }
    return d;
}

bool profile_satisfies_requirement(const LocalityProfile& profile,
                                   const LocalityRequirement& req) {
    req.validate();
    profile.validate();
    if (profile.delta != req.delta) throw ConstraintError("delta mismatch");
    if (profile.length() != req.length()) throw ConstraintError("code length mismatch");
    std::uint64_t prof_prefix = 0, req_prefix = 0;
    for (std::size_t j = 0; j < req.counts.size(); ++j) {
        if (j < profile.counts.size()) prof_prefix += profile.counts[j];
        req_prefix += req.counts[j];
        if (prof_prefix < req_prefix) return false;
    }
    return true;
}

void for_each_satisfying_profile(const LocalityRequirement& req,
                                 const std::function<void(const LocalityProfile&)>& visit,
                                 std::uint64_t cap) {
    req.validate();
    const std::uint64_t n = req.length();
    if (n > cap) throw CapError("profile enumeration cap exceeded");
    const std::size_t levels = req.counts.size();
    std::vector<std::uint64_t> req_prefix(levels, 0);
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < levels; ++j) {
        acc += req.counts[j];
        req_prefix[j] = acc;
    }

    std::vector<std::uint64_t> cur(levels, 0);
    // recursively assign counts, largest value first at each level, so the
    // emission order starts from the profile concentrated at locality 1
    std::function<void(std::size_t, std::uint64_t, std::uint64_t)> rec =
        [&](std::size_t level, std::uint64_t remaining, std::uint64_t prefix) {
            if (level + 1 == levels) {
                cur[level] = remaining;
                if (prefix + remaining >= req_prefix[level])
                    visit(LocalityProfile{req.delta, cur});
                return;
            }
            for (std::uint64_t v = remaining + 1; v-- > 0;) {
                if (prefix + v < req_prefix[level]) break;  // dominance can only get worse
                cur[level] = v;
                rec(level + 1, remaining - v, prefix + v);
            }
        };
    rec(0, n, 0);
}

std::vector<LocalityProfile> enumerate_profiles(const LocalityRequirement& req,
                                                std::uint64_t cap) {
    std::vector<LocalityProfile> out;
    for_each_satisfying_profile(req, [&](const LocalityProfile& p) { out.push_back(p); }, cap);
    return out;
}

}  // namespace ulrc
