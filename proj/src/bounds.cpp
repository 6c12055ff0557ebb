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

#include "ulrc/bounds.hpp"

#include "ulrc/errors.hpp"

namespace ulrc {

namespace {

std::vector<std::uint64_t> per_locality_dim_caps(const LocalityProfile& profile) {
    std::vector<std::uint64_t> caps;
    caps.reserve(profile.counts.size());
    for (std::size_t j = 0; j < profile.counts.size(); ++j)
        caps.push_back(derive_params(profile.counts[j], j + 1, profile.delta).dim_cap);
    return caps;
}

}  // namespace

std::int64_t classic_distance_bound(std::uint64_t n, std::uint64_t k, std::uint64_t r,
                                    std::uint32_t delta) {
    if (k < 1 || k > n) throw ConstraintError("need 1 <= k <= n");
    if (r < 1) throw ConstraintError("locality must be at least 1");
    if (delta < 2) throw ConstraintError("delta must be at least 2");
    return std::int64_t(n) - std::int64_t(k) + 1 -
           (ceil_div(std::int64_t(k), std::int64_t(r)) - 1) * (std::int64_t(delta) - 1);
}

std::uint64_t profile_dimension_bound(const LocalityProfile& profile) {
    profile.validate();
    std::uint64_t total = 0;
    for (auto cap : per_locality_dim_caps(profile)) total += cap;
    return total;
}

ProfileDistance profile_distance_bound(const LocalityProfile& profile, std::uint64_t k) {
    profile.validate();
    if (k < 1) throw ConstraintError("k must be positive");
    const auto caps = per_locality_dim_caps(profile);
    const std::int64_t delta1 = std::int64_t(profile.delta) - 1;

    std::uint64_t running = 0;
    std::size_t r = 0;  // 1-based once found
    std::uint64_t caps_below = 0, redundancy_below = 0;
    for (std::size_t j = 0; j < caps.size(); ++j) {
        running += caps[j];
        if (running >= k) {
            r = j + 1;
            break;
        }
        caps_below += caps[j];
        redundancy_below += profile.counts[j] - caps[j];
    }
    if (r == 0) throw ConstraintError("k exceeds the profile dimension bound");

    std::int64_t d = std::int64_t(profile.length()) - std::int64_t(k) + 1 -
                     std::int64_t(redundancy_below) -
                     (ceil_div(std::int64_t(k - caps_below), std::int64_t(r)) - 1) * delta1;
    return {d, std::uint32_t(r)};
}

std::int64_t delta2_profile_distance_bound(const LocalityProfile& profile, std::uint64_t k) {
    profile.validate();
    if (profile.delta != 2) throw ConstraintError("this specialization requires delta = 2");
    if (k < 1) throw ConstraintError("k must be positive");
    const std::uint64_t n = profile.length();

    auto parity_groups = [&](std::size_t j) {  // ceil(n_j / (j+1)), 1-based j
        return std::uint64_t(ceil_div(std::int64_t(profile.counts[j - 1]), std::int64_t(j + 1)));
    };

    std::size_t r = 0;
    std::uint64_t running = 0;
    for (std::size_t j = 1; j <= profile.counts.size(); ++j) {
        running += profile.counts[j - 1] - parity_groups(j);
        if (running >= k) {
            r = j;
            break;
        }
    }
    if (r == 0) throw ConstraintError("k exceeds the profile dimension bound");

    std::int64_t parity_below = 0, info_below = 0;
    for (std::size_t j = 1; j < r; ++j) {
        parity_below += std::int64_t(parity_groups(j));
        info_below += std::int64_t(profile.counts[j - 1] - parity_groups(j));
    }
    return std::int64_t(n) - std::int64_t(k) + 2 - parity_below -
           ceil_div(std::int64_t(k) - info_below, std::int64_t(r));
}

RequirementDimension requirement_dimension_bound(const LocalityRequirement& req) {
    req.validate();
    Rational total(0);
    for (std::size_t j = 0; j < req.counts.size(); ++j) {
        auto d = derive_params(req.counts[j], j + 1, req.delta);
        total += d.ratio * Rational(std::int64_t(j + 1));
    }
    return {total, total.floor()};
}

RequirementDistance requirement_distance_bound(const LocalityRequirement& req, std::uint64_t k) {
    req.validate();
    if (k < 1) throw ConstraintError("k must be positive");
    if (std::int64_t(k) > requirement_dimension_bound(req).floor)
        throw ConstraintError("k exceeds the requirement dimension bound");

    const std::size_t rstar = req.counts.size();
    const std::int64_t delta1 = std::int64_t(req.delta) - 1;
    std::vector<std::int64_t> floors(rstar);
    for (std::size_t j = 0; j < rstar; ++j)
        floors[j] = std::int64_t(derive_params(req.counts[j], j + 1, req.delta).ratio.floor());

    // r = 1 + the largest j in [0, rstar-1] whose floor partial sum stays
    // below k; j = 0 (empty sum) always qualifies.
    std::size_t r = 1;
    std::int64_t partial = 0;
    for (std::size_t j = 1; j < rstar; ++j) {
        partial += floors[j - 1] * std::int64_t(j);
        if (partial < std::int64_t(k)) r = j + 1;
    }

    auto evaluate = [&](std::size_t rr) {
        std::int64_t floor_sum = 0, weighted = 0;
        for (std::size_t j = 1; j < rr; ++j) {
            floor_sum += floors[j - 1];
            weighted += floors[j - 1] * std::int64_t(j);
        }
        return std::int64_t(req.length()) - std::int64_t(k) + 1 - floor_sum * delta1 -
               (ceil_div(std::int64_t(k) - weighted, std::int64_t(rr)) - 1) * delta1;
    };

    return {evaluate(r), std::uint32_t(r), evaluate(rstar)};
}

ExhaustiveRequirementBounds requirement_exhaustive_bounds(const LocalityRequirement& req,
                                                          std::optional<std::uint64_t> k,
                                                          std::uint64_t cap) {
    req.validate();
    if (k && *k < 1) throw ConstraintError("k must be positive");
    ExhaustiveRequirementBounds out{};
    bool have_dim = false, have_dist = false;
    for_each_satisfying_profile(
        req,
        [&](const LocalityProfile& profile) {
            const std::uint64_t dim = profile_dimension_bound(profile);
            if (!have_dim || dim > out.dim_bound) {
                out.dim_bound = dim;
                out.dim_witness = profile.counts;
                have_dim = true;
            }
            if (k && *k <= dim) {
                const std::int64_t d = profile_distance_bound(profile, *k).value;
                if (!have_dist || d > *out.dist_bound) {
                    out.dist_bound = d;
                    out.dist_witness = profile.counts;
                    have_dist = true;
                }
            }
        },
        cap);
    if (k && !have_dist)
        throw ConstraintError("no satisfying profile admits dimension k (requirement unsatisfiable)");
    return out;
}

TwoLocalityBounds two_locality_distance_bounds(std::uint64_t j1, std::uint64_t n1,
                                               std::uint64_t j2, std::uint64_t n2,
                                               std::uint32_t delta, std::uint64_t k) {
    if (j1 < 1 || j1 >= j2) throw ConstraintError("need 1 <= j1 < j2");
    if (n1 == 0 || n2 == 0) throw ConstraintError("both locality classes must be nonempty");
    if (delta < 2) throw ConstraintError("delta must be at least 2");
    if (k < 1) throw ConstraintError("k must be positive");
    const std::int64_t n = std::int64_t(n1 + n2);
    const std::int64_t delta1 = std::int64_t(delta) - 1;
    const auto d1 = derive_params(n1, j1, delta);

    auto evaluate = [&](std::int64_t groups) {
        if (groups * std::int64_t(j1) >= std::int64_t(k))
            return n - std::int64_t(k) + 1 -
                   (ceil_div(std::int64_t(k), std::int64_t(j1)) - 1) * delta1;
        return n - std::int64_t(k) + 1 - groups * delta1 -
               (ceil_div(std::int64_t(k) - groups * std::int64_t(j1), std::int64_t(j2)) - 1) *
                   delta1;
    };

    TwoLocalityBounds out{};
    out.corollary = evaluate(d1.ratio.floor());
    out.condition_held = d1.remainder == 0 || d1.remainder >= delta - 1;
    if (out.condition_held) out.tightened = evaluate(d1.ratio.ceil());
    return out;
}

namespace {

void flag_distance(BoundReport& report, std::int64_t value) {
    if (value < 1) report.distance_infeasible = true;
}

}  // namespace

BoundReport make_bound_report(const LocalityRequirement& req, std::optional<std::uint64_t> k,
                              std::uint64_t cap) {
    req.validate();
    BoundReport report;
    report.is_requirement = true;
    report.delta = req.delta;
    report.counts = req.counts;
    report.n = req.length();
    report.k = k;

    report.k_ub_req = requirement_dimension_bound(req);
    auto exhaustive = requirement_exhaustive_bounds(req, std::nullopt, cap);
    report.k_ub_req_prf = exhaustive.dim_bound;
    report.k_ub_req_prf_witness = exhaustive.dim_witness;

    if (k) {
        if (*k < 1 || *k > report.n) {
            report.dimension_infeasible = true;
            return report;
        }
        report.d_classic = classic_distance_bound(report.n, *k, req.counts.size(), req.delta);
        flag_distance(report, *report.d_classic);
        if (std::int64_t(*k) > report.k_ub_req->floor) {
            report.dimension_infeasible = true;
        } else {
            report.d_ub_req = requirement_distance_bound(req, *k);
            flag_distance(report, report.d_ub_req->value);
            try {
                auto with_k = requirement_exhaustive_bounds(req, k, cap);
                report.d_ub_req_prf = with_k.dist_bound;
                report.d_ub_req_prf_witness = with_k.dist_witness;
                flag_distance(report, *report.d_ub_req_prf);
            } catch (const ConstraintError&) {
                // no profile reaches dimension k
                report.dimension_infeasible = true;
            }
        }
        // two-locality shape: exactly one nonzero count below the top one
        std::size_t nonzero_below = 0, j1 = 0;
        for (std::size_t j = 0; j + 1 < req.counts.size(); ++j)
            if (req.counts[j] != 0) {
                ++nonzero_below;
                j1 = j + 1;
            }
        if (nonzero_below == 1 && req.counts.size() >= 2)
            report.two_locality = two_locality_distance_bounds(
                j1, req.counts[j1 - 1], req.counts.size(), req.counts.back(), req.delta, *k);
    }
    return report;
}

BoundReport make_bound_report(const LocalityProfile& profile, std::optional<std::uint64_t> k) {
    profile.validate();
    BoundReport report;
    report.is_requirement = false;
    report.delta = profile.delta;
    report.counts = profile.counts;
    report.n = profile.length();
    report.k = k;
    report.k_ub_prf = profile_dimension_bound(profile);
    if (k) {
        if (*k < 1 || *k > report.n) {
            report.dimension_infeasible = true;
            return report;
        }
        report.d_classic =
            classic_distance_bound(report.n, *k, profile.effective_max_locality(), profile.delta);
        flag_distance(report, *report.d_classic);
        if (*k > *report.k_ub_prf) {
            report.dimension_infeasible = true;
        } else {
            report.d_ub_prf = profile_distance_bound(profile, *k);
            flag_distance(report, report.d_ub_prf->value);
            if (profile.delta == 2) {
                report.d_ub_prf_delta2 = delta2_profile_distance_bound(profile, *k);
                flag_distance(report, *report.d_ub_prf_delta2);
            }
        }
    }
    return report;
}

}  // namespace ulrc
