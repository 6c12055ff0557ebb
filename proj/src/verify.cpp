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

#include "ulrc/verify.hpp"

#include <functional>
#include <sstream>

#include "ulrc/bounds.hpp"
#include "ulrc/rng.hpp"

namespace ulrc {

namespace {

void run_check(std::vector<CheckResult>& out, const std::string& name,
               const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        out.push_back({name, true, detail});
    } catch (const std::exception& e) {
        out.push_back({name, false, e.what()});
    }
}

struct Failure : Error {
    using Error::Error;
};

template <typename A, typename B>
void expect_eq(const A& a, const B& b, const std::string& what) {
    if (!(a == b)) {
        std::ostringstream os;
        os << what << ": " << a << " != " << b;
        throw Failure(os.str());
    }
}

std::vector<std::size_t> mask_to_set(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ULL << i)) out.push_back(i);
    return out;
}

}  // namespace

std::vector<CheckResult> verify_code(const LrcCode& code, const VerifyOptions& options) {
    std::vector<CheckResult> results;
    const std::size_t n = code.length();
    const std::uint64_t k = code.dim();
    const Mat& g = code.generator();
    const LocalityRequirement req = code.requirement();

    run_check(results, "group_point_ranks", [&] {
        for (const auto& group : code.groups()) {
            std::vector<Elt> pts;
            for (auto s : group.symbols) pts.push_back(code.symbol_points()[s]);
            expect_eq(rank_over_base(pts), group.pre_size, "group point rank");
        }
        expect_eq(rank_over_base(code.symbol_points()), code.gab_length(), "total point rank");
        return "per-group and total point ranks";
    });

    run_check(results, "group_subset_ranks", [&] {
        for (const auto& group : code.groups()) {
            const std::size_t w = group.symbols.size();
            for (std::uint64_t mask = 0; mask < (1ULL << w); ++mask) {
                std::vector<std::size_t> subset;
                for (std::size_t s = 0; s < w; ++s)
                    if (mask & (1ULL << s)) subset.push_back(group.symbols[s]);
                expect_eq(code.erank(subset),
                          std::min<std::size_t>(subset.size(), group.pre_size),
                          "in-group subset rank");
            }
        }
        return "min(s, j) rank inside every group";
    });

    run_check(results, "encode_paths_agree", [&] {
        Rng rng(options.seed);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Elt> msg;
            for (std::uint64_t i = 0; i < k; ++i) msg.push_back(code.tower().random(rng));
            auto via_matrix = code.encode(msg);
            auto via_pipeline = code.encode_pipeline(msg);
            for (std::size_t i = 0; i < via_matrix.size(); ++i)
                if (via_matrix[i] != via_pipeline[i]) throw Failure("encoding paths disagree");
        }
        return "matrix and pipeline encodings identical";
    });

    run_check(results, "rank_identity_random_sets", [&] {
        Rng rng(options.seed + 1);
        for (std::size_t trial = 0; trial < options.random_subsets; ++trial) {
            std::uint64_t mask = rng.next() & ((n >= 64 ? ~0ULL : (1ULL << n) - 1));
            auto set = mask_to_set(mask, n);
            std::size_t grank = set.empty() ? 0 : mat_rank(g.select_columns(set));
            expect_eq(grank, std::min<std::uint64_t>(code.erank(set), k), "column rank vs point rank");
        }
        return "rank identity on random symbol sets";
    });

    run_check(results, "distance_matches_closed_form", [&] {
        expect_eq(std::int64_t(code.min_distance()),
                  requirement_distance_bound(req, k).value, "sweep vs closed form");
        return "worst-pattern sweep equals the closed-form bound";
    });

    if (!options.quick) {
        run_check(results, "worst_pattern_greedy_is_exact", [&] {
            for (std::size_t e = 0; e <= n; ++e)
                expect_eq(oracle_worst_pattern(code, e, options.caps),
                          code.worst_pattern(e).remaining_erank, "worst pattern at e");
            return "greedy pattern minimal for every erasure count";
        });

        run_check(results, "distance_optimality", [&] {
            std::size_t exhaustive = oracle_min_distance(g, options.caps);
            expect_eq(exhaustive, code.min_distance(), "exhaustive vs sweep");
            expect_eq(std::int64_t(exhaustive), requirement_distance_bound(req, k).value,
                      "exhaustive vs closed form");
            return "exhaustive distance equals sweep and bound";
        });

        run_check(results, "profile_equality", [&] {
            LocalityProfile profile = oracle_profile(g, code.delta(), options.caps);
            expect_eq(profile.counts.size(), req.counts.size(), "profile length");
            for (std::size_t j = 0; j < req.counts.size(); ++j)
                expect_eq(profile.counts[j], req.counts[j], "profile count");
            return "per-symbol locality counts equal the requirement";
        });

        run_check(results, "witness_localities", [&] {
            // a witness of locality r certifies every member at locality <= r
            std::vector<std::uint64_t> dloc(n);
            std::vector<DlocWitness> witnesses;
            for (std::size_t i = 0; i < n; ++i) {
                witnesses.push_back(oracle_dloc(g, i, code.delta(), options.caps));
                dloc[i] = witnesses.back().locality;
            }
            for (const auto& w : witnesses) {
                expect_eq(w.locality, std::uint64_t(code.groups()[code.group_of(w.symbol)].pre_size),
                          "symbol locality vs group size");
                for (auto member : w.support)
                    if (dloc[member] > w.locality)
                        throw Failure("witness contains a symbol of larger locality");
            }
            return "witness membership respects localities";
        });

        run_check(results, "bound_chain", [&] {
            std::vector<std::vector<std::size_t>> partition(req.counts.size());
            for (const auto& group : code.groups())
                for (auto s : group.symbols)
                    partition[std::size_t(group.pre_size - 1)].push_back(s);
            auto aux = oracle_aux_ranks(g, partition, code.delta());
            std::int64_t exhaustive = std::int64_t(oracle_min_distance(g, options.caps));
            std::int64_t profile_bound =
                profile_distance_bound(LocalityProfile{code.delta(), req.counts}, k).value;
            std::int64_t req_bound = requirement_distance_bound(req, k).value;
            if (!(exhaustive <= aux.distance_bound && aux.distance_bound <= profile_bound &&
                  profile_bound <= req_bound))
                throw Failure("bound chain violated");
            expect_eq(exhaustive, req_bound, "end-to-end equality");
            return "distance <= telescoped <= profile <= requirement, with equality";
        });
    }

    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace ulrc
