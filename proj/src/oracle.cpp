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

#include "ulrc/oracle.hpp"

#include <algorithm>
#include <functional>

#include "ulrc/rational.hpp"

namespace ulrc {

namespace {

std::size_t columns_rank(const Mat& g, const std::vector<std::size_t>& cols) {
    if (cols.empty()) return 0;
    return mat_rank(g.select_columns(cols));
}

/// d = n - max{|T| : rank(G|_T) <= code_rank - 1}, over all column subsets.
std::size_t min_distance_core(const Mat& g, std::size_t code_rank) {
    const std::size_t n = g.cols();
    std::size_t best = 0;  // empty set always qualifies
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        std::size_t size = std::size_t(__builtin_popcountll(mask));
        if (size <= best) continue;
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (mask & (1ULL << c)) cols.push_back(c);
        if (columns_rank(g, cols) <= code_rank - 1) best = size;
    }
    return n - best;
}

/// Lexicographic combination walk; visit returns true to stop early.
bool for_each_combination(std::size_t n, std::size_t size,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (size > n) return false;
    if (size == 0) return visit({});
    std::vector<std::size_t> c(size);
    for (std::size_t i = 0; i < size; ++i) c[i] = i;
    while (true) {
        if (visit(c)) return true;
        std::size_t i = size;
        while (i-- > 0) {
            if (c[i] != i + n - size) {
                ++c[i];
                for (std::size_t j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
    }
}

}  // namespace

std::size_t oracle_min_distance(const Mat& generator, const OracleCaps& caps) {
    if (generator.cols() > caps.distance_length)
        throw CapError("code length exceeds the distance-search cap");
    if (mat_rank(generator) != generator.rows())
        throw ConstraintError("generator matrix is rank deficient");
    return min_distance_core(generator, generator.rows());
}

DlocWitness oracle_dloc(const Mat& generator, std::size_t symbol, std::uint32_t delta,
                        const OracleCaps& caps) {
    const std::size_t n = generator.cols();
    if (n > caps.dloc_length) throw CapError("code length exceeds the locality-search cap");
    if (symbol >= n) throw ConstraintError("symbol index out of range");
    if (delta < 2) throw ConstraintError("delta must be at least 2");

    for (std::uint64_t r = 1; r + delta - 1 <= n; ++r) {
        const std::size_t size = std::size_t(r + delta - 1);
        DlocWitness found{};
        bool hit = for_each_combination(n, size, [&](const std::vector<std::size_t>& support) {
            if (!std::binary_search(support.begin(), support.end(), symbol)) return false;
            Mat sub = generator.select_columns(support);
            std::size_t sub_rank = mat_rank(sub);
            if (sub_rank == 0) return false;
            if (min_distance_core(sub, sub_rank) != delta) return false;
            found = DlocWitness{symbol, r, support};
            return true;
        });
        if (hit) return found;
    }
    throw ConstraintError("no locality witness: delta outside the feasible range for this code");
}

LocalityProfile oracle_profile(const Mat& generator, std::uint32_t delta, const OracleCaps& caps) {
    LocalityProfile profile;
    profile.delta = delta;
    for (std::size_t i = 0; i < generator.cols(); ++i) {
        std::uint64_t r = oracle_dloc(generator, i, delta, caps).locality;
        if (profile.counts.size() < r) profile.counts.resize(r, 0);
        ++profile.counts[r - 1];
    }
    return profile;
}

AuxRanks oracle_aux_ranks(const Mat& generator,
                          const std::vector<std::vector<std::size_t>>& partition,
                          std::uint32_t delta) {
    const std::size_t n = generator.cols();
    std::vector<bool> seen(n, false);
    std::size_t covered = 0;
    for (const auto& cls : partition)
        for (auto s : cls) {
            if (s >= n) throw ConstraintError("partition index out of range");
            if (seen[s]) throw ConstraintError("partition classes overlap");
            seen[s] = true;
            ++covered;
        }
    if (covered != n) throw ConstraintError("partition does not cover all symbols");

    const std::size_t k = mat_rank(generator);
    AuxRanks out{};
    std::vector<std::size_t> prefix;
    std::size_t prev_rank = 0;
    std::uint32_t saturation = 0;
    for (std::size_t j = 0; j < partition.size(); ++j) {
        prefix.insert(prefix.end(), partition[j].begin(), partition[j].end());
        std::size_t rank = columns_rank(generator, prefix);
        out.rank_increments.push_back(rank - prev_rank);
        if (saturation == 0 && rank == k) saturation = std::uint32_t(j + 1);
        prev_rank = rank;
    }
    if (saturation == 0) throw ConstraintError("partition never reaches full rank");
    out.saturation_level = saturation;

    std::int64_t redundancy_below = 0, increments_below = 0;
    for (std::size_t j = 0; j + 1 < saturation; ++j) {
        redundancy_below += std::int64_t(partition[j].size()) - std::int64_t(out.rank_increments[j]);
        increments_below += std::int64_t(out.rank_increments[j]);
    }
    out.distance_bound = std::int64_t(n) - std::int64_t(k) + 1 - redundancy_below -
                         (ceil_div(std::int64_t(k) - increments_below, std::int64_t(saturation)) - 1) *
                             (std::int64_t(delta) - 1);
    return out;
}

std::size_t oracle_worst_pattern(const LrcCode& code, std::size_t erasures,
                                 const OracleCaps& caps) {
    const std::size_t n = code.length();
    if (n > caps.worst_pattern_length)
        throw CapError("code length exceeds the worst-pattern cap");
    if (erasures > n) throw ConstraintError("erasure count out of range");
    std::size_t best = n + 1;
    for_each_combination(n, n - erasures, [&](const std::vector<std::size_t>& survivors) {
        best = std::min(best, code.erank(survivors));
        return false;
    });
    return best;
}

std::size_t oracle_min_rank_distance(const GabidulinCode& code, const OracleCaps& caps) {
    const FieldTower& tw = code.tower();
    std::uint64_t field_size = 1;
    for (std::uint32_t i = 0; i < tw.top_degree(); ++i) {
        std::uint64_t next = field_size * tw.q();
        if (next / tw.q() != field_size) throw CapError("field too large for enumeration");
        field_size = next;
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.dim(); ++i) {
        if (total > caps.mrd_codewords / field_size)
            throw CapError("codeword enumeration cap exceeded");
        total *= field_size;
    }

    std::size_t best = code.length() + 1;
    std::vector<Elt> message(code.dim(), tw.zero());
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < code.dim(); ++i) {
            message[i] = tw.from_uint(v % field_size);
            v /= field_size;
        }
        best = std::min(best, rank_over_base(code.encode(message)));
    }
    return best;
}

}  // namespace ulrc
