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

#ifndef ULRC_ORACLE_HPP
#define ULRC_ORACLE_HPP

#include "ulrc/construction.hpp"

namespace ulrc {

/// Desk-scale limits for the exhaustive searches. Exceeding a cap is an
/// error, never a silent approximation.
struct OracleCaps {
    std::size_t distance_length = 20;       // 2^n column-subset sweep
    std::size_t dloc_length = 14;           // support search
    std::size_t worst_pattern_length = 12;  // survivor-set enumeration
    std::uint64_t mrd_codewords = 1ULL << 20;
};

/// Exact minimum Hamming distance of the code generated by the rows of G
/// (full row rank required): n minus the largest column set whose rank stays
/// below k.
std::size_t oracle_min_distance(const Mat& generator, const OracleCaps& caps = {});

struct DlocWitness {
    std::size_t symbol;                // 0-based
    std::uint64_t locality;            // minimal r
    std::vector<std::size_t> support;  // first (lexicographically least) witness
};

/// Minimal r such that some punctured code of length r+delta-1 containing
/// the symbol has distance exactly delta. Supports are scanned in
/// lexicographic order, so the witness is reproducible.
DlocWitness oracle_dloc(const Mat& generator, std::size_t symbol, std::uint32_t delta,
                        const OracleCaps& caps = {});

/// Per-symbol localities aggregated as counts (index j-1 counts symbols of
/// locality exactly j).
LocalityProfile oracle_profile(const Mat& generator, std::uint32_t delta,
                               const OracleCaps& caps = {});

struct AuxRanks {
    std::vector<std::uint64_t> rank_increments;  // per-class jump of the prefix column rank
    std::uint32_t saturation_level;              // first prefix reaching full rank
    std::int64_t distance_bound;                 // rank-telescoping distance bound
};

/// Telescoping column ranks over an ordered partition of the symbols, plus
/// the distance bound they induce.
AuxRanks oracle_aux_ranks(const Mat& generator,
                          const std::vector<std::vector<std::size_t>>& partition,
                          std::uint32_t delta);

/// Minimum remaining evaluation-point rank over every survivor set of size
/// n - erasures (the exhaustive counterpart of LrcCode::worst_pattern).
std::size_t oracle_worst_pattern(const LrcCode& code, std::size_t erasures,
                                 const OracleCaps& caps = {});

/// Minimum rank weight over all nonzero codewords, by full enumeration.
std::size_t oracle_min_rank_distance(const GabidulinCode& code, const OracleCaps& caps = {});

}  // namespace ulrc

#endif
