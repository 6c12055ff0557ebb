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

#ifndef ULRC_CONSTRUCTION_HPP
#define ULRC_CONSTRUCTION_HPP

#include <optional>

#include "ulrc/gabidulin.hpp"
#include "ulrc/locality.hpp"

namespace ulrc {

/// Parameters of a layered code: multiplicities[j-1] local groups carry j
/// data symbols each and are expanded to j+delta-1 storage symbols.
struct LrcParams {
    FieldTower tower;
    std::uint32_t delta = 2;
    std::vector<std::uint64_t> multiplicities;  // (m_1, ..., m_{r*}), m_{r*} > 0
    std::uint64_t k = 1;
};

struct LocalGroup {
    std::uint64_t pre_size;                    // j
    std::vector<std::size_t> symbols;          // 0-based codeword positions, contiguous
    std::vector<std::vector<FqElem>> generator;  // j x (j+delta-1) over F_q, systematic
};

struct ErasurePattern {
    std::vector<std::size_t> erased;  // 0-based, ascending
    std::size_t remaining_erank = 0;
    std::size_t remaining_grank = 0;
    bool decodable = false;
};

/// A constructed code: data symbols pass through a Gabidulin precode, the
/// precoded symbols are chunked into local groups, and each group is
/// expanded with a systematic Reed-Solomon code over F_q. Every storage
/// symbol is the evaluation of the data polynomial at a per-symbol point;
/// erasure analysis reduces to the rank of the surviving points over F_q.
///
/// The layout is deterministic: groups are ordered by pre_size ascending and
/// concatenated, Gabidulin points are the polynomial basis, and the local
/// Reed-Solomon code evaluates at the F_q elements with integer encodings
/// 0..j+delta-2 (systematic in the first j positions).
class LrcCode {
   public:
    static LrcCode construct(const LrcParams& params);

    /// Reassembles a code from stored parts (the descriptor file contents).
    /// Shapes and digit ranges are validated; the per-symbol points and the
    /// generator matrix are recomputed from the stored local generators and
    /// Gabidulin points.
    static LrcCode assemble(const FieldTower& tower, std::uint32_t delta,
                            std::vector<std::uint64_t> multiplicities, std::uint64_t k,
                            std::vector<LocalGroup> groups, std::vector<Elt> gab_points);

    const FieldTower& tower() const { return tower_; }
    std::uint32_t delta() const { return delta_; }
    const std::vector<std::uint64_t>& multiplicities() const { return m_; }
    std::uint64_t dim() const { return k_; }
    std::size_t length() const { return symbol_points_.size(); }
    std::size_t gab_length() const { return gab_points_.size(); }
    const std::vector<LocalGroup>& groups() const { return groups_; }
    const std::vector<Elt>& gab_points() const { return gab_points_; }
    const std::vector<Elt>& symbol_points() const { return symbol_points_; }
    const Mat& generator() const { return *generator_; }
    std::size_t group_of(std::size_t symbol) const;

    /// The locality requirement met by construction (and, by the optimality
    /// results, the exact locality profile).
    LocalityRequirement requirement() const;

    /// message * G. Identical to encode_pipeline bit for bit.
    std::vector<Elt> encode(const std::vector<Elt>& message) const;
    /// Step-wise path: Gabidulin encode, chunk, expand each group.
    std::vector<Elt> encode_pipeline(const std::vector<Elt>& message) const;

    /// Rank of the evaluation points carried by the given symbols, computed
    /// both directly and through the per-group min formula; the two routes
    /// must agree.
    std::size_t erank(const std::vector<std::size_t>& symbols) const;

    /// Recovers symbol `index` from its group (reads exactly pre_size
    /// surviving group symbols). RepairError when too few survive.
    Elt local_repair(const std::vector<std::optional<Elt>>& received, std::size_t index,
                     std::size_t* symbols_read = nullptr) const;

    /// Full message recovery from the surviving symbols. DataLossError when
    /// the remaining rank is below k; survivors inconsistent with a single
    /// data polynomial are reported as corruption.
    std::vector<Elt> global_decode(const std::vector<std::optional<Elt>>& received) const;

    ErasurePattern analyze(std::vector<std::size_t> erased) const;

    /// Rank-minimizing pattern for the given erasure count: survivors fill
    /// the smallest groups first (ties by group index), which in this layout
    /// is simply the first n-e positions.
    ErasurePattern worst_pattern(std::size_t erasures) const;

    /// Exact minimum distance, via the worst-pattern sweep.
    std::size_t min_distance() const;

   private:
    explicit LrcCode(FieldTower tower) : tower_(std::move(tower)) {}
    FieldTower tower_;
    std::uint32_t delta_ = 2;
    std::vector<std::uint64_t> m_;
    std::uint64_t k_ = 1;
    std::vector<LocalGroup> groups_;
    std::vector<Elt> gab_points_;
    std::vector<Elt> symbol_points_;
    std::vector<std::size_t> symbol_group_;  // symbol -> group index
    std::optional<Mat> generator_;
};

}  // namespace ulrc

#endif
