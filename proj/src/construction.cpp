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

#include "ulrc/construction.hpp"

#include <algorithm>

namespace ulrc {

namespace {

/// Systematic Reed-Solomon generator over F_q: row i holds the Lagrange
/// basis polynomial through the first `dim` evaluation points, evaluated at
/// all `width` points (encodings 0..width-1).
std::vector<std::vector<FqElem>> systematic_rs_generator(const FieldTower& tower,
                                                         std::uint64_t dim, std::uint64_t width) {
    std::vector<FqElem> alpha;
    alpha.reserve(width);
    for (std::uint64_t s = 0; s < width; ++s) alpha.push_back(tower.fq_decode(s));

    std::vector<std::vector<FqElem>> gen(dim, std::vector<FqElem>(width, tower.fq_zero()));
    for (std::uint64_t i = 0; i < dim; ++i) {
        FqElem denom = tower.fq_one();
        for (std::uint64_t u = 0; u < dim; ++u)
            if (u != i) denom = tower.fq_mul(denom, tower.fq_sub(alpha[i], alpha[u]));
        FqElem denom_inv = tower.fq_inv(denom);
        for (std::uint64_t s = 0; s < width; ++s) {
            FqElem numer = tower.fq_one();
            for (std::uint64_t u = 0; u < dim; ++u)
                if (u != i) numer = tower.fq_mul(numer, tower.fq_sub(alpha[s], alpha[u]));
            gen[i][s] = tower.fq_mul(numer, denom_inv);
        }
    }
    return gen;
}

}  // namespace

LrcCode LrcCode::construct(const LrcParams& params) {
    const auto& m = params.multiplicities;
    if (params.delta < 2) throw ConstraintError("delta must be at least 2");
    if (m.empty() || m.back() == 0)
        throw ConstraintError("multiplicities must end with a nonzero entry");
    const std::size_t rstar = m.size();
    std::uint64_t n = 0, n_gab = 0;
    for (std::size_t j = 1; j <= rstar; ++j) {
        n += m[j - 1] * (j + params.delta - 1);
        n_gab += m[j - 1] * j;
    }
    if (params.k < rstar || params.k > n_gab)
        throw ConstraintError("k out of range: need max-locality <= k <= data length");
    if (n_gab > params.tower.top_degree())
        throw ConstraintError("extension degree too small for the data length");
    if (params.tower.q() < rstar + params.delta - 1)
        throw ConstraintError("q too small for the widest local group");

    std::vector<Elt> gab_points;
    gab_points.reserve(n_gab);
    for (std::size_t i = 0; i < n_gab; ++i) gab_points.push_back(params.tower.poly_basis(i));

    std::vector<LocalGroup> groups;
    std::size_t pos = 0;
    for (std::size_t j = 1; j <= rstar; ++j) {
        const std::uint64_t width = j + params.delta - 1;
        auto gen = m[j - 1] > 0 ? systematic_rs_generator(params.tower, j, width)
                                : std::vector<std::vector<FqElem>>{};
        for (std::uint64_t g = 0; g < m[j - 1]; ++g) {
            LocalGroup group;
            group.pre_size = j;
            for (std::uint64_t s = 0; s < width; ++s) group.symbols.push_back(pos++);
            group.generator = gen;
            groups.push_back(std::move(group));
        }
    }
    return assemble(params.tower, params.delta, m, params.k, std::move(groups),
                    std::move(gab_points));
}

LrcCode LrcCode::assemble(const FieldTower& tower, std::uint32_t delta,
                          std::vector<std::uint64_t> multiplicities, std::uint64_t k,
                          std::vector<LocalGroup> groups, std::vector<Elt> gab_points) {
    if (delta < 2) throw ConstraintError("delta must be at least 2");
    if (multiplicities.empty() || multiplicities.back() == 0)
        throw ConstraintError("multiplicities must end with a nonzero entry");
    std::uint64_t n = 0, n_gab = 0;
    std::uint64_t expected_groups = 0;
    for (std::size_t j = 1; j <= multiplicities.size(); ++j) {
        n += multiplicities[j - 1] * (j + delta - 1);
        n_gab += multiplicities[j - 1] * j;
        expected_groups += multiplicities[j - 1];
    }
    if (k < multiplicities.size() || k > n_gab) throw ConstraintError("k out of range");
    if (n_gab > tower.top_degree())
        throw ConstraintError("extension degree too small for the data length");
    if (tower.q() < multiplicities.size() + delta - 1)
        throw ConstraintError("q too small for the widest local group");
    if (groups.size() != expected_groups) throw ConstraintError("group count mismatch");
    std::vector<std::uint64_t> size_counts(multiplicities.size(), 0);
    for (const auto& group : groups) {
        if (group.pre_size < 1 || group.pre_size > multiplicities.size())
            throw ConstraintError("group size out of range");
        ++size_counts[group.pre_size - 1];
    }
    if (size_counts != multiplicities) throw ConstraintError("group sizes disagree with multiplicities");
    if (gab_points.size() != n_gab) throw ConstraintError("wrong number of data points");
    for (const auto& x : gab_points)
        if (!x.tower().same_as(tower)) throw ConstraintError("data point from another tower");
    if (rank_over_base(gab_points) != n_gab)
        throw ConstraintError("data points are not F_q-linearly independent");

    LrcCode code(tower);
    code.delta_ = delta;
    code.m_ = std::move(multiplicities);
    code.k_ = k;
    code.gab_points_ = std::move(gab_points);

    // groups must be laid out by pre_size ascending, partitioning [n]
    std::size_t pos = 0, chunk = 0;
    std::uint64_t prev_size = 1;
    code.symbol_points_.assign(n, tower.zero());
    code.symbol_group_.assign(n, 0);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        auto& group = groups[gi];
        const std::uint64_t j = group.pre_size;
        const std::uint64_t width = j + delta - 1;
        if (j < prev_size) throw ConstraintError("groups must be ordered by size");
        prev_size = j;
        if (group.symbols.size() != width) throw ConstraintError("group width mismatch");
        for (std::uint64_t s = 0; s < width; ++s)
            if (group.symbols[s] != pos + s) throw ConstraintError("groups must tile the codeword");
        if (group.generator.size() != j) throw ConstraintError("local generator row count");
        for (const auto& row : group.generator) {
            if (row.size() != width) throw ConstraintError("local generator column count");
            for (const auto& entry : row)
                (void)tower.fq_encode(entry);  // digit range check
        }
        for (std::uint64_t s = 0; s < width; ++s) {
            Elt y = tower.zero();
            for (std::uint64_t i = 0; i < j; ++i)
                y = y + tower.embed(group.generator[i][s]) * code.gab_points_[chunk + i];
            code.symbol_points_[pos + s] = y;
            code.symbol_group_[pos + s] = gi;
        }
        pos += width;
        chunk += j;
    }
    if (pos != n) throw ConstraintError("groups do not cover the codeword");
    code.groups_ = std::move(groups);

    Mat gen(k, n, tower.zero());
    for (std::size_t c = 0; c < n; ++c) {
        Elt power = code.symbol_points_[c];
        for (std::size_t l = 0; l < k; ++l) {
            gen.set(l, c, power);
            power = power.frobenius(1);
        }
    }
    code.generator_ = std::move(gen);
    return code;
}

std::size_t LrcCode::group_of(std::size_t symbol) const {
    if (symbol >= length()) throw ConstraintError("symbol index out of range");
    return symbol_group_[symbol];
}

LocalityRequirement LrcCode::requirement() const {
    LocalityRequirement req;
    req.delta = delta_;
    for (std::size_t j = 1; j <= m_.size(); ++j)
        req.counts.push_back(m_[j - 1] * (j + delta_ - 1));
    return req;
}

std::vector<Elt> LrcCode::encode(const std::vector<Elt>& message) const {
    if (message.size() != k_) throw ConstraintError("message length mismatch");
    const Mat& g = *generator_;
    std::vector<Elt> out(length(), tower_.zero());
    for (std::size_t c = 0; c < length(); ++c) {
        Elt acc = tower_.zero();
        for (std::size_t l = 0; l < k_; ++l) acc = acc + message[l] * g.at(l, c);
        out[c] = acc;
    }
    return out;
}

std::vector<Elt> LrcCode::encode_pipeline(const std::vector<Elt>& message) const {
    if (message.size() != k_) throw ConstraintError("message length mismatch");
    GabidulinCode gab(tower_, gab_length(), k_, gab_points_);
    std::vector<Elt> inner = gab.encode(message);
    std::vector<Elt> out(length(), tower_.zero());
    std::size_t chunk = 0;
    for (const auto& group : groups_) {
        const std::uint64_t j = group.pre_size;
        for (std::size_t s = 0; s < group.symbols.size(); ++s) {
            Elt acc = tower_.zero();
            for (std::uint64_t i = 0; i < j; ++i)
                acc = acc + tower_.embed(group.generator[i][s]) * inner[chunk + i];
            out[group.symbols[s]] = acc;
        }
        chunk += j;
    }
    return out;
}

std::size_t LrcCode::erank(const std::vector<std::size_t>& symbols) const {
    std::vector<bool> member(length(), false);
    for (auto s : symbols) {
        if (s >= length()) throw ConstraintError("symbol index out of range");
        member[s] = true;
    }
    std::vector<Elt> pts;
    for (std::size_t s = 0; s < length(); ++s)
        if (member[s]) pts.push_back(symbol_points_[s]);
    const std::size_t direct = rank_over_base(pts);

    std::size_t by_groups = 0;
    for (const auto& group : groups_) {
        std::size_t in_group = 0;
        for (auto s : group.symbols)
            if (member[s]) ++in_group;
        by_groups += std::min<std::size_t>(in_group, group.pre_size);
    }
    if (direct != by_groups)
        throw Error("evaluation-point rank disagrees with the per-group formula");
    return direct;
}

Elt LrcCode::local_repair(const std::vector<std::optional<Elt>>& received, std::size_t index,
                          std::size_t* symbols_read) const {
    if (received.size() != length()) throw ConstraintError("received length mismatch");
    if (index >= length()) throw ConstraintError("symbol index out of range");
    const LocalGroup& group = groups_[symbol_group_[index]];
    const std::uint64_t j = group.pre_size;

    // survivors inside the group, excluding the symbol under repair
    std::vector<std::size_t> survivors;  // positions within the group
    std::size_t target_slot = 0;
    for (std::size_t s = 0; s < group.symbols.size(); ++s) {
        if (group.symbols[s] == index) {
            target_slot = s;
            continue;
        }
        if (received[group.symbols[s]]) survivors.push_back(s);
    }
    if (survivors.size() < j)
        throw RepairError("too few survivors in the local group; fall back to global decode");
    survivors.resize(j);

    // group symbols are evaluations of a degree-<j polynomial at the F_q
    // points with encodings 0..width-1; Lagrange-interpolate at the target
    std::vector<Elt> alpha(group.symbols.size(), tower_.zero());
    for (std::size_t s = 0; s < alpha.size(); ++s) alpha[s] = tower_.from_uint(s);
    Elt value = tower_.zero();
    for (std::size_t u : survivors) {
        Elt weight = tower_.one();
        for (std::size_t w : survivors) {
            if (w == u) continue;
            weight = weight * (alpha[target_slot] - alpha[w]) / (alpha[u] - alpha[w]);
        }
        value = value + *received[group.symbols[u]] * weight;
    }
    if (symbols_read) *symbols_read = j;
    return value;
}

std::vector<Elt> LrcCode::global_decode(const std::vector<std::optional<Elt>>& received) const {
    if (received.size() != length()) throw ConstraintError("received length mismatch");
    std::vector<std::size_t> survivors;
    std::vector<std::pair<Elt, Elt>> pairs;
    for (std::size_t s = 0; s < length(); ++s)
        if (received[s]) {
            survivors.push_back(s);
            pairs.emplace_back(symbol_points_[s], *received[s]);
        }
    if (erank(survivors) < k_)
        throw DataLossError("remaining rank below k: pattern not decodable");
    return lp_interpolate(pairs, k_).coeffs();
}

ErasurePattern LrcCode::analyze(std::vector<std::size_t> erased) const {
    std::sort(erased.begin(), erased.end());
    erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
    for (auto s : erased)
        if (s >= length()) throw ConstraintError("symbol index out of range");

    ErasurePattern pattern;
    pattern.erased = std::move(erased);
    std::vector<std::size_t> remaining;
    std::size_t next = 0;
    for (std::size_t s = 0; s < length(); ++s) {
        if (next < pattern.erased.size() && pattern.erased[next] == s) {
            ++next;
            continue;
        }
        remaining.push_back(s);
    }
    pattern.remaining_erank = erank(remaining);
    pattern.remaining_grank =
        remaining.empty() ? 0 : mat_rank(generator_->select_columns(remaining));
    pattern.decodable = pattern.remaining_erank >= k_;
    return pattern;
}

ErasurePattern LrcCode::worst_pattern(std::size_t erasures) const {
    if (erasures > length()) throw ConstraintError("erasure count out of range");
    std::vector<std::size_t> erased;
    for (std::size_t s = length() - erasures; s < length(); ++s) erased.push_back(s);
    return analyze(std::move(erased));
}

std::size_t LrcCode::min_distance() const {
    for (std::size_t e = 0; e <= length(); ++e) {
        // remaining rank of the greedy pattern only decreases with e
        std::size_t rank = worst_pattern(e).remaining_erank;
        if (rank < k_) return e;
    }
    return length() + 1;  // unreachable: e = n leaves rank 0 < k
}

}  // namespace ulrc
