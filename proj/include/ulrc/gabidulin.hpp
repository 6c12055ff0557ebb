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

#ifndef ULRC_GABIDULIN_HPP
#define ULRC_GABIDULIN_HPP

#include <optional>
#include <vector>

#include "ulrc/linpoly.hpp"

namespace ulrc {

/// Gabidulin (MRD) code of length n and dimension k over F_{q^t}, built by
/// evaluating linearized polynomials at n points that are linearly
/// independent over F_q. Default points are the polynomial basis
/// 1, y, ..., y^(n-1).
class GabidulinCode {
   public:
    GabidulinCode(const FieldTower& tower, std::size_t n, std::size_t k);
    GabidulinCode(const FieldTower& tower, std::size_t n, std::size_t k, std::vector<Elt> points);

    const FieldTower& tower() const { return tower_; }
    std::size_t length() const { return n_; }
    std::size_t dim() const { return k_; }
    const std::vector<Elt>& points() const { return points_; }

    std::vector<Elt> encode(const std::vector<Elt>& message) const;

    /// Erasure decoding from the surviving positions (nullopt = erased).
    /// Needs at least k survivors; all survivors are verified against the
    /// interpolated polynomial, so corrupted symbols are reported instead of
    /// silently absorbed.
    std::vector<Elt> decode_erasures(const std::vector<std::optional<Elt>>& received) const;

   private:
    FieldTower tower_;
    std::size_t n_, k_;
    std::vector<Elt> points_;
};

}  // namespace ulrc

#endif
